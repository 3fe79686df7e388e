#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hhgap {

// Canonical, resolution-independent description of a computed module:
// invariant factors over Z, or k-dimensions (per internal degree when
// graded) over a field. This is the equality notion used by the golden
// tests.
struct ModuleDescriptor {
    enum class Kind { ZFactors, FieldDims };
    Kind kind = Kind::FieldDims;

    // ZFactors: d_1 | d_2 | ... with 1s dropped and 0 meaning a free rank.
    std::vector<int64_t> factors;

    // FieldDims: internal degree -> k-dimension (zero entries dropped);
    // ungraded modules use the single degree 0.
    std::map<int64_t, int64_t> dims;
    bool graded = false;
    int64_t cap = -1;      // dims are exhaustive for degrees <= cap
    bool truncated = false;  // nonzero dims may exist beyond cap

    int64_t nu = -1;  // minimal number of generators; -1 when not computed

    bool is_zero() const;
    int64_t total_dim() const;  // field case; -1 when truncated
    std::string to_string() const;
    bool equals(const ModuleDescriptor& other) const;

    static ModuleDescriptor zero_field();
    static ModuleDescriptor from_factors(std::vector<int64_t> f);
};

}  // namespace hhgap
