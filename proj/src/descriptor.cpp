#include "hhgap/descriptor.hpp"

#include <algorithm>

namespace hhgap {

bool ModuleDescriptor::is_zero() const {
    if (kind == Kind::ZFactors) {
        for (int64_t f : factors)
            if (f != 1) return false;
        return true;
    }
    for (const auto& [d, v] : dims)
        if (v != 0) return false;
    return true;
}

int64_t ModuleDescriptor::total_dim() const {
    if (truncated) return -1;
    int64_t t = 0;
    for (const auto& [d, v] : dims) t += v;
    return t;
}

std::string ModuleDescriptor::to_string() const {
    if (kind == Kind::ZFactors) {
        if (is_zero()) return "0";
        std::string out;
        int64_t free_rank = 0;
        for (int64_t f : factors) {
            if (f == 0) {
                ++free_rank;
                continue;
            }
            if (f == 1) continue;
            if (!out.empty()) out += " + ";
            out += "Z/" + std::to_string(f);
        }
        if (free_rank > 0) {
            std::string fr = "Z^" + std::to_string(free_rank);
            out = out.empty() ? fr : fr + " + " + out;
        }
        return out;
    }
    if (is_zero()) return "0";
    if (!graded) return "k^" + std::to_string(dims.count(0) ? dims.at(0) : 0);
    int64_t lo = dims.begin()->first;
    int64_t hi = dims.rbegin()->first;
    std::string out = "k-dims";
    if (lo != 0) out += " (from degree " + std::to_string(lo) + ")";
    out += " [";
    for (int64_t d = lo; d <= hi; ++d) {
        if (d != lo) out += ",";
        auto it = dims.find(d);
        out += std::to_string(it == dims.end() ? 0 : it->second);
    }
    out += "]";
    if (truncated) out += " (computed through degree " + std::to_string(cap) + ")";
    return out;
}

bool ModuleDescriptor::equals(const ModuleDescriptor& other) const {
    if (kind != other.kind) return false;
    if (kind == Kind::ZFactors) {
        auto canon = [](const std::vector<int64_t>& f) {
            std::vector<int64_t> out;
            for (int64_t v : f)
                if (v != 1) out.push_back(v);
            std::sort(out.begin(), out.end(), [](int64_t a, int64_t b) {
                if ((a == 0) != (b == 0)) return b == 0;  // zeros last
                return a < b;
            });
            return out;
        };
        return canon(factors) == canon(other.factors);
    }
    if (graded != other.graded) return false;
    int64_t limit = -1;
    if (truncated || other.truncated) {
        if (cap < 0 || other.cap < 0) return false;
        limit = std::min(cap, other.cap);
    }
    auto within = [&](const std::map<int64_t, int64_t>& m, int64_t d) {
        auto it = m.find(d);
        return it == m.end() ? 0 : it->second;
    };
    std::map<int64_t, int64_t> all;
    for (auto& [d, v] : dims) all[d] = 1;
    for (auto& [d, v] : other.dims) all[d] = 1;
    for (auto& [d, _] : all) {
        if (limit >= 0 && d > limit) continue;
        if (within(dims, d) != within(other.dims, d)) return false;
    }
    return true;
}

ModuleDescriptor ModuleDescriptor::zero_field() {
    ModuleDescriptor m;
    m.kind = Kind::FieldDims;
    m.nu = 0;
    return m;
}

ModuleDescriptor ModuleDescriptor::from_factors(std::vector<int64_t> f) {
    ModuleDescriptor m;
    m.kind = Kind::ZFactors;
    for (int64_t v : f)
        if (v != 1) m.factors.push_back(v);
    std::sort(m.factors.begin(), m.factors.end(), [](int64_t a, int64_t b) {
        if ((a == 0) != (b == 0)) return b == 0;
        return a < b;
    });
    return m;
}

}  // namespace hhgap
