#pragma once

#include <cstdint>
#include <string>

#include "hhgap/errors.hpp"
#include "hhgap/numeric.hpp"

namespace hhgap {

// Coefficient values are stored uniformly as Rat; the ring descriptor
// interprets them (F_p residues live in [0,p) with denominator 1, Z values
// are integers).
struct CoeffRing {
    enum class Kind { Q, Fp, Z };
    Kind kind = Kind::Q;
    int64_t p = 0;  // modulus when kind == Fp

    bool is_field() const { return kind != Kind::Z; }

    Rat canon(const Rat& v) const {
        if (kind == Kind::Fp) {
            if (!v.is_integer()) {
                // invert the denominator mod p
                return canon(Rat(v.num()) * inv(Rat(v.den())));
            }
            int64_t r = v.num() % p;
            if (r < 0) r += p;
            return Rat(r);
        }
        if (kind == Kind::Z && !v.is_integer())
            throw UnsupportedRing("non-integer coefficient over Z");
        return v;
    }
    Rat add(const Rat& a, const Rat& b) const { return canon(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return canon(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return canon(a * b); }
    Rat neg(const Rat& a) const { return canon(-a); }
    bool is_unit(const Rat& a) const {
        if (a.is_zero()) return false;
        if (kind == Kind::Z) return a == Rat(1) || a == Rat(-1);
        return true;
    }
    Rat inv(const Rat& a) const {
        if (a.is_zero()) throw std::domain_error("inverse of zero");
        if (kind == Kind::Q) return Rat(1) / a;
        if (kind == Kind::Z) {
            if (!is_unit(a)) throw UnsupportedRing("non-unit inverse over Z");
            return a;
        }
        // F_p: extended Euclid on the canonical residue
        int64_t r = canon(a).num();
        int64_t t = 0, newt = 1, rr = p, newr = r;
        while (newr != 0) {
            int64_t q = rr / newr;
            int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = rr - q * newr;
            rr = newr;
            newr = tmp;
        }
        if (rr != 1) throw std::domain_error("non-invertible residue");
        if (t < 0) t += p;
        return Rat(t);
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::Q: return "Q";
            case Kind::Z: return "Z";
            case Kind::Fp: return "Fp:" + std::to_string(p);
        }
        return "?";
    }
    static CoeffRing rationals() { return CoeffRing{Kind::Q, 0}; }
    static CoeffRing integers() { return CoeffRing{Kind::Z, 0}; }
    static CoeffRing prime_field(int64_t p) { return CoeffRing{Kind::Fp, p}; }

    friend bool operator==(const CoeffRing& a, const CoeffRing& b) {
        return a.kind == b.kind && a.p == b.p;
    }
    friend bool operator!=(const CoeffRing& a, const CoeffRing& b) {
        return !(a == b);
    }
};

}  // namespace hhgap
