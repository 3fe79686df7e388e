#include "hhgap/report.hpp"

#include <sstream>

namespace hhgap {

json descriptor_json(const ModuleDescriptor& d) {
    json j;
    j["display"] = d.to_string();
    j["zero"] = d.is_zero();
    if (d.kind == ModuleDescriptor::Kind::ZFactors) {
        j["kind"] = "invariant-factors";
        j["factors"] = d.factors;
    } else {
        j["kind"] = "k-dims";
        json dims = json::object();
        for (const auto& [deg, v] : d.dims)
            if (v != 0) dims[std::to_string(deg)] = v;
        j["dims"] = dims;
        j["graded"] = d.graded;
        if (d.truncated) j["cap"] = d.cap;
    }
    if (d.nu >= 0) j["nu"] = d.nu;
    return j;
}

json table_json(const HochschildTable& t) {
    json j;
    j["direction"] = t.cohomology ? "cohomology" : "homology";
    j["strategy"] = strategy_name(t.used);
    json entries = json::array();
    for (const auto& e : t.entries) {
        json je;
        je["degree"] = e.degree;
        je["descriptor"] = descriptor_json(e.descriptor);
        entries.push_back(je);
    }
    j["entries"] = entries;
    j["caveats"] = t.caveats;
    return j;
}

json verdict_json(const GapVerdict& v) {
    json j;
    j["outcome"] = v.outcome;
    j["criterion"] = v.criterion;
    if (v.t >= 0) {
        j["t"] = v.t;
        j["u"] = v.u;
    }
    j["interval_length"] = v.interval_length;
    j["caveats"] = v.caveats;
    return j;
}

json complex_json(const FreeComplex& c) {
    json j;
    j["cohomological"] = c.cohomological;
    json degrees = json::array();
    for (const auto& [n, r] : c.ranks) {
        json jd;
        jd["degree"] = n;
        jd["rank"] = r;
        if (c.gen_degrees.count(n)) jd["internal_degrees"] = c.degrees_at(n);
        auto it = c.diff.find(n);
        if (it != c.diff.end()) {
            json rows = json::array();
            for (size_t r2 = 0; r2 < it->second.rows(); ++r2) {
                json row = json::array();
                for (size_t cc = 0; cc < it->second.cols(); ++cc)
                    row.push_back(c.base->poly_str(it->second.at(r2, cc)));
                rows.push_back(row);
            }
            jd["differential"] = rows;
        }
        degrees.push_back(jd);
    }
    j["terms"] = degrees;
    return j;
}

json closedness_json(const ClosednessCertificate& cert) {
    json j;
    j["p"] = cert.p;
    j["cutoff"] = cert.cutoff;
    j["eps2"] = cert.c;
    j["minimal"] = cert.minimal;
    j["closed"] = cert.closed;
    j["socle_shortcut_used"] = cert.socle_shortcut_used;
    if (cert.socle_shortcut_used)
        j["socle_cutoff_insufficient"] = cert.socle_cutoff_insufficient;
    json rows = json::array();
    for (const auto& row : cert.rows) {
        json jr;
        jr["degree"] = row.degree;
        jr["stage_rank"] = row.g_rank;
        jr["tor_rank"] = row.tor_rank;
        jr["injective"] = row.injective;
        rows.push_back(jr);
    }
    j["degrees"] = rows;
    return j;
}

json deviations_json(const Deviations& d) {
    json j;
    j["eps2"] = d.eps2;
    j["eps3"] = d.eps3;
    j["kernel_idempotent_split"] = d.kernel_idempotent_split;
    if (d.internal_cap >= 0) j["internal_cap"] = d.internal_cap;
    return j;
}

json lower_bounds_json(const LowerBoundReport& rep) {
    json j;
    j["c"] = rep.c;
    j["d"] = rep.d;
    j["inf_degree"] = rep.i;
    j["m"] = rep.m;
    j["all_hold"] = rep.all_hold;
    j["all_known"] = rep.all_known;
    json checks = json::array();
    for (const auto& ch : rep.checks) {
        json jc;
        jc["degree"] = ch.degree;
        jc["family"] = ch.family;
        jc["bound"] = ch.bound;
        if (ch.known) {
            jc["nu"] = ch.nu;
            jc["holds"] = ch.holds;
        } else {
            jc["nu"] = "unknown";
        }
        checks.push_back(jc);
    }
    j["checks"] = checks;
    j["equalities"] = rep.equalities;
    return j;
}

json lambda_json(const LambdaReport& rep) {
    json j;
    j["degree"] = rep.degree;
    j["direction"] = rep.cohomology ? "cohomology" : "homology";
    j["domain"] = descriptor_json(rep.domain);
    j["codomain"] = descriptor_json(rep.codomain);
    j["flag"] = rep.flag;
    j["reason"] = rep.reason;
    return j;
}

std::string complex_text(const FreeComplex& c) {
    std::ostringstream os;
    for (const auto& [n, r] : c.ranks) {
        os << "degree " << n << ": rank " << r << "\n";
        auto it = c.diff.find(n);
        if (it == c.diff.end()) continue;
        const PolyMatrix& m = it->second;
        for (size_t rr = 0; rr < m.rows(); ++rr) {
            os << "  [";
            for (size_t cc = 0; cc < m.cols(); ++cc) {
                if (cc) os << ", ";
                os << c.base->poly_str(m.at(rr, cc));
            }
            os << "]\n";
        }
    }
    return os.str();
}

std::string table_text(const HochschildTable& t) {
    std::ostringstream os;
    const char* label = t.cohomology ? "HH^" : "HH_";
    for (const auto& e : t.entries) {
        os << label << e.degree << " = " << e.descriptor.to_string();
        if (e.descriptor.nu >= 0) os << "   (nu = " << e.descriptor.nu << ")";
        os << "\n";
    }
    if (!t.caveats.empty()) {
        os << "caveats:\n";
        for (const auto& cv : t.caveats) os << "  - " << cv << "\n";
    }
    return os.str();
}

uint64_t fnv1a(const std::string& bytes) {
    uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

std::string fnv1a_hex(const std::string& bytes) {
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx",
             static_cast<unsigned long long>(fnv1a(bytes)));
    return std::string(buf);
}

}  // namespace hhgap
