#pragma once

#include <memory>
#include <random>
#include <string>

#include "hhgap/io.hpp"
#include "hhgap/presentation.hpp"

namespace hhgap::test {

inline PresentationPtr make_pres(const std::string& text) {
    return std::make_shared<AlgebraPresentation>(
        parse_presentation_string(text).algebra);
}

inline PresentationPtr rationals_in(const std::string& vars_csv,
                                    const std::string& rels_csv = "") {
    std::string vars = "[";
    std::string cur;
    for (char c : vars_csv + ",") {
        if (c == ',') {
            if (!cur.empty()) {
                if (vars.size() > 1) vars += ", ";
                vars += "\"" + cur + "\"";
            }
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    vars += "]";
    std::string rels = "[";
    cur.clear();
    for (char c : rels_csv + ";") {
        if (c == ';') {
            if (!cur.empty()) {
                if (rels.size() > 1) rels += ", ";
                rels += "\"" + cur + "\"";
            }
            cur.clear();
        } else {
            cur += c;
        }
    }
    rels += "]";
    return make_pres("ring = \"Q\"\nvars = " + vars + "\nrelations = " + rels +
                     "\n");
}

// Deterministic random polynomial over the presentation (small support).
inline Polynomial random_poly(const AlgebraPresentation& pres,
                              std::mt19937& rng, int max_terms = 4,
                              int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(0, max_exp);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<Term> ts;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m(pres.nvars());
        for (size_t v = 0; v < pres.nvars(); ++v) m[v] = expd(rng);
        ts.push_back({std::move(m), Rat(coeff(rng))});
    }
    return pres.ops().normalize(std::move(ts));
}

}  // namespace hhgap::test
