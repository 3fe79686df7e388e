#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hhgap/io.hpp"
#include "hhgap/report.hpp"

namespace py = pybind11;
using namespace hhgap;

namespace {

// Python-facing handle: the parsed file (algebra plus optional
// target_relations) and the shared presentation.
struct Algebra {
    PresentationFile pf;
    PresentationPtr pres;

    static Algebra from_string(const std::string& text) {
        Algebra a;
        a.pf = parse_presentation_string(text);
        a.pres = std::make_shared<AlgebraPresentation>(a.pf.algebra);
        return a;
    }
    static Algebra from_file(const std::string& path) {
        Algebra a;
        a.pf = parse_presentation_file(path);
        a.pres = std::make_shared<AlgebraPresentation>(a.pf.algebra);
        return a;
    }
};

HomologyOptions options(int64_t internal_cap) {
    HomologyOptions o;
    o.internal_cap = internal_cap;
    return o;
}

HomologyOptions diagonal_options(const Algebra& a, int64_t internal_cap) {
    HomologyOptions o = options(internal_cap);
    const AlgebraPresentation& s = *a.pres;
    if (s.nvars() == 1 && s.relations().size() == 1) {
        const Polynomial& f = s.relations().front();
        std::vector<Rat> coeffs(f.degree_in(0) + 1, Rat(0));
        for (const auto& t : f.terms()) coeffs[t.mono[0]] = t.coeff;
        o.action = MonogenicAction{Polynomial::variable(0, 2), coeffs};
    }
    return o;
}

Surjection surjection_of(const Algebra& a) {
    if (!a.pf.target_relations.empty())
        return Surjection::make(a.pres, a.pf.target_relations);
    std::vector<Polynomial> vars;
    for (size_t v = 0; v < a.pres->nvars(); ++v)
        vars.push_back(Polynomial::variable(v, a.pres->nvars()));
    return Surjection::make(a.pres, vars);
}

std::string table_payload(const Algebra& a, int max_degree,
                          const std::string& strategy, int64_t internal_cap,
                          bool cohomology) {
    ModulePresentation m = ModulePresentation::free_rank_one(a.pres);
    HochschildTable t =
        cohomology ? hochschild_cohomology(a.pres, m, max_degree,
                                           strategy_from_name(strategy),
                                           options(internal_cap))
                   : hochschild_homology(a.pres, m, max_degree,
                                         strategy_from_name(strategy),
                                         options(internal_cap));
    return table_json(t).dump();
}

std::string smooth_payload(const Algebra& a, int max_degree,
                           int64_t internal_cap) {
    HomologyOptions o = options(internal_cap);
    ModulePresentation m = ModulePresentation::free_rank_one(a.pres);
    int64_t dim = ring_dimension(*a.pres);
    int64_t depth = ring_depth(a.pres, o);
    HochschildTable hh = hochschild_homology(a.pres, m, max_degree,
                                             Strategy::Auto, o);
    HochschildTable hc = hochschild_cohomology(a.pres, m, max_degree,
                                               Strategy::Auto, o);
    GapQuery qh{&hh, dim, depth, dim, true};
    GapQuery qc{&hc, dim, depth, dim, true};
    GapVerdict vh = check_homological_gaps(qh);
    GapVerdict vc = check_cohomological_gaps(qc);
    json j;
    j["dim"] = dim;
    j["depth"] = depth;
    j["homology"] = verdict_json(vh);
    j["cohomology"] = verdict_json(vc);
    j["certified"] = vh.certified() || vc.certified();
    return j.dump();
}

std::string deviations_payload(const Algebra& a, int64_t internal_cap) {
    Deviations d = deviations(surjection_of(a), options(internal_cap));
    return deviations_json(d).dump();
}

std::string closed_payload(const Algebra& a, int p, int cutoff,
                           int64_t internal_cap) {
    ClosednessCertificate cert =
        is_p_closed(surjection_of(a), p, cutoff, options(internal_cap));
    return closedness_json(cert).dump();
}

std::string ci_payload(const Algebra& a, int64_t internal_cap) {
    EnvelopingPresentation env = enveloping(a.pres);
    Surjection phi = Surjection::make(env.env, env.diagonal_gens);
    CiVerdict v = ci_certificate(phi, diagonal_options(a, internal_cap));
    json j;
    j["ci"] = v.ci;
    j["note"] = v.note;
    j["deviations"] = deviations_json(v.devs);
    return j.dump();
}

}  // namespace

PYBIND11_MODULE(_hhgap, m) {
    m.doc() = "exact Hochschild (co)homology and smoothness certificates";

    py::class_<Algebra>(m, "Algebra")
        .def_static("from_string", &Algebra::from_string)
        .def_static("from_file", &Algebra::from_file)
        .def_property_readonly(
            "ring", [](const Algebra& a) { return a.pres->ring().to_string(); })
        .def_property_readonly(
            "vars", [](const Algebra& a) { return a.pres->vars(); })
        .def_property_readonly(
            "is_graded", [](const Algebra& a) { return a.pres->is_graded(); })
        .def("canonical_print",
             [](const Algebra& a) { return print_presentation(a.pf); })
        .def("__repr__", [](const Algebra& a) {
            return "<hhgap.Algebra " + a.pres->ring().to_string() + "[" +
                   std::to_string(a.pres->nvars()) + " vars, " +
                   std::to_string(a.pres->relations().size()) + " relations]>";
        });

    m.def("hochschild_homology_json", &table_payload, py::arg("algebra"),
          py::arg("max_degree") = 8, py::arg("strategy") = "auto",
          py::arg("internal_cap") = 12, py::arg("cohomology") = false);
    m.def("bar_oracle",
          [](const Algebra& a, int max_degree, bool cohomology) {
              return bar_oracle(a.pres,
                                ModulePresentation::free_rank_one(a.pres),
                                max_degree, cohomology);
          },
          py::arg("algebra"), py::arg("max_degree") = 6,
          py::arg("cohomology") = false);
    m.def("smooth_check_json", &smooth_payload, py::arg("algebra"),
          py::arg("max_degree") = 8, py::arg("internal_cap") = 12);
    m.def("deviations_json", &deviations_payload, py::arg("algebra"),
          py::arg("internal_cap") = 12);
    m.def("is_p_closed_json", &closed_payload, py::arg("algebra"),
          py::arg("p") = 2, py::arg("cutoff") = 8,
          py::arg("internal_cap") = 12);
    m.def("ci_certificate_json", &ci_payload, py::arg("algebra"),
          py::arg("internal_cap") = 12);
}
