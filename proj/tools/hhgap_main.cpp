#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "hhgap/io.hpp"
#include "hhgap/report.hpp"

using namespace hhgap;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotMet = 2;

struct CommonArgs {
    std::string algebra;
    std::string module = "S";
    std::string format = "text";
    std::string strategy = "auto";
    int max_degree = 8;
    int cutoff = 8;
    int64_t internal_cap = 12;
};

void add_common(CLI::App* app, CommonArgs& args, bool with_module = true) {
    app->add_option("--algebra", args.algebra, "algebra presentation file")
        ->required();
    if (with_module)
        app->add_option("--module", args.module,
                        "coefficient module: S or a module file");
    app->add_option("--max-degree", args.max_degree, "top homological degree");
    app->add_option("--strategy", args.strategy,
                    "auto|periodic|koszul|tate|bar");
    app->add_option("--format", args.format, "text|json");
    app->add_option("--internal-cap", args.internal_cap,
                    "internal degree cap for graded computations");
}

struct Loaded {
    PresentationFile pf;
    PresentationPtr pres;
    ModulePresentation module;
};

Loaded load(const CommonArgs& args) {
    Loaded l;
    l.pf = parse_presentation_file(args.algebra);
    l.pres = std::make_shared<AlgebraPresentation>(l.pf.algebra);
    if (args.module == "S") {
        l.module = ModulePresentation::free_rank_one(l.pres);
    } else {
        ModuleFileData mf = parse_module_file(args.module);
        l.module.base = l.pres;
        for (int d : mf.generator_degrees)
            l.module.gen_degrees.push_back(d);
        l.module.relations = PolyMatrix(mf.generator_degrees.size(),
                                        mf.relation_columns.size());
        for (size_t c = 0; c < mf.relation_columns.size(); ++c) {
            const auto& col = mf.relation_columns[c];
            if (col.size() != mf.generator_degrees.size())
                throw ParseError("relation column length mismatch");
            for (size_t r = 0; r < col.size(); ++r)
                l.module.relations.at(r, c) =
                    normal_form(l.pres->parse_poly(col[r]), *l.pres);
        }
    }
    return l;
}

HomologyOptions options_for(const CommonArgs& args) {
    HomologyOptions o;
    o.internal_cap = args.internal_cap;
    return o;
}

Surjection surjection_for(const Loaded& l) {
    if (!l.pf.target_relations.empty())
        return Surjection::make(l.pres, l.pf.target_relations);
    // default: the augmentation onto the residue field
    std::vector<Polynomial> vars;
    for (size_t v = 0; v < l.pres->nvars(); ++v)
        vars.push_back(Polynomial::variable(v, l.pres->nvars()));
    return Surjection::make(l.pres, vars);
}

void emit(const CommonArgs& args, const json& payload,
          const std::string& text) {
    if (args.format == "json")
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << text;
}

json job_echo(const std::string& command, const CommonArgs& args) {
    json j;
    j["command"] = command;
    j["algebra"] = args.algebra;
    j["module"] = args.module;
    j["max_degree"] = args.max_degree;
    j["strategy"] = args.strategy;
    j["internal_cap"] = args.internal_cap;
    return j;
}

int run_table(const CommonArgs& args, bool cohomology) {
    Loaded l = load(args);
    HochschildTable t =
        cohomology
            ? hochschild_cohomology(l.pres, l.module, args.max_degree,
                                    strategy_from_name(args.strategy),
                                    options_for(args))
            : hochschild_homology(l.pres, l.module, args.max_degree,
                                  strategy_from_name(args.strategy),
                                  options_for(args));
    json j = job_echo(cohomology ? "hcoh" : "hh", args);
    j["result"] = table_json(t);
    emit(args, j, table_text(t));
    return kExitOk;
}

int run_resolve(const CommonArgs& args, const std::string& kind) {
    Loaded l = load(args);
    HomologyOptions opts = options_for(args);
    FreeComplex c;
    std::vector<std::string> caveats;
    if (kind == "koszul" || kind == "tate") {
        Surjection phi = surjection_for(l);
        if (l.pres->is_graded()) {
            std::vector<Polynomial> mins =
                minimal_ideal_generators(*l.pres, phi.kernel_gens);
            if (mins.size() != phi.kernel_gens.size()) {
                caveats.push_back("kernel generators minimalized");
                phi = Surjection::make(l.pres, mins);
            }
        }
        TateStage st =
            tate_stage(phi, kind == "koszul" ? 1 : 2, args.cutoff, opts);
        c = st.complex;
        caveats.push_back("eps2 = " + std::to_string(st.eps2()) +
                          ", eps3 at this stage = " +
                          std::to_string(st.eps3()));
    } else if (kind == "minimal") {
        Surjection phi = surjection_for(l);
        ModulePresentation target;
        target.base = l.pres;
        target.gen_degrees = {0};
        target.relations = PolyMatrix(1, phi.kernel_gens.size());
        for (size_t i = 0; i < phi.kernel_gens.size(); ++i)
            target.relations.at(0, i) = phi.kernel_gens[i];
        c = minimal_free_resolution(target, args.cutoff, opts);
    } else {
        throw ParseError("unknown resolve kind '" + kind + "'");
    }
    json j = job_echo("resolve", args);
    j["kind"] = kind;
    j["cutoff"] = args.cutoff;
    j["result"] = complex_json(c);
    j["caveats"] = caveats;
    emit(args, j, complex_text(c));
    return kExitOk;
}

int run_deviations(const CommonArgs& args) {
    Loaded l = load(args);
    Surjection phi = surjection_for(l);
    Deviations d = deviations(phi, options_for(args));
    json j = job_echo("deviations", args);
    j["result"] = deviations_json(d);
    std::string text = "eps2 = " + std::to_string(d.eps2) +
                       "\neps3 = " + std::to_string(d.eps3) + "\n";
    if (d.kernel_idempotent_split)
        text += "kernel is idempotent-split (locally zero)\n";
    emit(args, j, text);
    return kExitOk;
}

int run_closed(const CommonArgs& args, int p) {
    Loaded l = load(args);
    Surjection phi = surjection_for(l);
    ClosednessCertificate cert =
        is_p_closed(phi, p, args.cutoff, options_for(args));
    json j = job_echo("closed", args);
    j["p"] = p;
    j["cutoff"] = args.cutoff;
    j["result"] = closedness_json(cert);
    std::string text = std::to_string(p) + "-closed up to degree " +
                       std::to_string(args.cutoff) + ": " +
                       (cert.closed ? "true" : "false") + "\n";
    for (const auto& row : cert.rows)
        text += "  degree " + std::to_string(row.degree) + ": rank " +
                std::to_string(row.g_rank) + " -> Tor rank " +
                std::to_string(row.tor_rank) +
                (row.injective ? " (injective)" : " (NOT injective)") + "\n";
    emit(args, j, text);
    return cert.closed ? kExitOk : kExitNotMet;
}

int run_smooth_check(const CommonArgs& args, const std::string& direction,
                     int interval_override) {
    Loaded l = load(args);
    HomologyOptions opts = options_for(args);
    int64_t dim = ring_dimension(*l.pres);
    int64_t depth = ring_depth(l.pres, opts);

    json j = job_echo("smooth-check", args);
    j["dim"] = dim;
    j["depth"] = depth;
    std::string text;
    bool certified = false;
    bool experimental = interval_override >= 1;

    auto run_one = [&](bool cohomology) {
        HochschildTable t =
            cohomology ? hochschild_cohomology(
                             l.pres, l.module, args.max_degree,
                             strategy_from_name(args.strategy), opts)
                       : hochschild_homology(
                             l.pres, l.module, args.max_degree,
                             strategy_from_name(args.strategy), opts);
        GapQuery q;
        q.table = &t;
        q.dim_s = dim;
        q.depth_m = depth;
        q.dim_supp_m = dim;
        q.diagonal = true;
        GapVerdict v = cohomology
                           ? check_cohomological_gaps(q, interval_override)
                           : check_homological_gaps(q);
        std::string key = cohomology ? "cohomology" : "homology";
        j["result"][key]["table"] = table_json(t);
        j["result"][key]["verdict"] = verdict_json(v);
        text += key + ": " + v.outcome;
        if (v.t >= 0)
            text += " (t = " + std::to_string(v.t) +
                    ", u = " + std::to_string(v.u) + ", interval length " +
                    std::to_string(v.interval_length) + ")";
        text += "\n";
        if (v.certified()) certified = true;
    };
    if (direction == "homology" || direction == "both") run_one(false);
    if (direction == "cohomology" || direction == "both") run_one(true);
    if (experimental) {
        j["experimental"] = true;
        text += "experimental interval override: result carries no "
                "certification semantics\n";
    }
    emit(args, j, text);
    if (experimental) return kExitNotMet;
    return certified ? kExitOk : kExitNotMet;
}

int run_oracle(const CommonArgs& args, const std::string& direction) {
    Loaded l = load(args);
    std::vector<int64_t> dims = bar_oracle(l.pres, l.module, args.max_degree,
                                           direction == "cohomology");
    json j = job_echo("oracle", args);
    j["direction"] = direction;
    j["dims"] = dims;
    std::string text = "bar " + direction + " dims:";
    for (int64_t d : dims) text += " " + std::to_string(d);
    text += "\n";
    emit(args, j, text);
    return kExitOk;
}

int run_print(const CommonArgs& args) {
    PresentationFile pf = parse_presentation_file(args.algebra);
    std::cout << print_presentation(pf);
    return kExitOk;
}

int run_corpus(const std::string& corpus_dir, const std::string& format) {
    std::string dir = corpus_dir;
    if (dir.empty()) {
        const char* env = std::getenv("HHGAP_CORPUS_DIR");
        if (env) dir = env;
    }
    if (dir.empty()) dir = "corpus";
    std::ifstream mf(dir + "/manifest.json");
    if (!mf) throw ParseError("cannot open '" + dir + "/manifest.json'");
    json manifest = json::parse(mf);
    json out = json::array();
    for (const auto& entry : manifest.at("entries")) {
        json e = entry;
        std::string file = dir + "/" + entry.at("file").get<std::string>();
        std::ifstream in(file);
        if (!in) throw ParseError("missing corpus file '" + file + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        e["algebra_digest"] = fnv1a_hex(ss.str());
        out.push_back(e);
    }
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& e : out)
            std::cout << e.at("name").get<std::string>() << "  ("
                      << e.at("file").get<std::string>() << ")  digest "
                      << e.at("algebra_digest").get<std::string>() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hochschild (co)homology and smoothness certificates "
                 "for finitely presented commutative algebras"};
    app.require_subcommand(1);

    CommonArgs hh_args, hcoh_args, res_args, dev_args, closed_args,
        smooth_args, oracle_args, print_args;
    std::string resolve_kind = "minimal";
    int closed_p = 2;
    std::string smooth_direction = "both";
    int interval_override = -1;
    std::string oracle_direction = "homology";
    std::string corpus_dir;
    std::string corpus_format = "text";

    CLI::App* hh = app.add_subcommand("hh", "Hochschild homology table");
    add_common(hh, hh_args);

    CLI::App* hcoh = app.add_subcommand("hcoh", "Hochschild cohomology table");
    add_common(hcoh, hcoh_args);

    CLI::App* resolve = app.add_subcommand("resolve", "build a resolution");
    add_common(resolve, res_args, false);
    resolve->add_option("--kind", resolve_kind, "koszul|tate|minimal");
    resolve->add_option("--cutoff", res_args.cutoff, "homological cutoff");

    CLI::App* devs =
        app.add_subcommand("deviations", "eps2/eps3 of a surjection");
    add_common(devs, dev_args, false);

    CLI::App* closed = app.add_subcommand("closed", "p-closedness certificate");
    add_common(closed, closed_args, false);
    closed->add_option("--p", closed_p, "1 or 2");
    closed->add_option("--cutoff", closed_args.cutoff, "homological cutoff");

    CLI::App* smooth =
        app.add_subcommand("smooth-check", "gap criteria for smoothness");
    add_common(smooth, smooth_args, false);
    smooth->add_option("--direction", smooth_direction,
                       "homology|cohomology|both");
    smooth->add_option("--interval-override", interval_override,
                       "experimental interval length override");

    CLI::App* oracle = app.add_subcommand("oracle", "bar-complex dimensions");
    add_common(oracle, oracle_args);
    oracle->add_option("--direction", oracle_direction,
                       "homology|cohomology");

    CLI::App* print_cmd =
        app.add_subcommand("print", "canonical presentation print");
    print_cmd->add_option("--algebra", print_args.algebra, "presentation file")
        ->required();

    CLI::App* corpus = app.add_subcommand("corpus", "list bundled algebras");
    corpus->add_option("--corpus-dir", corpus_dir, "corpus directory");
    corpus->add_option("--format", corpus_format, "text|json");

    try {
        app.parse(argc, argv);
        auto started = std::chrono::steady_clock::now();
        int rc = kExitError;
        if (hh->parsed()) rc = run_table(hh_args, false);
        if (hcoh->parsed()) rc = run_table(hcoh_args, true);
        if (resolve->parsed()) rc = run_resolve(res_args, resolve_kind);
        if (devs->parsed()) rc = run_deviations(dev_args);
        if (closed->parsed()) rc = run_closed(closed_args, closed_p);
        if (smooth->parsed())
            rc = run_smooth_check(smooth_args, smooth_direction,
                                  interval_override);
        if (oracle->parsed()) rc = run_oracle(oracle_args, oracle_direction);
        if (print_cmd->parsed()) rc = run_print(print_args);
        if (corpus->parsed()) rc = run_corpus(corpus_dir, corpus_format);
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        bool json_mode =
            (hh->parsed() && hh_args.format == "json") ||
            (hcoh->parsed() && hcoh_args.format == "json") ||
            (resolve->parsed() && res_args.format == "json") ||
            (devs->parsed() && dev_args.format == "json") ||
            (closed->parsed() && closed_args.format == "json") ||
            (smooth->parsed() && smooth_args.format == "json") ||
            (oracle->parsed() && oracle_args.format == "json");
        if (!json_mode && !print_cmd->parsed() && !corpus->parsed())
            std::cerr << "elapsed: " << elapsed << " ms\n";
        return rc;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
