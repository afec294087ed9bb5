#include "bicross/cli.hpp"

#include "bicross/cohomology.hpp"
#include "bicross/json_io.hpp"
#include "bicross/workspace.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace bicross {

namespace {

constexpr const char* kVersion = "bicross 1.0.0";

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const Json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << text;
    }
}

std::string derived_name(const std::string& base, const std::string& suffix) {
    return base + "." + suffix;
}

// group argument: workspace name first, else a file path
FiniteGroup load_group_arg(const Workspace& ws, const std::string& arg) {
    if (ws.has(arg)) return group_from_json(ws.get(arg, "group"));
    return group_from_json(Json::parse(slurp_file(arg)));
}

struct OpextBundle {
    ExactFactorization fact;
    MatchedPair mp;
    int N;
    std::vector<long> invariant_factors;
    std::vector<PairCocycle> class_reps;
};

OpextBundle load_opext(const Workspace& ws, const std::string& name) {
    Json j = ws.get_raw(name, "opext");
    OpextBundle b{factorization_from_json(j.at("factorization")),
                  MatchedPair{},
                  j.at("N").get<int>(),
                  j.at("invariant_factors").get<std::vector<long>>(),
                  {}};
    b.mp = derive_matched_pair(b.fact);
    for (const auto& e : j.at("class_reps")) b.class_reps.push_back(pair_cocycle_from_json(e));
    return b;
}

const PairCocycle& pick_class(const OpextBundle& b, long k) {
    if (k < 0 || k >= static_cast<long>(b.class_reps.size()))
        throw std::invalid_argument("class index " + std::to_string(k) + " out of range (have " +
                                    std::to_string(b.class_reps.size()) + " representatives)");
    return b.class_reps[k];
}

int report_exit(const Report& rep) { return rep.pass() ? 0 : 1; }

} // namespace

int cli_main(std::vector<std::string> args) {
    CLI::App app{"exact bicrossed products, doubles and their verification"};
    app.require_subcommand(0);

    std::string ws_dir = "bicross-ws";
    long seed = 0;
    app.add_option("--ws", ws_dir, "workspace directory")->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized property checks")->capture_default_str();
    bool version = false;
    app.add_flag("--version", version, "print version and exit");

    int exit_code = 0;
    auto set_exit = [&](int c) { exit_code = std::max(exit_code, c); };

    // ---- group load|show
    auto* grp = app.add_subcommand("group", "ingest and inspect groups");
    {
        auto* load = grp->add_subcommand("load", "load a Cayley-table JSON file");
        auto file = std::make_shared<std::string>();
        auto name = std::make_shared<std::string>();
        load->add_option("file", *file, "group JSON file")->required();
        load->add_option("--name", *name, "workspace name (default: file stem)");
        load->callback([&, file, name] {
            Workspace ws(ws_dir);
            FiniteGroup g = group_from_json(Json::parse(slurp_file(*file)));
            std::string n = name->empty()
                                ? std::filesystem::path(*file).stem().string()
                                : *name;
            ws.put(n, "group", to_json(g));
            emit(Json{{"stored", n}, {"order", g.order()}, {"abelian", g.is_abelian()}}, "");
        });

        auto* show = grp->add_subcommand("show", "print a stored group");
        auto sname = std::make_shared<std::string>();
        show->add_option("name", *sname, "workspace name")->required();
        show->callback([&, sname] {
            Workspace ws(ws_dir);
            emit(ws.get(*sname, "group"), "");
        });
    }

    // ---- factorize
    {
        auto* fac = app.add_subcommand("factorize", "enumerate exact factorizations Sigma = FG");
        auto arg = std::make_shared<std::string>();
        auto cap = std::make_shared<int>(64);
        auto name = std::make_shared<std::string>();
        fac->add_option("group", *arg, "group name or JSON file")->required();
        fac->add_option("--cap", *cap, "subgroup enumeration cap")->capture_default_str();
        fac->add_option("--name", *name, "prefix for stored factorizations");
        fac->callback([&, arg, cap, name] {
            Workspace ws(ws_dir);
            FiniteGroup g = load_group_arg(ws, *arg);
            std::string prefix = name->empty()
                                     ? std::filesystem::path(*arg).stem().string()
                                     : *name;
            auto facts = exact_factorizations(g, *cap);
            Json listing = Json::array();
            for (size_t i = 0; i < facts.size(); ++i) {
                std::string n = derived_name(prefix, "fact" + std::to_string(i));
                ws.put(n, "factorization", to_json(facts[i]));
                listing.push_back(Json{{"name", n},
                                       {"F_order", facts[i].F.size()},
                                       {"G_order", facts[i].G.size()},
                                       {"F", facts[i].F},
                                       {"G", facts[i].G}});
            }
            emit(Json{{"group", prefix}, {"count", facts.size()}, {"factorizations", listing}},
                 "");
        });
    }

    // ---- matched verify
    {
        auto* matched = app.add_subcommand("matched", "matched-pair operations");
        auto* mv = matched->add_subcommand("verify", "derive and verify the matched pair");
        auto fname = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        mv->add_option("--fact", *fname, "stored factorization name")->required();
        mv->add_option("--out", *out, "also write the report here");
        mv->callback([&, fname, out] {
            Workspace ws(ws_dir);
            auto fact = factorization_from_json(ws.get(*fname, "factorization"));
            auto mp = derive_matched_pair(fact);
            Report rep = verify_matched_pair(mp);
            Json j = to_json(rep);
            j["rebuilds_sigma"] = rebuilds_sigma(fact, mp);
            if (!j["rebuilds_sigma"].get<bool>()) rep.add("product group rebuilds Sigma", {});
            ws.put(derived_name(*fname, "matched.report"), "report", j);
            emit(j, *out);
            set_exit(report_exit(rep));
        });
    }

    // ---- opext solve
    {
        auto* opx = app.add_subcommand("opext", "abelian-extension cocycle pairs");
        auto* solve = opx->add_subcommand("solve", "solve for (tau, sigma) classes");
        auto fname = std::make_shared<std::string>();
        auto N = std::make_shared<int>(0);
        auto cap = std::make_shared<long>(100000);
        auto name = std::make_shared<std::string>();
        solve->add_option("--fact", *fname, "stored factorization name")->required();
        solve->add_option("--N", *N, "torsion order (default |Sigma|)");
        solve->add_option("--cap", *cap, "unknown-count cap")->capture_default_str();
        solve->add_option("--name", *name, "output name (default <fact>.opext)");
        solve->callback([&, fname, N, cap, name] {
            Workspace ws(ws_dir);
            auto fact = factorization_from_json(ws.get(*fname, "factorization"));
            auto mp = derive_matched_pair(fact);
            int torsion = *N > 0 ? *N : fact.sigma.order();
            auto res = solve_opext(mp, torsion, *cap);
            Json reps = Json::array();
            for (const auto& pc : res.class_reps) reps.push_back(to_json(pc));
            Json j{{"factorization", to_json(fact)},
                   {"N", torsion},
                   {"invariant_factors", res.invariant_factors},
                   {"class_reps", reps},
                   {"note", "classes of mu_N-valued pairs; whether this equals Opext over "
                            "an algebraically closed field for this N is not guaranteed - "
                            "rerun with a larger --N to compare"}};
            std::string n = name->empty() ? derived_name(*fname, "opext") : *name;
            ws.put(n, "opext", j);
            emit(Json{{"stored", n},
                      {"N", torsion},
                      {"invariant_factors", res.invariant_factors},
                      {"classes", res.class_reps.size()},
                      {"note", j["note"]}},
                 "");
        });
    }

    // ---- omega compute
    {
        auto* om = app.add_subcommand("omega", "Kac 3-cocycle");
        auto* oc = om->add_subcommand("compute", "omega(tau, sigma) for a solved class");
        auto oname = std::make_shared<std::string>();
        auto cls = std::make_shared<long>(0);
        auto name = std::make_shared<std::string>();
        oc->add_option("--opext", *oname, "stored opext result")->required();
        oc->add_option("--class", *cls, "class representative index")->capture_default_str();
        oc->add_option("--name", *name, "output name");
        oc->callback([&, oname, cls, name] {
            Workspace ws(ws_dir);
            auto b = load_opext(ws, *oname);
            Cochain w = kac_omega(pick_class(b, *cls), b.fact);
            Report rep = verify_cocycle(w);
            std::string n = name->empty()
                                ? derived_name(*oname, "omega" + std::to_string(*cls))
                                : *name;
            ws.put(n, "cochain", to_json(w));
            Json j = to_json(rep);
            j["stored"] = n;
            j["zero"] = w.is_zero();
            emit(j, "");
            set_exit(report_exit(rep));
        });
    }

    // ---- build bicrossed|double|dpr
    {
        auto* build = app.add_subcommand("build", "construct the named Hopf objects");

        auto* bb = build->add_subcommand("bicrossed", "bicrossed product of a class");
        auto boname = std::make_shared<std::string>();
        auto bcls = std::make_shared<long>(0);
        auto bname = std::make_shared<std::string>();
        bb->add_option("--opext", *boname, "stored opext result")->required();
        bb->add_option("--class", *bcls, "class representative index")->capture_default_str();
        bb->add_option("--name", *bname, "output name");
        bb->callback([&, boname, bcls, bname] {
            Workspace ws(ws_dir);
            auto b = load_opext(ws, *boname);
            StructureHopf A = bicrossed_product(pick_class(b, *bcls));
            Json j = to_json(A);
            j["provenance"] = Json{{"sigma_order", b.fact.sigma.order()},
                                   {"F", b.fact.F},
                                   {"G", b.fact.G},
                                   {"N", b.N},
                                   {"class_index", *bcls}};
            std::string n = bname->empty()
                                ? derived_name(*boname, "A" + std::to_string(*bcls))
                                : *bname;
            ws.put(n, "hopf", j);
            emit(Json{{"stored", n},
                      {"dim", A.dim()},
                      {"commutative", is_commutative(A.alg)},
                      {"cocommutative", is_cocommutative(A)},
                      {"center_dimension", center_dimension(A.alg)}},
                 "");
        });

        auto* bd = build->add_subcommand("double", "Drinfeld double of a stored Hopf algebra");
        auto hname = std::make_shared<std::string>();
        auto dname = std::make_shared<std::string>();
        bd->add_option("--hopf", *hname, "stored hopf algebra")->required();
        bd->add_option("--name", *dname, "output name");
        bd->callback([&, hname, dname] {
            Workspace ws(ws_dir);
            StructureHopf H = hopf_from_json(ws.get(*hname, "hopf"));
            StructureHopf D = drinfeld_double(H);
            std::string n = dname->empty() ? derived_name(*hname, "double") : *dname;
            Json j = to_json(D);
            j["provenance"] = Json{{"double_of", *hname}};
            ws.put(n, "hopf", j);
            emit(Json{{"stored", n},
                      {"dim", D.dim()},
                      {"center_dimension", center_dimension(D.alg)}},
                 "");
        });

        auto* bq = build->add_subcommand("dpr", "twisted double of a group and 3-cocycle");
        auto gname = std::make_shared<std::string>();
        auto wname = std::make_shared<std::string>();
        auto qname = std::make_shared<std::string>();
        bq->add_option("--group", *gname, "stored group or JSON file")->required();
        bq->add_option("--cocycle", *wname, "stored degree-3 cochain")->required();
        bq->add_option("--name", *qname, "output name");
        bq->callback([&, gname, wname, qname] {
            Workspace ws(ws_dir);
            FiniteGroup g = load_group_arg(ws, *gname);
            Cochain w = cochain_from_json(ws.get(*wname, "cochain"));
            QuasiBialgebra Q = dpr_double(g, w);
            std::string n = qname->empty() ? derived_name(*wname, "dpr") : *qname;
            Json j = to_json(Q);
            j["provenance"] = Json{{"group", *gname}, {"cocycle", *wname}};
            ws.put(n, "quasi", j);
            emit(Json{{"stored", n}, {"dim", Q.h.dim()}}, "");
        });
    }

    // ---- verify hopf|quasi|pair|cocycle
    {
        auto* ver = app.add_subcommand("verify", "exhaustive axiom verification");
        auto add_verify = [&](const char* what, auto runner) {
            auto* sub = ver->add_subcommand(what, std::string("verify a stored ") + what);
            auto name = std::make_shared<std::string>();
            auto out = std::make_shared<std::string>();
            sub->add_option("name", *name, "workspace object")->required();
            sub->add_option("--out", *out, "also write the report here");
            sub->callback([&, name, out, runner] {
                Workspace ws(ws_dir);
                Report rep = runner(ws, *name);
                ws.put(derived_name(*name, "verify.report"), "report", to_json(rep));
                emit(to_json(rep), *out);
                set_exit(report_exit(rep));
            });
        };
        add_verify("hopf", [](Workspace& ws, const std::string& n) {
            return verify_hopf(hopf_from_json(ws.get_raw(n, "hopf")));
        });
        add_verify("quasi", [](Workspace& ws, const std::string& n) {
            return verify_quasi(quasi_from_json(ws.get_raw(n, "quasi")));
        });
        add_verify("pair", [](Workspace& ws, const std::string& n) {
            return verify_pair(pair_cocycle_from_json(ws.get_raw(n, "pair_cocycle")));
        });
        add_verify("cocycle", [](Workspace& ws, const std::string& n) {
            return verify_cocycle(cochain_from_json(ws.get_raw(n, "cochain")));
        });
    }

    // ---- compare doubles
    {
        auto* cmp = app.add_subcommand("compare", "invariant comparisons");
        auto* cd = cmp->add_subcommand("doubles", "D(A) against D^omega(Sigma)");
        auto oname = std::make_shared<std::string>();
        auto cls = std::make_shared<long>(0);
        auto out = std::make_shared<std::string>();
        cd->add_option("--opext", *oname, "stored opext result")->required();
        cd->add_option("--class", *cls, "class representative index")->capture_default_str();
        cd->add_option("--out", *out, "also write the report here");
        cd->callback([&, oname, cls, out] {
            Workspace ws(ws_dir);
            auto b = load_opext(ws, *oname);
            DoubleComparison dc = double_comparison(pick_class(b, *cls), b.fact);
            Json j = to_json(dc.report);
            j["consistent"] = dc.report.pass();
            j["dim_double_a"] = dc.dim_double_a;
            j["dim_double_dpr"] = dc.dim_double_dpr;
            j["center_double_a"] = dc.center_double_a;
            j["center_double_dpr"] = dc.center_double_dpr;
            ws.put(derived_name(*oname, "compare" + std::to_string(*cls) + ".report"), "report",
                   j);
            emit(j, *out);
            set_exit(report_exit(dc.report));
        });
    }

    // ---- repcat check
    {
        auto* rc = app.add_subcommand("repcat", "module-category equivalence checks");
        auto* chk = rc->add_subcommand("check", "run the equivalence suite on a class");
        auto oname = std::make_shared<std::string>();
        auto cls = std::make_shared<long>(0);
        auto out = std::make_shared<std::string>();
        chk->add_option("--opext", *oname, "stored opext result")->required();
        chk->add_option("--class", *cls, "class representative index")->capture_default_str();
        chk->add_option("--out", *out, "also write the report here");
        chk->callback([&, oname, cls, out] {
            Workspace ws(ws_dir);
            auto b = load_opext(ws, *oname);
            const PairCocycle& pc = pick_class(b, *cls);
            std::vector<GradedFModule> vs;
            std::vector<SigmaBimodule> us;
            standard_equivalence_corpus(pc, b.fact, vs, us);
            Report rep = verify_equivalence(pc, b.fact, vs, us);
            Json j = to_json(rep);
            j["objects_module_side"] = vs.size();
            j["objects_bimodule_side"] = us.size();
            ws.put(derived_name(*oname, "repcat" + std::to_string(*cls) + ".report"), "report",
                   j);
            emit(j, *out);
            set_exit(report_exit(rep));
        });
    }

    // ---- report
    {
        auto* rp = app.add_subcommand("report", "aggregate all stored reports");
        auto out = std::make_shared<std::string>();
        auto md = std::make_shared<std::string>();
        rp->add_option("--out", *out, "write aggregate JSON here");
        rp->add_option("--md", *md, "write a markdown summary here");
        rp->callback([&, out, md] {
            Workspace ws(ws_dir);
            Json agg = Json::array();
            bool all_pass = true;
            for (const auto& n : ws.names()) {
                if (ws.kind_of(n) != "report") continue;
                Json j = ws.get_raw(n, "report");
                j["name"] = n;
                if (!j.value("pass", false)) all_pass = false;
                agg.push_back(std::move(j));
            }
            Json result{{"reports", agg}, {"all_pass", all_pass}};
            emit(result, *out);
            if (!md->empty()) {
                std::ofstream m(*md, std::ios::trunc);
                m << "# verification summary\n\n| report | subject | checks | result |\n"
                  << "|---|---|---|---|\n";
                for (const auto& j : agg)
                    m << "| " << j.at("name").get<std::string>() << " | "
                      << j.value("subject", std::string("-")) << " | " << j.value("checks", 0L)
                      << " | " << (j.value("pass", false) ? "pass" : "FAIL") << " |\n";
            }
            set_exit(all_pass ? 0 : 1);
        });
    }

    std::vector<const char*> argv;
    argv.push_back("bicross");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (version) {
        std::cout << kVersion << "\n";
        return 0;
    }
    return exit_code;
}

} // namespace bicross
