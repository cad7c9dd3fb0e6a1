#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "battery.hpp"
#include "ppa/json_io.hpp"

using namespace ppa;
namespace js = ppa::json;

namespace {

struct Settings {
    std::string quiver;
    std::string w, v, word;
    std::string primes = "2,3,5";
    std::optional<std::size_t> trunc;
    std::optional<std::size_t> degree_bound;
    std::size_t max_len = 6;
    std::uint64_t cap = kDefaultCap;
    std::string suite;
    std::string config;
};

// Options that a config file may also supply; a flag given on the command
// line always wins.
struct Binding {
    CLI::App* sub;
    CLI::Option* opt;
    std::string key;
    std::function<void(const nlohmann::json&)> assign;
};

std::string as_text(const nlohmann::json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string dims_text(const nlohmann::json& j) {
    if (!j.is_array()) return as_text(j);
    std::string s;
    for (const auto& x : j) s += (s.empty() ? "" : ",") + as_text(x);
    return s;
}

Quiver load_quiver(const std::string& where) {
    if (std::filesystem::exists(where)) {
        std::ifstream in(where);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw validation_error("BadQuiverJson", where + ": " + e.what());
        }
        return Quiver::from_json(j);
    }
    return standard_quiver(where);  // catalogue labels such as A3 or D4~
}

std::vector<std::uint32_t> primes_of(const Settings& s) { return js::parse_primes(s.primes); }

int emit(const js::ordered& j) {
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_classify(const Settings& s) {
    auto q = load_quiver(s.quiver);
    auto c = classify(q);
    js::ordered out{{"kind", to_string(c.kind)}};
    if (c.label) out["label"] = *c.label;
    return emit(out);
}

int run_ppalg_dims(const Settings& s) {
    PreprojectiveAlgebra alg(load_quiver(s.quiver));
    return emit(alg.hilbert(s.max_len));
}

int run_injective(const Settings& s) {
    auto q = load_quiver(s.quiver);
    const auto w = js::parse_dims(q, s.w);
    PreprojectiveAlgebra alg(q);
    return emit(js::injective(injective_module(alg, w, s.trunc)));
}

int run_projective(const Settings& s) {
    auto q = load_quiver(s.quiver);
    const auto w = js::parse_dims(q, s.w);
    PreprojectiveAlgebra alg(q);
    return emit(js::projective(projective_module(alg, w, s.trunc)));
}

int run_demazure(const Settings& s) {
    auto q = load_quiver(s.quiver);
    const auto w = js::parse_dims(q, s.w);
    const auto word = js::parse_word(q, s.word);
    const auto c = cartan_matrix(q);
    PreprojectiveAlgebra alg(q);
    auto model = injective_module(alg, w, s.trunc);
    auto chain = demazure_module(model, c, word);
    const auto& dq = model.rep.quiver();
    js::ordered stages = js::ordered::array();
    for (std::size_t k = 0; k < chain.stages.size(); ++k) {
        WeylWord suffix(word.end() - static_cast<std::ptrdiff_t>(k), word.end());
        js::ordered st;
        st["word"] = word_to_string(q, suffix);
        st["target"] = js::dims(q, chain.targets[k]);
        st["submodule"] = js::subrep(dq, chain.stages[k]);
        stages.push_back(std::move(st));
    }
    return emit(js::ordered{{"w", js::dims(q, w)},
                            {"word", word_to_string(q, word)},
                            {"bound", model.bound},
                            {"complete", model.complete},
                            {"stages", std::move(stages)}});
}

int run_count(const Settings& s) {
    auto q = load_quiver(s.quiver);
    const auto w = js::parse_dims(q, s.w);
    const auto v = js::parse_dims(q, s.v);
    const auto primes = primes_of(s);
    const auto c = cartan_matrix(q);
    const std::size_t bound = s.degree_bound.value_or(expected_dimension(c, w, v));
    if (primes.size() < bound + 2)
        throw validation_error("NotEnoughPrimes", "degree bound " + std::to_string(bound) + " needs " +
                                                      std::to_string(bound + 2) + " primes");
    PreprojectiveAlgebra alg(q);
    auto model = injective_module(alg, w, s.trunc);
    auto cp = count_polynomial(model.rep, v, bound, primes, s.cap);
    js::ordered out{{"w", js::dims(q, w)}, {"v", js::dims(q, v)}, {"bound", model.bound}, {"complete", model.complete}};
    out.update(js::count_poly(cp));
    return emit(out);
}

int run_weightmult(const Settings& s) {
    auto q = load_quiver(s.quiver);
    const auto w = js::parse_dims(q, s.w);
    const auto v = js::parse_dims(q, s.v);
    WeightMultiplicity m(cartan_matrix(q), w.to_signed());
    std::cout << m(v.to_signed()).get_str() << "\n";
    return 0;
}

int run_rep_matrices(const Settings& s) {
    auto q = load_quiver(s.quiver);
    const auto w = js::parse_dims(q, s.w);
    const auto primes = primes_of(s);
    PreprojectiveAlgebra alg(q);
    auto model = injective_module(alg, w, s.trunc);
    auto real = finite_points(model.rep, w, primes, s.cap);
    auto ops = operator_matrices(real, cartan_matrix(q));
    const auto& dq = model.rep.quiver();
    js::ordered points = js::ordered::array();
    for (std::size_t k = 0; k < real.index.size(); ++k) {
        const auto& [wi, pi] = real.index[k];
        points.push_back(js::ordered{{"index", k}, {"submodule", js::subrep(dq, real.weights[wi].points[pi])}});
    }
    js::ordered E, F, H;
    for (std::size_t i = 0; i < q.num_vertices(); ++i) {
        E[q.vertices()[i]] = js::int_matrix(ops.E[i]);
        F[q.vertices()[i]] = js::int_matrix(ops.F[i]);
        H[q.vertices()[i]] = js::int_matrix(ops.H[i]);
    }
    return emit(js::ordered{{"w", js::dims(q, w)}, {"points", std::move(points)}, {"E", E}, {"F", F}, {"H", H}});
}

int run_chevalley(const Settings& s) {
    auto q = load_quiver(s.quiver);
    const auto w = js::parse_dims(q, s.w);
    auto rep = chevalley_compare(q, w, primes_of(s), s.cap);
    js::ordered checks = js::ordered::array();
    for (const auto& c : rep.checks) checks.push_back(js::check(c));
    emit(js::ordered{{"w", js::dims(q, rep.w)},
                     {"theta_w", js::dims(q, rep.theta_w)},
                     {"bijection", rep.bijection},
                     {"checks", std::move(checks)},
                     {"passed", rep.passed()}});
    return rep.passed() ? 0 : 4;
}

int run_verify(const Settings& s) {
    if (s.suite != "core") throw validation_error("UnknownSuite", "known suites: core");
    js::ordered results = js::ordered::array();
    bool all = true;
    for (const auto& r : battery::run_core()) {
        js::ordered item{{"criterion", r.id}, {"name", r.name}, {"passed", r.passed}};
        if (!r.detail.empty()) item["detail"] = r.detail;
        results.push_back(std::move(item));
        all = all && r.passed;
        std::cerr << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << "\n";
    }
    emit(js::ordered{{"suite", s.suite}, {"results", std::move(results)}, {"passed", all}});
    return all ? 0 : 4;
}

void apply_config(const Settings& s, CLI::App* chosen, const std::vector<Binding>& bindings) {
    if (s.config.empty()) return;
    std::ifstream in(s.config);
    if (!in) throw validation_error("BadConfig", "cannot read " + s.config);
    nlohmann::json cfg;
    try {
        cfg = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error("BadConfig", e.what());
    }
    if (!cfg.is_object()) throw validation_error("BadConfig", "config must be a JSON object");
    for (const auto& b : bindings)
        if (b.sub == chosen && b.opt->count() == 0 && cfg.contains(b.key)) b.assign(cfg[b.key]);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with preprojective algebras, their injective modules and quiver grassmannians"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings s;
    app.add_option("--config", s.config, "JSON file with option defaults; flags win");
    app.add_flag("--json", "JSON output (the only mode)");

    std::vector<Binding> bindings;
    auto quiver_arg = [&](CLI::App* sub) {
        sub->add_option("quiver", s.quiver, "quiver JSON file or catalogue label (A3, D4, E6, A2~, ...)")->required();
    };
    auto w_opt = [&](CLI::App* sub, const std::string& names = "--w") {
        auto* o = sub->add_option(names, s.w, "socle/highest-weight vector: \"1:1,2:0\" or \"1,0\"");
        bindings.push_back({sub, o, "w", [&](const nlohmann::json& j) { s.w = dims_text(j); }});
    };
    auto v_opt = [&](CLI::App* sub) {
        auto* o = sub->add_option("--v", s.v, "dimension vector of the submodules");
        bindings.push_back({sub, o, "v", [&](const nlohmann::json& j) { s.v = dims_text(j); }});
    };
    auto trunc_opt = [&](CLI::App* sub) {
        auto* o = sub->add_option("--trunc", s.trunc, "keep paths of length < N");
        bindings.push_back({sub, o, "trunc", [&](const nlohmann::json& j) { s.trunc = j.get<std::size_t>(); }});
    };
    auto primes_opt = [&](CLI::App* sub) {
        auto* o = sub->add_option("--primes", s.primes, "comma separated primes")->capture_default_str();
        bindings.push_back({sub, o, "primes", [&](const nlohmann::json& j) { s.primes = dims_text(j); }});
    };
    auto cap_opt = [&](CLI::App* sub) {
        auto* o = sub->add_option("--cap", s.cap, "enumeration cap (visited candidates)")->capture_default_str();
        bindings.push_back({sub, o, "cap", [&](const nlohmann::json& j) { s.cap = j.get<std::uint64_t>(); }});
    };

    auto* classify_cmd = app.add_subcommand("classify", "finite / affine / wild, with ADE label");
    quiver_arg(classify_cmd);

    auto* dims_cmd = app.add_subcommand("ppalg-dims", "dimensions of the preprojective algebra by degree");
    quiver_arg(dims_cmd);
    auto* ml = dims_cmd->add_option("--max-len", s.max_len, "largest degree")->capture_default_str();
    bindings.push_back({dims_cmd, ml, "max_len", [&](const nlohmann::json& j) { s.max_len = j.get<std::size_t>(); }});

    auto* inj_cmd = app.add_subcommand("injective", "the injective module q^w");
    quiver_arg(inj_cmd);
    w_opt(inj_cmd, "--socle,--w");
    trunc_opt(inj_cmd);

    auto* proj_cmd = app.add_subcommand("projective", "the projective module p^w");
    quiver_arg(proj_cmd);
    w_opt(proj_cmd);
    trunc_opt(proj_cmd);

    auto* dem_cmd = app.add_subcommand("demazure", "Demazure submodules along a reduced word");
    quiver_arg(dem_cmd);
    w_opt(dem_cmd);
    auto* wo = dem_cmd->add_option("--word", s.word, "vertex ids separated by spaces, applied right to left");
    bindings.push_back({dem_cmd, wo, "word", [&](const nlohmann::json& j) { s.word = as_text(j); }});
    trunc_opt(dem_cmd);

    auto* count_cmd = app.add_subcommand("count", "point counts of Gr(v, q^w) and their polynomial");
    quiver_arg(count_cmd);
    w_opt(count_cmd);
    v_opt(count_cmd);
    primes_opt(count_cmd);
    trunc_opt(count_cmd);
    cap_opt(count_cmd);
    auto* db = count_cmd->add_option("--degree-bound", s.degree_bound, "override the interpolation degree bound");
    bindings.push_back({count_cmd, db, "degree_bound", [&](const nlohmann::json& j) { s.degree_bound = j.get<std::size_t>(); }});

    auto* wm_cmd = app.add_subcommand("weightmult", "multiplicity of the weight w - C v");
    quiver_arg(wm_cmd);
    w_opt(wm_cmd);
    v_opt(wm_cmd);

    auto* rm_cmd = app.add_subcommand("rep-matrices", "E/F/H matrices on the finite point realization");
    quiver_arg(rm_cmd);
    w_opt(rm_cmd);
    primes_opt(rm_cmd);
    trunc_opt(rm_cmd);
    cap_opt(rm_cmd);

    auto* ch_cmd = app.add_subcommand("chevalley", "compare the w and theta(w) realizations");
    quiver_arg(ch_cmd);
    w_opt(ch_cmd);
    primes_opt(ch_cmd);
    cap_opt(ch_cmd);

    auto* ver_cmd = app.add_subcommand("verify", "run a named check battery");
    ver_cmd->add_option("suite", s.suite, "suite name (core)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        CLI::App* chosen = app.get_subcommands().front();
        apply_config(s, chosen, bindings);
        const std::string verb = chosen->get_name();
        const bool needs_w = verb != "classify" && verb != "ppalg-dims" && verb != "verify";
        if (needs_w && s.w.empty()) throw validation_error("MissingOption", "--w is required");
        if ((verb == "count" || verb == "weightmult") && s.v.empty()) throw validation_error("MissingOption", "--v is required");
        if (verb == "classify") return run_classify(s);
        if (verb == "ppalg-dims") return run_ppalg_dims(s);
        if (verb == "injective") return run_injective(s);
        if (verb == "projective") return run_projective(s);
        if (verb == "demazure") return run_demazure(s);
        if (verb == "count") return run_count(s);
        if (verb == "weightmult") return run_weightmult(s);
        if (verb == "rep-matrices") return run_rep_matrices(s);
        if (verb == "chevalley") return run_chevalley(s);
        if (verb == "verify") return run_verify(s);
        throw validation_error("UnknownVerb", verb);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.kind());
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: BadJson: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 4;
    }
}
