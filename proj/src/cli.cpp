#include "svmod/cli.hpp"

#include "svmod/bracket.hpp"
#include "svmod/errors.hpp"
#include "svmod/json_io.hpp"
#include "svmod/props.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>

namespace svmod::cli {

namespace {

using io::json;

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
    }
}

json parse_inline(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

uint64_t env_seed() {
    if (const char* s = std::getenv("SVMOD_SEED")) {
        try {
            return std::stoull(s);
        } catch (...) {
            throw std::invalid_argument("SVMOD_SEED is not an integer");
        }
    }
    return 0;
}

int cmd_bracket(const std::string& alg, const std::string& g_text, const std::string& h_text,
                std::ostream& out) {
    Algebra a;
    if (alg == "sv")
        a = Algebra::SV;
    else if (alg == "w22")
        a = Algebra::W22;
    else
        throw std::invalid_argument("--alg must be sv or w22");
    Generator g = io::generator_from_json(parse_inline(g_text, "--g"), a);
    Generator h = io::generator_from_json(parse_inline(h_text, "--h"), a);
    out << io::to_json(lie_bracket(g, h)).dump() << "\n";
    return 0;
}

int cmd_verify_q(const std::string& path, std::ostream& out) {
    QSpec spec = io::qspec_from_json(load_file(path));
    spec.validate();  // structural errors -> exit 2
    auto report = verify_conditions(spec);
    out << io::to_json(report).dump() << "\n";
    return all_pass(report) ? 0 : 1;
}

int cmd_reduce(const std::string& path, std::ostream& out) {
    io::Scenario sc = io::scenario_from_json(load_file(path));
    json result;
    if (sc.algebra == Algebra::SV && sc.base_space) {
        BaseVector v = sc.q_vector;
        for (const auto& g : sc.action) v = sc.q_base->act_sub(g, v);
        if (v.zero()) throw std::invalid_argument("scenario vector reduced to zero before the reduction");
        auto r = q_reduce(v, *sc.q_base);
        result["trace"] = io::to_json(r.trace);
        result["terminal"] = io::to_json(r.terminal);
    } else if (sc.algebra == Algebra::SV) {
        IndVector v = sc.sv_vector;
        for (const auto& g : sc.action) v = act(g, v, *sc.sv_base);
        if (v.zero()) throw std::invalid_argument("scenario vector reduced to zero before the reduction");
        auto r = reduce_to_base(v, *sc.sv_base);
        result["trace"] = io::to_json(r.trace);
        result["terminal"] = io::to_json(r.terminal);
    } else {
        WIndVector v = sc.w_vector;
        for (const auto& g : sc.action) v = w_act(g, v, *sc.w_base);
        if (v.zero()) throw std::invalid_argument("scenario vector reduced to zero before the reduction");
        auto r = w_reduce(v, *sc.w_base);
        result["trace"] = io::to_json(r.trace);
        result["terminal"] = io::to_json(r.terminal);
    }
    out << result.dump() << "\n";
    return 0;
}

json suite_to_json(const props::SuiteResult& r) {
    json j;
    j["pass"] = r.pass;
    j["failures"] = r.failures;
    j["suite"] = r.suite;
    j["trials"] = r.trials;
    return j;
}

int cmd_props(const std::string& suite, uint64_t seed, uint64_t trials, std::ostream& out) {
    if (suite == "all") {
        auto results = props::run_all_suites(seed, trials);
        bool pass = true;
        json suites = json::array();
        for (const auto& r : results) {
            pass = pass && r.pass;
            suites.push_back(suite_to_json(r));
        }
        json j;
        j["pass"] = pass;
        j["suites"] = std::move(suites);
        out << j.dump() << "\n";
        return pass ? 0 : 1;
    }
    const auto& names = props::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw std::invalid_argument("unknown suite: " + suite);
    auto r = props::run_suite(suite, seed, trials);
    json j;
    j["pass"] = r.pass;
    j["failures"] = r.failures;
    out << j.dump() << "\n";
    return r.pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Schrodinger-Virasoro / W(2,2) module calculator"};
    app.require_subcommand(1);

    std::string alg = "sv", g_text, h_text, file, suite;
    uint64_t trials = 200;
    uint64_t seed = 0;
    bool seed_given = false;

    auto* bracket = app.add_subcommand("bracket", "Lie bracket of two generators");
    bracket->set_help_flag("--help", "print help");  // frees -h / --h for the second operand
    bracket->add_option("--alg", alg, "algebra: sv or w22")->default_val("sv");
    bracket->add_option("--g", g_text, "first generator as JSON")->required();
    bracket->add_option("--h", h_text, "second generator as JSON")->required();

    auto* verify = app.add_subcommand("verify-q", "check conditions (I)-(VII) of a quotient spec");
    verify->add_option("file", file, "QSpec JSON document")->required();

    auto* reduce = app.add_subcommand("reduce", "run the reduction on a scenario file");
    reduce->add_option("file", file, "scenario JSON document")->required();

    auto* propsc = app.add_subcommand("props", "run randomized property suites");
    propsc->add_option("--suite", suite, "suite name or 'all'")->required();
    propsc->add_option("--seed", seed, "RNG seed (default: SVMOD_SEED or 0)")
        ->each([&seed_given](const std::string&) { seed_given = true; });
    propsc->add_option("--trials", trials, "trials per suite")->default_val(200);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (bracket->parsed()) return cmd_bracket(alg, g_text, h_text, out);
        if (verify->parsed()) return cmd_verify_q(file, out);
        if (reduce->parsed()) return cmd_reduce(file, out);
        if (propsc->parsed()) return cmd_props(suite, seed_given ? seed : env_seed(), trials, out);
    } catch (const invariant_violation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace svmod::cli
