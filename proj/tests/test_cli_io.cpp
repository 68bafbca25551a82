#include <doctest.h>

#include "svmod/cli.hpp"
#include "svmod/json_io.hpp"
#include "svmod/props.hpp"

#include <fstream>
#include <sstream>

using namespace svmod;
using io::json;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "cli_io_" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("scalar and generator json") {
    CHECK(io::to_json(Scalar(-4)).dump() == "\"-4\"");
    CHECK(io::to_json(Scalar(1, 2)).dump() == "\"1/2\"");
    CHECK(io::scalar_from_json(json::parse("\"7/3\"")) == Scalar(7, 3));

    CHECK(io::to_json(Generator::L(-2)).dump() == "{\"f\":\"L\",\"n\":-2}");
    CHECK(io::to_json(Generator::Y(-3)).dump() == "{\"f\":\"Y\",\"a\":-3}");
    CHECK(io::to_json(Generator::C()).dump() == "{\"f\":\"C\"}");
    CHECK(io::generator_from_json(json::parse("{\"f\":\"Y\",\"a\":-3}"), Algebra::SV) == Generator::Y(-3));
    CHECK_THROWS_AS(io::generator_from_json(json::parse("{\"f\":\"W\",\"n\":1}"), Algebra::SV),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::generator_from_json(json::parse("{\"n\":1}"), Algebra::SV), std::invalid_argument);
}

TEST_CASE("vector json round trips") {
    props::Rng rng(2718);
    auto V = props::q_module_0_0_2();
    for (int trial = 0; trial < 50; ++trial) {
        IndVector v = props::random_ind_vector(rng, *V, 4, 6);
        CHECK(io::ind_vector_from_json(io::to_json(v)) == v);

        BaseVector b = props::random_q_vector(rng, *V, 3, 4, 3);
        CHECK(io::base_vector_from_json(io::to_json(b)) == b);
    }
    auto W = props::w_whittaker_std(1, 1);
    for (int trial = 0; trial < 50; ++trial) {
        WIndVector v = props::random_w_ind_vector(rng, *W, 4, 6);
        CHECK(io::w_ind_vector_from_json(io::to_json(v)) == v);
    }

    QSpec s = props::q_spec_3_2_2();
    QSpec back = io::qspec_from_json(io::to_json(s));
    CHECK(io::to_json(back) == io::to_json(s));
}

TEST_CASE("multi index json rejects malformed input") {
    CHECK_THROWS_AS(io::multi_index_from_json(json::parse("[[0,1]]")), std::invalid_argument);
    CHECK_THROWS_AS(io::multi_index_from_json(json::parse("[[1]]")), std::invalid_argument);
    CHECK_THROWS_AS(io::multi_index_from_json(json::parse("{}")), std::invalid_argument);
    CHECK(io::multi_index_from_json(json::parse("[[2,3],[1,1]]")) ==
          MultiIndex::eps(2, 3).plus(1, 1));
}

TEST_CASE("cli bracket matches the documented output") {
    auto r = run_cli({"bracket", "--alg", "sv", "--g", R"({"f":"L","n":2})", "--h", R"({"f":"L","n":-2})"});
    CHECK(r.code == 0);
    CHECK(r.out == "[{\"g\":{\"f\":\"L\",\"n\":0},\"c\":\"-4\"},{\"g\":{\"f\":\"C\"},\"c\":\"1/2\"}]\n");

    r = run_cli({"bracket", "--alg", "w22", "--g", R"({"f":"W","n":1})", "--h", R"({"f":"W","n":-1})"});
    CHECK(r.code == 0);
    CHECK(r.out == "[]\n");

    CHECK(run_cli({"bracket", "--alg", "sv", "--g", "{bad", "--h", R"({"f":"C"})"}).code == 2);
    CHECK(run_cli({"bracket", "--alg", "nope", "--g", R"({"f":"C"})", "--h", R"({"f":"C"})"}).code == 2);
}

TEST_CASE("cli verify-q") {
    std::string good = write_temp("ex43.json", io::to_json(props::q_spec_0_0_2()).dump());
    auto r = run_cli({"verify-q", good});
    CHECK(r.code == 0);
    auto report = json::parse(r.out);
    REQUIRE(report.size() == 7);
    for (const auto& e : report) CHECK(e["pass"] == true);

    QSpec failing;
    failing.t = 3;
    failing.S_lambda = {1, 2};
    failing.S_nu1 = {0, 3};
    failing.lambda = {{1, Scalar(1)}, {2, Scalar(1)}};
    failing.nu = {{0, Scalar(1)}, {3, Scalar(1)}};
    std::string bad = write_temp("bad_I.json", io::to_json(failing).dump());
    r = run_cli({"verify-q", bad});
    CHECK(r.code == 1);
    CHECK(json::parse(r.out)[0]["witness"] == json::array({1, 2}));

    std::string malformed = write_temp("range.json", R"({"t":2,"d1":0,"d2":0,"S_lambda":[9],
        "S_mu":[],"S_nu0":[],"S_nu1":[0,2],"lambda":{"9":"1"},"nu":{"0":"1","2":"1"}})");
    CHECK(run_cli({"verify-q", malformed}).code == 2);
    CHECK(run_cli({"verify-q", "no_such_file.json"}).code == 2);
}

TEST_CASE("cli reduce") {
    std::string scenario = write_temp("verma.json", R"({
        "algebra":"sv",
        "base":{"type":"onedim","xi_l0":"1","nu0":"1","c":"0"},
        "vector":[{"l":[[1,2]],"coeff":"1"}]})");
    auto r = run_cli({"reduce", scenario});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["trace"].size() == 2);
    CHECK(j["terminal"][0]["coeff"] == "2");

    // already in the V part: empty trace
    std::string flat = write_temp("flat.json", R"({
        "algebra":"sv",
        "base":{"type":"onedim","xi_l0":"1","nu0":"1","c":"0"},
        "vector":[{"coeff":"3"}]})");
    r = run_cli({"reduce", flat});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["trace"].empty());

    // nu0 = 0 with t = 0 is rejected at load
    std::string invalid = write_temp("nu0.json", R"({
        "algebra":"sv",
        "base":{"type":"onedim","xi_l0":"1","nu0":"0","c":"0"},
        "vector":[{"l":[[1,1]],"coeff":"1"}]})");
    CHECK(run_cli({"reduce", invalid}).code == 2);

    // base-space reduction drives q_reduce
    json qdoc = io::to_json(props::q_spec_0_0_2());
    qdoc["type"] = "qspec";
    json qscenario;
    qscenario["algebra"] = "sv";
    qscenario["space"] = "base";
    qscenario["base"] = qdoc;
    qscenario["vector"] = json::parse(R"([{"v":[[0,1],[0],[]],"coeff":"1"}])");
    std::string qspace = write_temp("qspace.json", qscenario.dump());
    r = run_cli({"reduce", qspace});
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["trace"].size() == 1);
    CHECK(j["terminal"][0]["coeff"] == "-1");

    // w22 scenario
    std::string wsc = write_temp("w.json", R"({
        "algebra":"w22",
        "base":{"type":"onedim","xi_l0":"1","hw":"1","cw":"0"},
        "vector":[{"l":[[1,1]],"coeff":"1"}],
        "action":[{"f":"L","n":1}]})");
    r = run_cli({"reduce", wsc});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["trace"].empty());  // L_1 L_-1 (x) 1 already lies in V
}

TEST_CASE("cli props determinism") {
    auto a = run_cli({"props", "--suite", "confluence", "--seed", "42", "--trials", "40"});
    auto b = run_cli({"props", "--suite", "confluence", "--seed", "42", "--trials", "40"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == "{\"pass\":true,\"failures\":[]}\n");
    CHECK(run_cli({"props", "--suite", "unknown"}).code == 2);
}

TEST_CASE("normal monomial serialization") {
    Mono m{{Generator::M(-2), 1}, {Generator::Y(-1), 2}, {Generator::L(-1), 1}};
    CHECK(io::to_json(m).dump() ==
          R"([[{"f":"M","n":-2},1],[{"f":"Y","a":-1},2],[{"f":"L","n":-1},1]])");
}

TEST_CASE("canonical form means byte-identical serialization") {
    props::Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        LinComb<Generator> a, b;
        std::vector<std::pair<Generator, Scalar>> terms;
        for (int i = 0; i < 5; ++i)
            terms.push_back({props::random_generator(rng, Algebra::SV, -3, 3), rng.scalar(-3, 3, 2)});
        for (const auto& [g, c] : terms) a.add(g, c);
        // same terms in a shuffled order with a cancelling pair appended
        for (size_t i = terms.size(); i-- > 0;) b.add(terms[i].first, terms[i].second);
        Generator extra = props::random_generator(rng, Algebra::SV, -3, 3);
        b.add(extra, Scalar(5, 7));
        b.add(extra, Scalar(-5, 7));
        CHECK(a == b);
        CHECK(io::to_json(a).dump() == io::to_json(b).dump());
    }
}
