#include "svmod/json_io.hpp"

namespace svmod::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

int expect_int(const json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (!j.is_string()) bad("scalar must be a string \"p/q\"");
    return Scalar(j.get<std::string>());
}

json to_json(const Generator& g) {
    json j;
    j["f"] = family_name(g.fam);
    if (g.fam == Family::C) return j;
    j[g.fam == Family::Y ? "a" : "n"] = g.index;
    return j;
}

Generator generator_from_json(const json& j, Algebra alg) {
    if (!j.is_object() || !j.contains("f") || !j["f"].is_string()) bad("generator needs a family tag \"f\"");
    const std::string f = j["f"].get<std::string>();
    Generator g;
    g.alg = alg;
    if (f == "M")
        g.fam = Family::M;
    else if (f == "Y")
        g.fam = Family::Y;
    else if (f == "L")
        g.fam = Family::L;
    else if (f == "W")
        g.fam = Family::W;
    else if (f == "C")
        g.fam = Family::C;
    else
        bad("unknown family \"" + f + "\"");
    if (g.fam == Family::C) {
        g.index = 0;
    } else if (g.fam == Family::Y) {
        if (!j.contains("a")) bad("Y generator needs \"a\" (meaning Y_{a+1/2})");
        g.index = expect_int(j["a"], "a");
    } else {
        if (!j.contains("n")) bad(std::string(family_name(g.fam)) + " generator needs \"n\"");
        g.index = expect_int(j["n"], "n");
    }
    if (!g.valid()) bad("family " + f + " does not belong to this algebra");
    return g;
}

json to_json(const MultiIndex& m) {
    json j = json::array();
    for (const auto& [p, e] : m.entries()) j.push_back(json::array({p, e}));
    return j;
}

MultiIndex multi_index_from_json(const json& j) {
    if (!j.is_array()) bad("multi-index must be a list of [position, exponent] pairs");
    MultiIndex m;
    for (const auto& pr : j) {
        if (!pr.is_array() || pr.size() != 2) bad("multi-index entry must be [position, exponent]");
        int pos = expect_int(pr[0], "position"), e = expect_int(pr[1], "exponent");
        if (pos < 1 || e < 0) bad("multi-index entries must have position >= 1 and exponent >= 0");
        m.bump(static_cast<uint32_t>(pos), e);
    }
    return m;
}

json to_json(const LinComb<Generator>& v) {
    json j = json::array();
    for (const auto& [g, c] : v) {
        json t;
        t["g"] = to_json(g);
        t["c"] = to_json(c);
        j.push_back(std::move(t));
    }
    return j;
}

json to_json(const Mono& m) {
    json j = json::array();
    for (const auto& [g, e] : m) j.push_back(json::array({to_json(g), e}));
    return j;
}

json to_json(const BaseKey& k) {
    json j = json::array();
    for (const auto& block : k.blocks) j.push_back(block);
    return j;
}

BaseKey base_key_from_json(const json& j) {
    if (!j.is_array()) bad("base key must be a list of exponent blocks");
    BaseKey k;
    for (const auto& block : j) {
        if (!block.is_array()) bad("base key block must be a list");
        FiniteTuple t;
        for (const auto& e : block) {
            int v = expect_int(e, "exponent");
            if (v < 0) bad("exponents must be nonnegative");
            t.push_back(static_cast<uint32_t>(v));
        }
        k.blocks.push_back(std::move(t));
    }
    return k;
}

json to_json(const BaseVector& v) {
    json j = json::array();
    for (const auto& [k, c] : v) {
        json t;
        t["v"] = to_json(k);
        t["coeff"] = to_json(c);
        j.push_back(std::move(t));
    }
    return j;
}

BaseVector base_vector_from_json(const json& j) {
    if (!j.is_array()) bad("base vector must be a list of terms");
    BaseVector v;
    for (const auto& t : j) v.add(base_key_from_json(t.at("v")), scalar_from_json(t.at("coeff")));
    return v;
}

json to_json(const IndVector& v) {
    json j = json::array();
    for (const auto& [k, c] : v) {
        json t;
        t["m"] = to_json(k.idx.m);
        t["y"] = to_json(k.idx.y);
        t["l"] = to_json(k.idx.l);
        t["v"] = to_json(k.v);
        t["coeff"] = to_json(c);
        j.push_back(std::move(t));
    }
    return j;
}

IndVector ind_vector_from_json(const json& j) {
    if (!j.is_array()) bad("vector must be a list of terms");
    IndVector v;
    for (const auto& t : j) {
        TripleIndex idx{multi_index_from_json(t.value("m", json::array())),
                        multi_index_from_json(t.value("y", json::array())),
                        multi_index_from_json(t.value("l", json::array()))};
        BaseKey b = t.contains("v") ? base_key_from_json(t["v"]) : BaseKey{};
        v.add(IndKey{idx, b}, scalar_from_json(t.at("coeff")));
    }
    return v;
}

json to_json(const WIndVector& v) {
    json j = json::array();
    for (const auto& [k, c] : v) {
        json t;
        t["w"] = to_json(k.idx.w);
        t["l"] = to_json(k.idx.l);
        t["v"] = to_json(k.v);
        t["coeff"] = to_json(c);
        j.push_back(std::move(t));
    }
    return j;
}

WIndVector w_ind_vector_from_json(const json& j) {
    if (!j.is_array()) bad("vector must be a list of terms");
    WIndVector v;
    for (const auto& t : j) {
        PairIndex idx{multi_index_from_json(t.value("w", json::array())),
                      multi_index_from_json(t.value("l", json::array()))};
        BaseKey b = t.contains("v") ? base_key_from_json(t["v"]) : BaseKey{};
        v.add(WIndKey{idx, b}, scalar_from_json(t.at("coeff")));
    }
    return v;
}

json to_json(const TripleIndex& t) {
    json j;
    j["m"] = to_json(t.m);
    j["y"] = to_json(t.y);
    j["l"] = to_json(t.l);
    return j;
}

json to_json(const PairIndex& p) {
    json j;
    j["w"] = to_json(p.w);
    j["l"] = to_json(p.l);
    return j;
}

namespace {

json set_to_json(const std::set<int>& s) { return json(std::vector<int>(s.begin(), s.end())); }

std::set<int> set_from_json(const json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be a list of integers");
    std::set<int> s;
    for (const auto& e : j) s.insert(expect_int(e, what));
    return s;
}

json scalar_map_to_json(const std::map<int, Scalar>& m) {
    json j = json::object();
    for (const auto& [k, v] : m) j[std::to_string(k)] = to_json(v);
    return j;
}

std::map<int, Scalar> scalar_map_from_json(const json& j, const char* what) {
    if (!j.is_object()) bad(std::string(what) + " must map index strings to scalar strings");
    std::map<int, Scalar> m;
    for (const auto& [k, v] : j.items()) {
        try {
            m[std::stoi(k)] = scalar_from_json(v);
        } catch (const std::invalid_argument&) {
            bad(std::string(what) + " has a non-integer key \"" + k + "\"");
        }
    }
    return m;
}

}  // namespace

json to_json(const QSpec& s) {
    json j;
    j["t"] = s.t;
    j["d1"] = s.d1;
    j["d2"] = s.d2;
    j["S_lambda"] = set_to_json(s.S_lambda);
    j["S_mu"] = set_to_json(s.S_mu);
    j["S_nu0"] = set_to_json(s.S_nu0);
    j["S_nu1"] = set_to_json(s.S_nu1);
    j["lambda"] = scalar_map_to_json(s.lambda);
    j["mu"] = scalar_map_to_json(s.mu);
    j["nu"] = scalar_map_to_json(s.nu);
    j["c"] = to_json(s.c);
    return j;
}

QSpec qspec_from_json(const json& j) {
    QSpec s;
    int t = expect_int(j.at("t"), "t"), d1 = expect_int(j.at("d1"), "d1"), d2 = expect_int(j.at("d2"), "d2");
    if (t < 0 || d1 < 0 || d2 < 0) bad("t, d1, d2 must be nonnegative");
    s.t = static_cast<unsigned>(t);
    s.d1 = static_cast<unsigned>(d1);
    s.d2 = static_cast<unsigned>(d2);
    s.S_lambda = set_from_json(j.at("S_lambda"), "S_lambda");
    s.S_mu = set_from_json(j.at("S_mu"), "S_mu");
    s.S_nu0 = set_from_json(j.at("S_nu0"), "S_nu0");
    s.S_nu1 = set_from_json(j.at("S_nu1"), "S_nu1");
    s.lambda = scalar_map_from_json(j.value("lambda", json::object()), "lambda");
    s.mu = scalar_map_from_json(j.value("mu", json::object()), "mu");
    s.nu = scalar_map_from_json(j.value("nu", json::object()), "nu");
    s.c = scalar_from_json(j.value("c", json("0")));
    return s;
}

json to_json(const VerifyReport& r) {
    json j = json::array();
    for (const auto& c : r) {
        json e;
        e["condition"] = c.name;
        e["pass"] = c.pass;
        if (c.pair_witness)
            e["witness"] = json::array({c.pair_witness->first, c.pair_witness->second});
        else if (c.element_witness)
            e["witness"] = *c.element_witness;
        else
            e["witness"] = nullptr;
        if (!c.chosen.empty()) {
            json ch = json::object();
            for (const auto& [k, v] : c.chosen) ch[std::to_string(k)] = v;
            e["chosen"] = std::move(ch);
        }
        j.push_back(std::move(e));
    }
    return j;
}

json to_json(const std::vector<IndTraceStep>& trace) {
    json j = json::array();
    for (const auto& st : trace) {
        json e;
        e["applied"] = to_json(st.applied);
        e["predicted"] = to_json(st.predicted);
        e["actual"] = to_json(st.actual);
        j.push_back(std::move(e));
    }
    return j;
}

json to_json(const std::vector<QTraceStep>& trace) {
    json j = json::array();
    for (const auto& st : trace) {
        json e;
        e["case"] = st.case_id;
        e["applied"] = to_json(st.applied);
        e["subtracted"] = to_json(st.subtracted);
        e["predicted"] = to_json(st.predicted);
        e["actual"] = to_json(st.actual);
        j.push_back(std::move(e));
    }
    return j;
}

json to_json(const std::vector<WTraceStep>& trace) {
    json j = json::array();
    for (const auto& st : trace) {
        json e;
        e["applied"] = to_json(st.applied);
        e["predicted"] = to_json(st.predicted);
        e["actual"] = to_json(st.actual);
        j.push_back(std::move(e));
    }
    return j;
}

std::shared_ptr<BaseModule> sv_base_from_json(const json& j, std::shared_ptr<QModule>* q_out) {
    if (!j.is_object() || !j.contains("type")) bad("base document needs a \"type\"");
    const std::string type = j["type"].get<std::string>();
    if (type == "onedim") {
        return make_onedim(scalar_from_json(j.value("xi_l0", json("0"))), scalar_from_json(j.at("nu0")),
                           scalar_from_json(j.value("c", json("0"))));
    }
    if (type == "whittaker") {
        auto q = make_whittaker(scalar_from_json(j.at("lambda1")), scalar_from_json(j.at("lambda2")),
                                scalar_from_json(j.at("mu1")), scalar_from_json(j.at("mu2")),
                                scalar_from_json(j.at("nu0")), scalar_from_json(j.at("nu1")),
                                scalar_from_json(j.value("c", json("0"))));
        if (q_out) *q_out = q;
        return q;
    }
    if (type == "qspec") {
        auto spec = qspec_from_json(j);
        spec.validate();
        auto q = std::make_shared<QModule>(std::move(spec));
        if (q_out) *q_out = q;
        return q;
    }
    bad("unknown SV base type \"" + type + "\"");
}

std::shared_ptr<WBaseModule> w_base_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type")) bad("base document needs a \"type\"");
    const std::string type = j["type"].get<std::string>();
    if (type == "onedim") {
        return make_w_onedim(scalar_from_json(j.value("xi_l0", json("0"))), scalar_from_json(j.at("hw")),
                             scalar_from_json(j.value("cw", json("0"))));
    }
    if (type == "whittaker") {
        int d = expect_int(j.at("d"), "d"), t = expect_int(j.at("t"), "t");
        if (d < 0 || t < 1) bad("whittaker W base needs d >= 0 and t >= 1");
        return make_w_whittaker(static_cast<unsigned>(d), static_cast<unsigned>(t),
                                scalar_map_from_json(j.value("lambda", json::object()), "lambda"),
                                scalar_from_json(j.at("omega_t")), scalar_from_json(j.value("cw", json("0"))));
    }
    bad("unknown W22 base type \"" + type + "\"");
}

Scenario scenario_from_json(const json& j) {
    if (!j.is_object()) bad("scenario must be an object");
    Scenario s;
    const std::string alg = j.value("algebra", "sv");
    if (alg == "sv")
        s.algebra = Algebra::SV;
    else if (alg == "w22")
        s.algebra = Algebra::W22;
    else
        bad("algebra must be \"sv\" or \"w22\"");
    s.base_space = j.value("space", "ind") == "base";

    if (s.algebra == Algebra::SV) {
        s.sv_base = sv_base_from_json(j.at("base"), &s.q_base);
        if (s.base_space) {
            if (!s.q_base) bad("space \"base\" needs a quotient base module");
            s.q_vector = base_vector_from_json(j.at("vector"));
        } else {
            s.sv_vector = ind_vector_from_json(j.at("vector"));
        }
    } else {
        if (s.base_space) bad("space \"base\" is only available for the sv algebra");
        s.w_base = w_base_from_json(j.at("base"));
        s.w_vector = w_ind_vector_from_json(j.at("vector"));
    }
    if (j.contains("action")) {
        if (!j["action"].is_array()) bad("action must be a list of generators");
        for (const auto& g : j["action"]) s.action.push_back(generator_from_json(g, s.algebra));
    }
    return s;
}

}  // namespace svmod::io
