#pragma once

#include "svmod/base_modules.hpp"
#include "svmod/generator.hpp"
#include "svmod/induced.hpp"
#include "svmod/lincomb.hpp"
#include "svmod/multi_index.hpp"
#include "svmod/pbw.hpp"
#include "svmod/w22.hpp"

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace svmod::io {

using json = nlohmann::ordered_json;

// scalars are strings "p/q" (or "p" when q = 1)
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

// {"f":"L","n":-2}, {"f":"Y","a":-3} (meaning Y_{-5/2}), {"f":"C"}
json to_json(const Generator& g);
Generator generator_from_json(const json& j, Algebra alg);

// sorted [position, exponent] pairs
json to_json(const MultiIndex& m);
MultiIndex multi_index_from_json(const json& j);

// [{"g":generator,"c":"coeff"}] in the canonical key order
json to_json(const LinComb<Generator>& v);

// ordered [generator, exponent] pairs
json to_json(const Mono& m);

// list of exponent blocks
json to_json(const BaseKey& k);
BaseKey base_key_from_json(const json& j);

json to_json(const BaseVector& v);  // [{"v":key,"coeff":...}]
BaseVector base_vector_from_json(const json& j);

// [{"m":..,"y":..,"l":..,"v":..,"coeff":".."}]
json to_json(const IndVector& v);
IndVector ind_vector_from_json(const json& j);

// [{"w":..,"l":..,"v":..,"coeff":".."}]
json to_json(const WIndVector& v);
WIndVector w_ind_vector_from_json(const json& j);

json to_json(const TripleIndex& t);
json to_json(const PairIndex& p);

json to_json(const QSpec& s);
QSpec qspec_from_json(const json& j);

json to_json(const VerifyReport& r);

json to_json(const std::vector<IndTraceStep>& trace);
json to_json(const std::vector<QTraceStep>& trace);
json to_json(const std::vector<WTraceStep>& trace);

/// A reduction scenario: which algebra, a base-module document, a vector,
/// and an optional list of generators to apply first.
struct Scenario {
    Algebra algebra = Algebra::SV;
    bool base_space = false;  // "space": "base" reduces inside Q via q_reduce
    std::shared_ptr<BaseModule> sv_base;
    std::shared_ptr<QModule> q_base;  // set when the SV base is a quotient
    std::shared_ptr<WBaseModule> w_base;
    IndVector sv_vector;
    WIndVector w_vector;
    BaseVector q_vector;
    std::vector<Generator> action;
};

Scenario scenario_from_json(const json& j);

std::shared_ptr<BaseModule> sv_base_from_json(const json& j, std::shared_ptr<QModule>* q_out = nullptr);
std::shared_ptr<WBaseModule> w_base_from_json(const json& j);

}  // namespace svmod::io
