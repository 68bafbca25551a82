#include <doctest.h>

#include "svmod/base_modules.hpp"
#include "svmod/props.hpp"

using namespace svmod;

namespace {

BaseVector unit_vec(const BaseModule& V) { return BaseVector::single(V.cyclic(), Scalar(1)); }

BaseKey key_of(const QModule& Q, const FiniteTuple& i, const FiniteTuple& j, const FiniteTuple& k) {
    return Q.monomial(i, j, k);
}

const ConditionResult& cond(const VerifyReport& r, const std::string& name) {
    for (const auto& c : r)
        if (c.name == name) return c;
    throw std::logic_error("missing condition " + name);
}

}  // namespace

TEST_CASE("subalgebra parameter validation") {
    CHECK_THROWS_AS(SubalgebraParams(0, 1, 1, Scalar(1), Scalar(0)), std::invalid_argument);  // d1 < 2 d2 - 1
    CHECK_THROWS_AS(SubalgebraParams(0, 0, 0, Scalar(0), Scalar(0)), std::invalid_argument);  // t=0, nu0=0
    CHECK_NOTHROW(SubalgebraParams(1, 1, 1, Scalar(1), Scalar(0)));
    CHECK_NOTHROW(SubalgebraParams(3, 2, 2, Scalar(1), Scalar(0)));
}

TEST_CASE("one-dimensional module") {
    auto V = make_onedim(Scalar(1), Scalar(1), Scalar(0));
    auto cyc = unit_vec(*V);
    CHECK(V->act_sub(Generator::L(0), cyc) == cyc);
    CHECK(V->act_sub(Generator::L(3), cyc).zero());
    CHECK(V->act_sub(Generator::Y(0), cyc).zero());
    CHECK(V->act_sub(Generator::M(0), cyc) == cyc);
    CHECK(V->act_sub(Generator::C(), cyc).zero());  // c = 0
    CHECK(V->one_dimensional());
    CHECK_THROWS_AS(V->act_sub(Generator::L(-1), V->cyclic()), std::invalid_argument);
    CHECK_THROWS_AS(make_onedim(Scalar(1), Scalar(0), Scalar(0)), std::invalid_argument);
}

TEST_CASE("qspec structural validation") {
    QSpec s = props::q_spec_0_0_2();
    CHECK_NOTHROW(s.validate());

    QSpec bad = s;
    bad.S_lambda = {5};  // above t + d1
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = s;
    bad.S_nu1 = {0};  // t missing
    bad.nu = {{0, Scalar(1)}, {1, Scalar(0)}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = s;
    bad.nu[2] = Scalar(0);  // S_nu1 scalar must be nonzero
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = s;
    bad.S_nu0 = {0};  // not disjoint from S_nu1
    bad.nu[0] = Scalar(1);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("the (0,0,2) quotient datum passes all conditions") {
    auto rep = verify_conditions(props::q_spec_0_0_2());
    CHECK(rep.size() == 7);
    CHECK(all_pass(rep));
    // the engine's selections behind (V) and (VI)
    CHECK(cond(rep, "V").chosen.at(0) == 2);
    CHECK(cond(rep, "V").chosen.at(1) == 1);
    CHECK(cond(rep, "VI").chosen.at(2) == 1);
}

TEST_CASE("condition (I) failure carries the witness pair") {
    QSpec s;
    s.t = 3;
    s.d1 = 0;
    s.d2 = 0;
    s.S_lambda = {1, 2};
    s.S_mu = {};
    s.S_nu0 = {};
    s.S_nu1 = {0, 3};
    s.lambda = {{1, Scalar(1)}, {2, Scalar(1)}};
    s.nu = {{0, Scalar(1)}, {3, Scalar(1)}};
    s.c = Scalar(0);
    auto rep = verify_conditions(s);
    CHECK_FALSE(all_pass(rep));
    CHECK_FALSE(cond(rep, "I").pass);
    CHECK(cond(rep, "I").pair_witness == std::pair<int, int>{1, 2});
}

TEST_CASE("small hand-quantified spec passes") {
    QSpec s;
    s.t = 1;
    s.d1 = 0;
    s.d2 = 0;
    s.S_lambda = {1};
    s.S_mu = {1};
    s.S_nu0 = {};
    s.S_nu1 = {0, 1};
    s.lambda = {{1, Scalar(1)}};
    s.mu = {{1, Scalar(1)}};
    s.nu = {{0, Scalar(1)}, {1, Scalar(1)}};
    s.c = Scalar(0);
    CHECK(all_pass(verify_conditions(s)));
}

TEST_CASE("acceptance quotient configs verify") {
    CHECK(all_pass(verify_conditions(props::q_spec_1_0_2())));
    CHECK(all_pass(verify_conditions(props::q_spec_3_2_2())));
    CHECK(all_pass(verify_conditions(props::whittaker_std()->spec())));
}

TEST_CASE("(0,0,2) quotient actions") {
    auto Q = props::q_module_0_0_2();
    // complement sets over the subalgebra ranges: p = {0,1}, q = {2}, r = {}
    CHECK(Q->p() == std::vector<int>{0, 1});
    CHECK(Q->q() == std::vector<int>{2});
    CHECK(Q->r().empty());

    auto unit = unit_vec(*Q);
    BaseKey l0 = key_of(*Q, {1, 0}, {0}, {});
    BaseKey l1 = key_of(*Q, {0, 1}, {0}, {});

    // M_2 . 1 = nu_2
    CHECK(Q->act_sub(Generator::M(2), unit) == unit);  // nu_2 = 1

    // L_2 . (L_0) = lambda_2 L_0 - 2 lambda_2
    BaseVector expect = BaseVector::single(l0, Scalar(1));
    expect.add(Q->cyclic(), Scalar(-2));
    CHECK(Q->act_sub(Generator::L(2), BaseVector::single(l0, Scalar(1))) == expect);

    // M_1 . (L_1) = -nu_2 (nu_1 = 0)
    CHECK(Q->act_sub(Generator::M(1), BaseVector::single(l1, Scalar(1))) ==
          BaseVector::single(Q->cyclic(), Scalar(-1)));

    CHECK_THROWS_AS(Q->act_sub(Generator::L(-1), Q->cyclic()), std::invalid_argument);
    CHECK_THROWS_AS(Q->act_sub(Generator::Y(-1), Q->cyclic()), std::invalid_argument);
}

TEST_CASE("q_deg") {
    auto Q = props::q_module_0_0_2();
    CHECK(q_deg(unit_vec(*Q)) == Q->cyclic());
    BaseVector v = BaseVector::single(key_of(*Q, {1, 0}, {0}, {}), Scalar(1));
    v.add(Q->cyclic(), Scalar(-2));
    CHECK(q_deg(v) == key_of(*Q, {1, 0}, {0}, {}));
    CHECK_THROWS_AS(q_deg(BaseVector{}), std::domain_error);
}

TEST_CASE("q_reduce worked examples on the (0,0,2) quotient") {
    auto Q = props::q_module_0_0_2();

    // L_1 monomial: one Case-1 step with y = 1 yields -nu_2
    auto r1 = q_reduce(BaseVector::single(key_of(*Q, {0, 1}, {0}, {}), Scalar(1)), *Q);
    CHECK(r1.trace.size() == 1);
    CHECK(r1.trace[0].case_id == 1);
    CHECK(r1.trace[0].applied == Generator::M(1));
    CHECK(r1.terminal == BaseVector::single(Q->cyclic(), Scalar(-1)));

    // unit: empty trace
    auto r2 = q_reduce(unit_vec(*Q), *Q);
    CHECK(r2.trace.empty());
    CHECK(r2.terminal == unit_vec(*Q));

    // Y_{3/2} monomial (q_1 = 2 position): one Case-2 step lands in degree zero
    auto r3 = q_reduce(BaseVector::single(key_of(*Q, {0, 0}, {1}, {}), Scalar(1)), *Q);
    CHECK(r3.trace.size() == 1);
    CHECK(r3.trace[0].case_id == 2);
    CHECK(r3.trace[0].applied == Generator::Y(0));  // Y_{1/2} - mu_1
    CHECK(q_deg(r3.terminal).is_cyclic());
    CHECK(r3.terminal == BaseVector::single(Q->cyclic(), Scalar(1)));
}

TEST_CASE("endpoint witness selection is forced by the degree predictions") {
    // t=2, d1=d2=0, S_lambda={2}, S_mu={1}, S_nu1={0,1,2}: condition (V) must
    // reject y=1 for j=0 (the L_1 bracket chain survives through nu_2) and
    // select y=2; with y=1 the Case-1 prediction would fail on L_0 L_1.
    QSpec s;
    s.t = 2;
    s.d1 = 0;
    s.d2 = 0;
    s.S_lambda = {2};
    s.S_mu = {1};
    s.S_nu0 = {};
    s.S_nu1 = {0, 1, 2};
    s.lambda = {{2, Scalar(1)}};
    s.mu = {{1, Scalar(1)}};
    s.nu = {{0, Scalar(1)}, {1, Scalar(1)}, {2, Scalar(1)}};
    s.c = Scalar(0);
    auto rep = verify_conditions(s);
    CHECK(all_pass(rep));
    CHECK(cond(rep, "V").chosen.at(0) == 2);

    QModule Q(s);
    BaseKey l0l1 = Q.monomial({1, 1}, {0}, {});

    // (M_1 - nu_1) applied to L_0 L_1 has degree (1,0), not the predicted (0,1)
    BaseVector wrong = Q.act_sub(Generator::M(1), BaseVector::single(l0l1, Scalar(1)));
    wrong -= BaseVector::single(l0l1, Scalar(1));  // nu_1 = 1
    BaseVector expect = BaseVector::single(Q.monomial({1, 0}, {0}, {}), Scalar(-1));
    expect.add(Q.monomial({0, 1}, {0}, {}), Scalar(-1));
    expect.add(Q.cyclic(), Scalar(1));
    CHECK(wrong == expect);
    CHECK(q_deg(wrong) == Q.monomial({1, 0}, {0}, {}));

    // the engine's choice y=2 keeps every per-step prediction true
    auto r = q_reduce(BaseVector::single(l0l1, Scalar(1)), Q);
    CHECK(r.trace.size() == 2);
    CHECK(r.trace[0].applied == Generator::M(2));
    CHECK(q_deg(r.terminal).is_cyclic());
}

TEST_CASE("whittaker module as a quotient instance") {
    auto W = props::whittaker_std();
    CHECK(W->p() == std::vector<int>{0});
    CHECK(W->q() == std::vector<int>{0});
    CHECK(W->r() == std::vector<int>{-1});

    auto cyc = unit_vec(*W);
    CHECK(W->act_sub(Generator::Y(0), cyc) == cyc);   // mu_1 = 1
    CHECK(W->act_sub(Generator::M(2), cyc).zero());
    CHECK(W->act_sub(Generator::L(1), cyc) == cyc);   // lambda_1 = 1
    CHECK(W->act_sub(Generator::M(0), cyc) == cyc);   // nu_0 = 1
    CHECK_THROWS_AS(make_whittaker(Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(0), Scalar(1), Scalar(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_whittaker(Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(0), Scalar(0)),
                    std::invalid_argument);
}

TEST_CASE("high-index vanishing on sampled basis keys") {
    props::Rng rng(555);
    for (const auto& [name, V] : props::descent_configs()) {
        (void)name;
        const int t = static_cast<int>(V->params().t);
        const int d1 = static_cast<int>(V->params().d1);
        const int d2e = static_cast<int>(V->params().d2);
        for (int trial = 0; trial < 25; ++trial) {
            BaseKey k = props::random_base_key(rng, *V, 2);
            BaseVector kv = BaseVector::single(k, Scalar(1));
            for (int off = 1; off <= 3; ++off) {
                CHECK(V->act_sub(Generator::M(t + off), kv).zero());
                CHECK(V->act_sub(Generator::Y(t + d2e - 1 + off), kv).zero());
                CHECK(V->act_sub(Generator::L(t + d1 + off), kv).zero());
            }
        }
    }
}

TEST_CASE("q_act bracket compatibility") {
    props::Rng rng(777);
    std::vector<std::shared_ptr<QModule>> mods = {props::q_module_0_0_2(), props::whittaker_std(),
                                                  std::make_shared<QModule>(props::q_spec_3_2_2())};
    for (const auto& Q : mods) {
        const int t = static_cast<int>(Q->params().t);
        const int d1 = static_cast<int>(Q->params().d1);
        const int d2e = static_cast<int>(Q->params().d2);
        auto random_sub_gen = [&]() {
            switch (rng.next(7)) {
                case 0:
                case 3: return Generator::M(rng.range(-d1, t + 3));
                case 1:
                case 4: return Generator::Y(rng.range(-d2e, t + d2e + 3));
                case 2:
                case 5: return Generator::L(rng.range(0, t + d1 + 3));
                default: return Generator::C();
            }
        };
        for (int trial = 0; trial < 120; ++trial) {
            Generator x = random_sub_gen(), y = random_sub_gen();
            BaseVector v = props::random_q_vector(rng, *Q, 3, 4, 2);
            BaseVector lhs = Q->act_sub(x, Q->act_sub(y, v)) - Q->act_sub(y, Q->act_sub(x, v));
            BaseVector rhs;
            for (const auto& [h, ch] : sv_bracket(x, y)) {
                BaseVector part = Q->act_sub(h, v);
                part *= ch;
                rhs += part;
            }
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("in-base reduction from random vectors") {
    props::Rng rng(31337);
    std::vector<std::shared_ptr<QModule>> mods = {props::q_module_0_0_2(), props::whittaker_std(),
                                                  std::make_shared<QModule>(props::q_spec_1_0_2()),
                                                  std::make_shared<QModule>(props::q_spec_3_2_2())};
    for (const auto& Q : mods) {
        for (int trial = 0; trial < 60; ++trial) {
            BaseVector v = props::random_q_vector(rng, *Q, 3, 4, 3);
            if (v.zero()) continue;
            auto res = q_reduce(v, *Q);  // per-step predictions asserted inside
            REQUIRE_FALSE(res.terminal.zero());
            REQUIRE(q_deg(res.terminal).is_cyclic());
        }
    }
}

namespace {
// act_sub with M_t forced to zero: what a spec with nu_t = 0 would produce
// if it could sneak past validation
class DegenerateModule : public BaseModule {
public:
    DegenerateModule() : BaseModule(SubalgebraParams(0, 0, 2, Scalar(1), Scalar(0))), inner_(props::q_module_0_0_2()) {}
    using BaseModule::act_sub;
    BaseVector act_sub(const Generator& g, const BaseKey& k) const override {
        if (g.fam == Family::M && g.index == 2) return {};
        return inner_->act_sub(g, k);
    }

private:
    std::shared_ptr<QModule> inner_;
};
}  // namespace

TEST_CASE("injectivity probe") {
    auto V = make_onedim(Scalar(1), Scalar(1), Scalar(0));
    CHECK(mt_injectivity_probe(*V, {unit_vec(*V)}).pass);

    auto Q = props::q_module_0_0_2();
    std::vector<BaseVector> sample = {
        unit_vec(*Q),
        BaseVector::single(Q->monomial({1, 0}, {0}, {}), Scalar(1)),
        BaseVector::single(Q->monomial({0, 1}, {0}, {}), Scalar(1)),
    };
    CHECK(mt_injectivity_probe(*Q, sample).pass);

    DegenerateModule D;
    auto probe = mt_injectivity_probe(D, {BaseVector::single(D.cyclic(), Scalar(1))});
    CHECK_FALSE(probe.pass);
}
