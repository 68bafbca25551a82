#include <doctest.h>

#include "svmod/props.hpp"
#include "svmod/w22.hpp"

using namespace svmod;

namespace {

WIndVector cyc_vec(const WBaseModule& V) { return w_ind_term(PairIndex{}, V.cyclic()); }

PairIndex pr(MultiIndex w, MultiIndex l) { return {std::move(w), std::move(l)}; }

WIndVector wt_on_cyclic(const WBaseModule& V) {
    WIndVector out;
    for (const auto& [k, c] : V.act_sub(Generator::WW(static_cast<int>(V.params().t)), V.cyclic()))
        out.add(WIndKey{PairIndex{}, k}, c);
    return out;
}

}  // namespace

TEST_CASE("t0 condition check") {
    auto n = t0_condition_check(Scalar(-1), Scalar(1));
    REQUIRE(n.has_value());
    CHECK(*n == 5);  // 2(-1) + (25-1)/12 = 0

    CHECK_FALSE(t0_condition_check(Scalar(1), Scalar(0)));
    CHECK(t0_condition_check(Scalar(0), Scalar(0)) == 1);
    CHECK(t0_condition_check(Scalar(0), Scalar(5, 3)) == 1);
    CHECK_FALSE(t0_condition_check(Scalar(1), Scalar(1)));  // n^2 = -23
    CHECK_FALSE(t0_condition_check(Scalar(-1, 24), Scalar(1)));  // n^2 = 2, not a square
    CHECK(t0_condition_check(Scalar(-1, 3), Scalar(1)) == 3);    // n^2 = 9
}

TEST_CASE("w one-dimensional base") {
    auto V = props::w_onedim_std();  // xi = 1, hW = 1, cW = 0
    BaseVector cyc = BaseVector::single(V->cyclic(), Scalar(1));
    CHECK(V->act_sub(Generator::WL(0), cyc) == cyc);
    CHECK(V->act_sub(Generator::WW(0), cyc) == cyc);
    CHECK(V->act_sub(Generator::WW(3), cyc).zero());
    CHECK(V->act_sub(Generator::WL(2), cyc).zero());
    CHECK_THROWS_AS(V->act_sub(Generator::WL(-1), V->cyclic()), std::invalid_argument);
    // t = 0 parameter gate
    CHECK_THROWS_AS(make_w_onedim(Scalar(1), Scalar(-1), Scalar(1)), std::invalid_argument);
    CHECK_THROWS_AS(make_w_onedim(Scalar(1), Scalar(0), Scalar(0)), std::invalid_argument);
}

TEST_CASE("w whittaker base") {
    auto V = props::w_whittaker_std(1, 1);
    BaseVector cyc = BaseVector::single(V->cyclic(), Scalar(1));
    CHECK(V->act_sub(Generator::WW(1), cyc) == cyc);   // omega_t = 1
    CHECK(V->act_sub(Generator::WW(2), cyc).zero());
    CHECK(V->act_sub(Generator::WL(1), cyc) == cyc);   // lambda_1 = 1
    CHECK(V->act_sub(Generator::WL(3), cyc).zero());
    // W_0 and W_-1 are free generators
    CHECK(V->act_sub(Generator::WW(0), cyc) == BaseVector::single(V->monomial({0, 1}, 0), Scalar(1)));
    CHECK(V->act_sub(Generator::WW(-1), cyc) == BaseVector::single(V->monomial({1, 0}, 0), Scalar(1)));

    // bracket-forced lambda zeros are rejected
    CHECK_THROWS_AS(make_w_whittaker(2, 2, {{3, Scalar(1)}}, Scalar(1), Scalar(0)), std::invalid_argument);
    CHECK_THROWS_AS(make_w_whittaker(1, 1, {}, Scalar(0), Scalar(0)), std::invalid_argument);

    CHECK(wt_injectivity_probe(*V, {cyc, BaseVector::single(V->monomial({0, 1}, 1), Scalar(1))}).pass);
}

TEST_CASE("w_act worked values") {
    auto V = props::w_onedim_std();
    WIndVector l1 = w_ind_term(pr({}, MultiIndex::eps(1)), V->cyclic());
    // L_1 L_-1 (x) 1 = -2 xi(L_0)
    CHECK(w_act(Generator::WL(1), l1, *V) == cyc_vec(*V) * Scalar(-2));
    CHECK(w_act(Generator::WC(), l1, *V) == l1 * V->params().cW);
    CHECK(w_act(Generator::WW(1), cyc_vec(*V), *V).zero());
}

TEST_CASE("w descent steps") {
    for (const auto& [name, V] : props::w_configs()) {
        INFO(name);
        const int t = static_cast<int>(V->params().t), d = static_cast<int>(V->params().d);

        {
            // L_-1 slot: W_{1+t} lands on -(t+2) W_t
            WIndVector v = w_ind_term(pr({}, MultiIndex::eps(1)), V->cyclic());
            auto st = w_descent_step(v, *V);
            CHECK(st.applied == Generator::WW(1 + t));
            CHECK(st.predicted == PairIndex{});
            CHECK(st.result == wt_on_cyclic(*V) * Scalar(-(t + 2)));
        }
        {
            // W_{-d-2} slot: L_{2+t+d} lands on -(2d+t+4) W_t
            WIndVector v = w_ind_term(pr(MultiIndex::eps(2), {}), V->cyclic());
            auto st = w_descent_step(v, *V);
            CHECK(st.applied == Generator::WL(2 + t + d));
            CHECK(st.predicted == PairIndex{});
            CHECK(st.result == wt_on_cyclic(*V) * Scalar(-(2 * d + t + 4)));
        }
        CHECK_THROWS_AS(w_descent_step(cyc_vec(*V), *V), std::invalid_argument);
    }
}

TEST_CASE("w reduce and module axiom") {
    props::Rng rng(424242);
    for (const auto& [name, Vp] : props::w_configs()) {
        INFO(name);
        const auto& V = *Vp;
        const int t = static_cast<int>(V.params().t), d = static_cast<int>(V.params().d);

        auto r0 = w_reduce(cyc_vec(V), V);
        CHECK(r0.trace.empty());

        for (int trial = 0; trial < 50; ++trial) {
            WIndVector v = props::random_w_ind_vector(rng, V, 3, 5);
            if (v.zero()) continue;
            uint64_t bound = w_deg(v).total();
            auto r = w_reduce(v, V);
            CHECK(r.trace.size() <= bound);
            CHECK_FALSE(r.terminal.zero());
        }

        for (int trial = 0; trial < 50; ++trial) {
            Generator x = props::random_generator(rng, Algebra::W22, -5, t + d + 3);
            Generator y = props::random_generator(rng, Algebra::W22, -5, t + d + 3);
            WIndVector v = props::random_w_ind_vector(rng, V, 3, 5);
            WIndVector lhs = w_act(x, w_act(y, v, V), V) - w_act(y, w_act(x, v, V), V);
            WIndVector rhs;
            for (const auto& [h, ch] : w22_bracket(x, y)) rhs += w_act(h, v, V) * ch;
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("w nilpotency and freeness") {
    for (const auto& [name, Vp] : props::w_configs()) {
        INFO(name);
        const auto& V = *Vp;
        const int t = static_cast<int>(V.params().t), d = static_cast<int>(V.params().d);

        CHECK(w_nilpotency_probe(Generator::WW(t + 1), cyc_vec(V), V, 6) == 1u);
        WIndVector l1 = w_ind_term(pr({}, MultiIndex::eps(1)), V.cyclic());
        CHECK(w_nilpotency_probe(Generator::WW(t + 1), l1, V, 6) == 2u);
        CHECK(w_nilpotency_probe(Generator::WL(t + d + 1), l1, V, 6).has_value());

        CHECK_FALSE(w_nilpotency_probe(Generator::WW(-d - 1), cyc_vec(V), V, 6).has_value());
        CHECK_FALSE(w_nilpotency_probe(Generator::WL(-1), cyc_vec(V), V, 6).has_value());
    }
}

TEST_CASE("w principal degree") {
    auto V = props::w_onedim_std();
    WIndVector v = w_ind_term(pr(MultiIndex::eps(5), {}), V->cyclic());
    v += w_ind_term(pr({}, MultiIndex::eps(1)), V->cyclic());
    CHECK(w_deg(v) == pr({}, MultiIndex::eps(1)));  // L slot dominates
    CHECK(w_supp(v).size() == 2);
    CHECK_THROWS_AS(w_deg(WIndVector{}), std::domain_error);
}
