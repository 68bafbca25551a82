#include "svmod/props.hpp"

#include "svmod/bracket.hpp"
#include "svmod/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace svmod::props {

uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    // splitmix64 of the pair, so trial streams are independent of order
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// ---------------------------------------------------------------- oracle

LinComb<Mono> straighten_oracle(const Word& w, GenOrder order, Rng& rng) {
    using WordComb = LinComb<Word>;
    WordComb pending = WordComb::single(w, Scalar(1));
    LinComb<Mono> done;

    auto inversions = [order](const Word& word) {
        std::vector<size_t> pos;
        for (size_t i = 0; i + 1 < word.size(); ++i)
            if (gen_rank(word[i], order) > gen_rank(word[i + 1], order)) pos.push_back(i);
        return pos;
    };

    while (!pending.zero()) {
        // retire inversion-free terms, keep the rest active
        WordComb still;
        std::vector<std::pair<Word, Scalar>> active;
        for (const auto& [word, c] : pending) {
            auto inv = inversions(word);
            if (inv.empty()) {
                Mono m;
                for (const auto& g : word) {
                    if (!m.empty() && m.back().first == g)
                        ++m.back().second;
                    else
                        m.push_back({g, 1});
                }
                done.add(m, c);
            } else {
                still.add(word, c);
                active.push_back({word, c});
            }
        }
        pending = std::move(still);
        if (active.empty()) break;

        auto [word, c] = active[rng.next(active.size())];
        auto inv = inversions(word);
        size_t i = inv[rng.next(inv.size())];

        WordComb next;
        for (const auto& [other, oc] : pending)
            if (!(other == word)) next.add(other, oc);
        Word swapped = word;
        std::swap(swapped[i], swapped[i + 1]);
        next.add(swapped, c);
        for (const auto& [h, ch] : lie_bracket(word[i], word[i + 1])) {
            Word shorter;
            shorter.insert(shorter.end(), word.begin(), word.begin() + static_cast<long>(i));
            shorter.push_back(h);
            shorter.insert(shorter.end(), word.begin() + static_cast<long>(i) + 2, word.end());
            next.add(shorter, c * ch);
        }
        pending = std::move(next);
    }
    return done;
}

// ------------------------------------------------------- random builders

Generator random_generator(Rng& rng, Algebra alg, int lo, int hi, bool include_central) {
    if (alg == Algebra::SV) {
        switch (rng.next(include_central ? 7u : 6u)) {
            case 0:
            case 3: return Generator::M(rng.range(lo, hi));
            case 1:
            case 4: return Generator::Y(rng.range(lo, hi));
            case 2:
            case 5: return Generator::L(rng.range(lo, hi));
            default: return Generator::C();
        }
    }
    switch (rng.next(include_central ? 5u : 4u)) {
        case 0:
        case 2: return Generator::WW(rng.range(lo, hi));
        case 1:
        case 3: return Generator::WL(rng.range(lo, hi));
        default: return Generator::WC();
    }
}

namespace {
// distributes at most max_factors slot units of total weight <= max_weight
// over `slots` multi-indices
std::vector<MultiIndex> random_slots(Rng& rng, size_t slots, unsigned max_weight, unsigned max_factors) {
    std::vector<MultiIndex> out(slots);
    unsigned budget = max_weight;
    unsigned factors = static_cast<unsigned>(rng.next(max_factors + 1));
    for (unsigned f = 0; f < factors && budget > 0; ++f) {
        uint32_t pos = 1 + static_cast<uint32_t>(rng.next(budget));
        out[rng.next(slots)].bump(pos, 1);
        budget -= pos;
    }
    return out;
}
}  // namespace

BaseKey random_base_key(Rng& rng, const BaseModule& V, unsigned entry_bound) {
    if (V.one_dimensional()) return V.cyclic();
    const auto* Q = dynamic_cast<const QModule*>(&V);
    if (!Q) return V.cyclic();
    BaseKey k = Q->cyclic();
    for (auto& block : k.blocks)
        for (auto& e : block)
            if (rng.chance(1, 3)) e = static_cast<uint32_t>(rng.next(entry_bound + 1));
    return k;
}

IndVector random_ind_vector(Rng& rng, const BaseModule& V, unsigned max_terms, unsigned max_weight,
                            unsigned max_factors, bool random_base_keys) {
    IndVector v;
    unsigned terms = 1 + static_cast<unsigned>(rng.next(max_terms));
    for (unsigned i = 0; i < terms; ++i) {
        auto s = random_slots(rng, 3, max_weight, max_factors);
        TripleIndex t{s[0], s[1], s[2]};
        BaseKey b = random_base_keys ? random_base_key(rng, V, 2) : V.cyclic();
        v.add(IndKey{t, b}, rng.scalar(-4, 4, 2));
    }
    return v;
}

WIndVector random_w_ind_vector(Rng& rng, const WBaseModule& V, unsigned max_terms, unsigned max_weight,
                               unsigned max_factors, bool random_base_keys) {
    WIndVector v;
    unsigned terms = 1 + static_cast<unsigned>(rng.next(max_terms));
    for (unsigned i = 0; i < terms; ++i) {
        auto s = random_slots(rng, 2, max_weight, max_factors);
        PairIndex t{s[0], s[1]};
        BaseKey b = V.cyclic();
        if (random_base_keys && !V.one_dimensional()) {
            for (auto& block : b.blocks)
                for (auto& e : block)
                    if (rng.chance(1, 3)) e = static_cast<uint32_t>(rng.next(3));
        }
        v.add(WIndKey{t, b}, rng.scalar(-4, 4, 2));
    }
    return v;
}

BaseVector random_q_vector(Rng& rng, const QModule& Q, unsigned max_terms, unsigned support_bound,
                           unsigned entry_bound) {
    BaseVector v;
    unsigned terms = 1 + static_cast<unsigned>(rng.next(max_terms));
    for (unsigned i = 0; i < terms; ++i) {
        BaseKey k = Q.cyclic();
        unsigned placed = 0;
        for (auto& block : k.blocks)
            for (auto& e : block)
                if (placed < support_bound && rng.chance(1, 3)) {
                    e = 1 + static_cast<uint32_t>(rng.next(entry_bound));
                    ++placed;
                }
        v.add(k, rng.scalar(-4, 4, 2));
    }
    return v;
}

// ------------------------------------------------- standard instances

std::shared_ptr<BaseModule> verma_std() { return make_onedim(Scalar(1), Scalar(1), Scalar(0)); }

std::shared_ptr<QModule> whittaker_std() {
    return make_whittaker(Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(0));
}

QSpec q_spec_0_0_2() {
    QSpec s;
    s.t = 2;
    s.d1 = 0;
    s.d2 = 0;
    s.S_lambda = {2};
    s.S_mu = {1};
    s.S_nu0 = {1};
    s.S_nu1 = {0, 2};
    s.lambda = {{2, Scalar(1)}};
    s.mu = {{1, Scalar(1)}};
    s.nu = {{0, Scalar(1)}, {1, Scalar(0)}, {2, Scalar(1)}};
    s.c = Scalar(0);
    return s;
}

std::shared_ptr<QModule> q_module_0_0_2() { return std::make_shared<QModule>(q_spec_0_0_2()); }

QSpec q_spec_1_0_2() {
    QSpec s;
    s.t = 2;
    s.d1 = 1;
    s.d2 = 0;
    s.S_lambda = {2, 3};
    s.S_mu = {1};
    s.S_nu0 = {1};
    s.S_nu1 = {0, 2};
    s.lambda = {{2, Scalar(1)}, {3, Scalar(1)}};
    s.mu = {{1, Scalar(1)}};
    s.nu = {{0, Scalar(1)}, {1, Scalar(0)}, {2, Scalar(1)}};
    s.c = Scalar(0);
    return s;
}

QSpec q_spec_3_2_2() {
    QSpec s;
    s.t = 2;
    s.d1 = 3;
    s.d2 = 2;
    s.S_lambda = {1, 2, 3, 4, 5};
    s.S_mu = {2, 3, 4};
    s.S_nu0 = {};
    s.S_nu1 = {0, 2};
    s.lambda = {{1, Scalar(1)}, {2, Scalar(1)}, {3, Scalar(0)}, {4, Scalar(0)}, {5, Scalar(0)}};
    s.mu = {{2, Scalar(1)}, {3, Scalar(0)}, {4, Scalar(0)}};
    s.nu = {{0, Scalar(1)}, {2, Scalar(1)}};
    s.c = Scalar(0);
    return s;
}

std::shared_ptr<WBaseModule> w_onedim_std() { return make_w_onedim(Scalar(1), Scalar(1), Scalar(0)); }

std::shared_ptr<WWhittakerModule> w_whittaker_std(unsigned d, unsigned t) {
    std::map<int, Scalar> lambda;
    const int td = static_cast<int>(t + d);
    // lambda_i stays free unless a distinct pinned pair sums to it
    for (int i = 1; i <= td; ++i) {
        bool forced_zero = false;
        for (int a = 1; a <= td && !forced_zero; ++a)
            for (int b = a + 1; b <= td; ++b)
                if (a + b == i) {
                    forced_zero = true;
                    break;
                }
        lambda[i] = forced_zero ? Scalar(0) : Scalar(1);
    }
    return make_w_whittaker(d, t, std::move(lambda), Scalar(1), Scalar(0));
}

std::vector<std::pair<std::string, std::shared_ptr<BaseModule>>> descent_configs() {
    return {
        {"(0,0,0) verma", verma_std()},
        {"(1,1,1) whittaker", whittaker_std()},
        {"(1,0,2) quotient", std::make_shared<QModule>(q_spec_1_0_2())},
        {"(3,2,2) quotient", std::make_shared<QModule>(q_spec_3_2_2())},
        {"(0,0,2) quotient", q_module_0_0_2()},
    };
}

std::vector<std::pair<std::string, std::shared_ptr<WBaseModule>>> w_configs() {
    return {
        {"(0,0) one-dim", w_onedim_std()},
        {"(1,1) whittaker", w_whittaker_std(1, 1)},
        {"(2,2) whittaker", w_whittaker_std(2, 2)},
    };
}

// ------------------------------------------------- exhaustive sweeps

namespace {

std::vector<Generator> generator_window(Algebra alg, int window) {
    std::vector<Generator> gs;
    for (int n = -window; n <= window; ++n) {
        if (alg == Algebra::SV) {
            gs.push_back(Generator::M(n));
            gs.push_back(Generator::Y(n));
            gs.push_back(Generator::L(n));
        } else {
            gs.push_back(Generator::WW(n));
            gs.push_back(Generator::WL(n));
        }
    }
    gs.push_back(alg == Algebra::SV ? Generator::C() : Generator::WC());
    return gs;
}

LinComb<Generator> ad(const Generator& x, const LinComb<Generator>& v) {
    LinComb<Generator> out;
    for (const auto& [g, c] : v) out += lie_bracket(x, g) * c;
    return out;
}

}  // namespace

bool exhaustive_antisymmetry(Algebra alg, int window, std::string* err) {
    auto gs = generator_window(alg, window);
    for (const auto& g : gs)
        for (const auto& h : gs)
            if (!(lie_bracket(g, h) == -lie_bracket(h, g))) {
                if (err) *err = "antisymmetry fails at [" + g.str() + ", " + h.str() + "]";
                return false;
            }
    return true;
}

bool exhaustive_jacobi(Algebra alg, int window, std::string* err) {
    auto gs = generator_window(alg, window);
    for (const auto& x : gs)
        for (const auto& y : gs)
            for (const auto& z : gs) {
                auto s = ad(x, lie_bracket(y, z)) + ad(y, lie_bracket(z, x)) + ad(z, lie_bracket(x, y));
                if (!s.zero()) {
                    if (err) *err = "jacobi fails at (" + x.str() + ", " + y.str() + ", " + z.str() + ")";
                    return false;
                }
            }
    return true;
}

// ------------------------------------------------------- suites

namespace {

void record_failure(SuiteResult& r, const std::string& what) {
    r.pass = false;
    if (r.failures.size() < 10) r.failures.push_back(what);
}

SuiteResult suite_jacobi(uint64_t seed, uint64_t trials) {
    SuiteResult r;
    r.suite = "jacobi";
    r.trials = trials;
    for (uint64_t i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        Algebra alg = i % 2 ? Algebra::W22 : Algebra::SV;
        Generator x = random_generator(rng, alg, -6, 6);
        Generator y = random_generator(rng, alg, -6, 6);
        Generator z = random_generator(rng, alg, -6, 6);
        auto s = ad(x, lie_bracket(y, z)) + ad(y, lie_bracket(z, x)) + ad(z, lie_bracket(x, y));
        if (!s.zero()) record_failure(r, "jacobi(" + x.str() + "," + y.str() + "," + z.str() + ")");
        Generator g = random_generator(rng, alg, -10, 10);
        Generator h = random_generator(rng, alg, -10, 10);
        if (!(lie_bracket(g, h) == -lie_bracket(h, g)))
            record_failure(r, "antisymmetry(" + g.str() + "," + h.str() + ")");
    }
    return r;
}

SuiteResult suite_confluence(uint64_t seed, uint64_t trials) {
    SuiteResult r;
    r.suite = "confluence";
    r.trials = trials;
    for (uint64_t i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        Algebra alg = i % 2 ? Algebra::W22 : Algebra::SV;
        GenOrder order = alg == Algebra::W22 ? GenOrder::W22Ind : (i % 4 == 0 ? GenOrder::SvQ : GenOrder::SvInd);
        Word w;
        unsigned len = 1 + static_cast<unsigned>(rng.next(5));
        for (unsigned k = 0; k < len; ++k) w.push_back(random_generator(rng, alg, -4, 4));
        auto nf = straighten(w, order);
        for (int s = 0; s < 5; ++s) {
            Rng strat(derive_seed(seed, (i << 3) + 1 + static_cast<uint64_t>(s)));
            if (!(straighten_oracle(w, order, strat) == nf)) {
                record_failure(r, "strategy " + std::to_string(s) + " disagrees on trial " + std::to_string(i));
                break;
            }
        }
    }
    return r;
}

SuiteResult suite_module_axiom(uint64_t seed, uint64_t trials) {
    SuiteResult r;
    r.suite = "module-axiom";
    r.trials = trials;
    std::vector<std::shared_ptr<BaseModule>> mods = {verma_std(), whittaker_std(), q_module_0_0_2()};
    for (uint64_t i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        const auto& V = *mods[i % mods.size()];
        int hi = static_cast<int>(V.params().t + V.params().d1) + 3;
        Generator x = random_generator(rng, Algebra::SV, -5, hi);
        Generator y = random_generator(rng, Algebra::SV, -5, hi);
        IndVector v = random_ind_vector(rng, V, 3, 5);
        IndVector lhs = act(x, act(y, v, V), V) - act(y, act(x, v, V), V);
        IndVector rhs;
        for (const auto& [h, ch] : sv_bracket(x, y)) rhs += act(h, v, V) * ch;
        if (!(lhs == rhs))
            record_failure(r, "commutator mismatch at trial " + std::to_string(i) + " [" + x.str() + "," +
                                  y.str() + "]");
    }
    return r;
}

SuiteResult suite_descent(uint64_t seed, uint64_t trials) {
    SuiteResult r;
    r.suite = "descent";
    r.trials = trials;
    auto configs = descent_configs();
    for (uint64_t i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        const auto& [name, V] = configs[i % configs.size()];
        IndVector v = random_ind_vector(rng, *V, 3, 5);
        if (v.zero()) continue;
        try {
            reduce_to_base(v, *V);  // asserts every per-step prediction
        } catch (const invariant_violation& e) {
            record_failure(r, name + ": " + e.what());
        }
    }
    return r;
}

SuiteResult suite_reduction(uint64_t seed, uint64_t trials) {
    SuiteResult r;
    r.suite = "reduction";
    r.trials = trials;
    std::vector<std::shared_ptr<BaseModule>> mods = {verma_std(), whittaker_std(), q_module_0_0_2()};
    std::vector<std::shared_ptr<QModule>> qs = {whittaker_std(), q_module_0_0_2(),
                                                std::make_shared<QModule>(q_spec_1_0_2()),
                                                std::make_shared<QModule>(q_spec_3_2_2())};
    for (uint64_t i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        try {
            const auto& V = *mods[i % mods.size()];
            IndVector v = random_ind_vector(rng, V, 3, 5);
            if (!v.zero()) {
                auto res = reduce_to_base(v, V);
                if (res.terminal.zero()) record_failure(r, "zero terminal at trial " + std::to_string(i));
            }
            const auto& Q = *qs[i % qs.size()];
            BaseVector qv = random_q_vector(rng, Q, 3, 4, 3);
            if (!qv.zero()) {
                auto qres = q_reduce(qv, Q);
                if (!q_deg(qres.terminal).is_cyclic())
                    record_failure(r, "q_reduce did not reach degree zero at trial " + std::to_string(i));
            }
        } catch (const invariant_violation& e) {
            record_failure(r, std::string("trial ") + std::to_string(i) + ": " + e.what());
        }
    }
    return r;
}

SuiteResult suite_nilpotency(uint64_t seed, uint64_t trials) {
    SuiteResult r;
    r.suite = "nilpotency";
    r.trials = trials;
    auto configs = descent_configs();
    for (uint64_t i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        const auto& [name, Vp] = configs[i % configs.size()];
        const auto& V = *Vp;
        const int t = static_cast<int>(V.params().t);
        const int d1 = static_cast<int>(V.params().d1);
        const int d2e = static_cast<int>(V.params().d2);

        // small vectors keep the nilpotency index provably within 6
        IndVector v = random_ind_vector(rng, V, 2, 5, 2);
        if (v.zero()) continue;
        Generator anns[3] = {Generator::M(t + 1 + static_cast<int>(rng.next(2))),
                             Generator::Y(t + d2e + static_cast<int>(rng.next(2))),
                             Generator::L(t + d1 + 1 + static_cast<int>(rng.next(2)))};
        for (const auto& g : anns) {
            auto n = nilpotency_probe(g, v, V, 6);
            if (!n) record_failure(r, name + ": " + g.str() + " not nilpotent within 6 steps");
        }

        // negative-part generators act freely on the cyclic vector
        IndVector cyc = ind_term(TripleIndex{}, V.cyclic());
        for (const auto& g : {Generator::M(-d1 - 1), Generator::Y(-static_cast<int>(V.params().d2) - 1),
                              Generator::L(-1)}) {
            if (nilpotency_probe(g, cyc, V, 6))
                record_failure(r, name + ": " + g.str() + " unexpectedly nilpotent on the cyclic vector");
        }
    }
    return r;
}

SuiteResult suite_singular(uint64_t seed, uint64_t trials) {
    (void)seed;
    SuiteResult r;
    r.suite = "singular";
    r.trials = std::min<uint64_t>(trials, 1);
    auto V = verma_std();
    auto res = singular_space(*V, 4);
    if (res.piece_kernel_dim.size() != 5 || res.piece_kernel_dim[0] != 1)
        record_failure(r, "weight-0 piece is not the V part");
    for (size_t w = 1; w < res.piece_kernel_dim.size(); ++w)
        if (res.piece_kernel_dim[w] != 0)
            record_failure(r, "unexpected singular vector at weight " + std::to_string(w));
    return r;
}

SuiteResult suite_w22(uint64_t seed, uint64_t trials) {
    SuiteResult r;
    r.suite = "w22";
    r.trials = trials;

    // pinned t=0 criterion values
    if (auto n = t0_condition_check(Scalar(-1), Scalar(1)); !n || *n != 5)
        record_failure(r, "t0 check must fail at n=5 for (-1, 1)");
    if (t0_condition_check(Scalar(1), Scalar(0))) record_failure(r, "t0 check must pass for (1, 0)");
    if (auto n = t0_condition_check(Scalar(0), Scalar(7, 3)); !n || *n != 1)
        record_failure(r, "t0 check must fail at n=1 for (0, c)");
    if (t0_condition_check(Scalar(1), Scalar(1))) record_failure(r, "t0 check must pass for (1, 1)");

    auto configs = w_configs();
    for (uint64_t i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));

        // t0 criterion against brute force over |n| <= 10^4
        Scalar hw = rng.scalar(-12, 12, 4), cw = rng.scalar(-12, 12, 4);
        std::optional<long> brute;
        for (long n = 1; n <= 10000 && !brute; ++n)
            if ((Scalar(2) * hw + Scalar(n * n - 1, 12) * cw).is_zero()) brute = n;
        auto fast = t0_condition_check(hw, cw);
        bool agree = fast.has_value() == brute.has_value() && (!fast || *fast == *brute);
        if (!agree && !(fast && *fast > 10000))  // witnesses beyond the window still agree
            record_failure(r, "t0 disagreement at hw=" + hw.str() + " cw=" + cw.str());

        const auto& [name, Vp] = configs[i % configs.size()];
        const auto& V = *Vp;
        const int t = static_cast<int>(V.params().t), d = static_cast<int>(V.params().d);

        Generator x = random_generator(rng, Algebra::W22, -5, t + d + 3);
        Generator y = random_generator(rng, Algebra::W22, -5, t + d + 3);
        WIndVector v = random_w_ind_vector(rng, V, 3, 5);
        WIndVector lhs = w_act(x, w_act(y, v, V), V) - w_act(y, w_act(x, v, V), V);
        WIndVector rhs;
        for (const auto& [h, ch] : w22_bracket(x, y)) rhs += w_act(h, v, V) * ch;
        if (!(lhs == rhs)) record_failure(r, name + ": commutator mismatch at trial " + std::to_string(i));

        try {
            WIndVector v2 = random_w_ind_vector(rng, V, 3, 5);
            if (!v2.zero()) {
                auto res = w_reduce(v2, V);
                if (res.terminal.zero()) record_failure(r, name + ": zero terminal");
            }
        } catch (const invariant_violation& e) {
            record_failure(r, name + ": " + e.what());
        }

        WIndVector small = random_w_ind_vector(rng, V, 2, 5, 2);
        if (!small.zero()) {
            Generator anns[2] = {Generator::WW(t + 1 + static_cast<int>(rng.next(2))),
                                 Generator::WL(t + d + 1 + static_cast<int>(rng.next(2)))};
            for (const auto& g : anns)
                if (!w_nilpotency_probe(g, small, V, 6))
                    record_failure(r, name + ": " + g.str() + " not nilpotent within 6 steps");
        }
        WIndVector cyc = w_ind_term(PairIndex{}, V.cyclic());
        for (const auto& g : {Generator::WW(-d - 1), Generator::WL(-1)})
            if (w_nilpotency_probe(g, cyc, V, 6))
                record_failure(r, name + ": " + g.str() + " unexpectedly nilpotent on the cyclic vector");
    }
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"jacobi",     "module-axiom", "descent", "reduction",
                                                   "nilpotency", "singular",     "w22",     "confluence"};
    return names;
}

SuiteResult run_suite(const std::string& name, uint64_t seed, uint64_t trials) {
    if (name == "jacobi") return suite_jacobi(seed, trials);
    if (name == "module-axiom") return suite_module_axiom(seed, trials);
    if (name == "descent") return suite_descent(seed, trials);
    if (name == "reduction") return suite_reduction(seed, trials);
    if (name == "nilpotency") return suite_nilpotency(seed, trials);
    if (name == "singular") return suite_singular(seed, trials);
    if (name == "w22") return suite_w22(seed, trials);
    if (name == "confluence") return suite_confluence(seed, trials);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_all_suites(uint64_t seed, uint64_t trials) {
    std::vector<SuiteResult> out;
    for (const auto& n : suite_names()) out.push_back(run_suite(n, seed, trials));
    return out;
}

}  // namespace svmod::props
