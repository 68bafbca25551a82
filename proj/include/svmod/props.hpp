#pragma once

#include "svmod/base_modules.hpp"
#include "svmod/induced.hpp"
#include "svmod/pbw.hpp"
#include "svmod/w22.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace svmod::props {

/// Deterministic RNG; every suite derives per-trial streams from (seed, index)
/// so results are independent of trial order.
class Rng {
public:
    explicit Rng(uint64_t seed) : e_(seed) {}
    uint64_t raw() { return e_(); }
    /// uniform-ish in [0, n); n = 0 yields 0
    uint64_t next(uint64_t n) { return n ? e_() % n : 0; }
    int range(int lo, int hi) { return lo + static_cast<int>(next(static_cast<uint64_t>(hi - lo + 1))); }
    bool chance(unsigned num, unsigned den) { return next(den) < num; }
    Scalar scalar(long lo, long hi, long den_max = 1) {
        long num = range(static_cast<int>(lo), static_cast<int>(hi));
        long den = den_max > 1 ? range(1, static_cast<int>(den_max)) : 1;
        return Scalar(num, den);
    }

private:
    std::mt19937_64 e_;
};

uint64_t derive_seed(uint64_t seed, uint64_t stream);

// ------------------------------------------------------------ oracles

/// Random-strategy expansion oracle for PBW normal forms: repeatedly rewrites
/// one randomly chosen adjacent inversion x y -> y x + [x,y] until every word
/// is sorted. Independent of the straighten implementation; all strategies
/// must agree with it (PBW uniqueness).
LinComb<Mono> straighten_oracle(const Word& w, GenOrder order, Rng& rng);

// ------------------------------------------------------- random builders

Generator random_generator(Rng& rng, Algebra alg, int lo, int hi, bool include_central = true);

/// Random element of Ind(V): up to max_terms keys, each of slot weight
/// <= max_weight and at most max_factors slot units.
IndVector random_ind_vector(Rng& rng, const BaseModule& V, unsigned max_terms, unsigned max_weight,
                            unsigned max_factors = 4, bool random_base_keys = true);
WIndVector random_w_ind_vector(Rng& rng, const WBaseModule& V, unsigned max_terms, unsigned max_weight,
                               unsigned max_factors = 4, bool random_base_keys = true);
BaseVector random_q_vector(Rng& rng, const QModule& Q, unsigned max_terms, unsigned support_bound,
                           unsigned entry_bound);
BaseKey random_base_key(Rng& rng, const BaseModule& V, unsigned entry_bound);

// ------------------------------------------------- standard instances

std::shared_ptr<BaseModule> verma_std();            // xi(L_0)=1, nu0=1, c=0
std::shared_ptr<QModule> whittaker_std();           // all scalars 1, c=0
QSpec q_spec_0_0_2();                             // d1=d2=0, t=2
std::shared_ptr<QModule> q_module_0_0_2();
QSpec q_spec_1_0_2();                               // d1=1, d2=0, t=2
QSpec q_spec_3_2_2();                               // d1=3, d2=2, t=2
std::shared_ptr<WBaseModule> w_onedim_std();        // xi=1, hW=1, cW=0
std::shared_ptr<WWhittakerModule> w_whittaker_std(unsigned d, unsigned t);

/// The five descent-fidelity configurations (d1, d2, t) with suitable bases.
std::vector<std::pair<std::string, std::shared_ptr<BaseModule>>> descent_configs();
/// The three W(2,2) configurations (d, t).
std::vector<std::pair<std::string, std::shared_ptr<WBaseModule>>> w_configs();

// ------------------------------------------------- exhaustive sweeps

/// Antisymmetry of the bracket over all generator pairs with indices in
/// [-window, window]; returns a description of the first failure.
bool exhaustive_antisymmetry(Algebra alg, int window, std::string* err = nullptr);
/// Jacobi over all generator triples with indices in [-window, window].
bool exhaustive_jacobi(Algebra alg, int window, std::string* err = nullptr);

// ------------------------------------------------------- suite runner

struct SuiteResult {
    std::string suite;
    bool pass = true;
    uint64_t trials = 0;
    std::vector<std::string> failures;
};

const std::vector<std::string>& suite_names();  // jacobi, module-axiom, descent, reduction,
                                                // nilpotency, singular, w22, confluence
SuiteResult run_suite(const std::string& name, uint64_t seed, uint64_t trials);
std::vector<SuiteResult> run_all_suites(uint64_t seed, uint64_t trials);

}  // namespace svmod::props
