#pragma once

#include "svmod/base_modules.hpp"
#include "svmod/errors.hpp"
#include "svmod/generator.hpp"
#include "svmod/lincomb.hpp"
#include "svmod/multi_index.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace svmod {

/// Decides 2*hW + (n^2-1)/12 * cW != 0 for all nonzero integers n, exactly.
/// Returns the failing n (positive) or nullopt on pass.
std::optional<long> t0_condition_check(const Scalar& hW, const Scalar& cW);

/// Parameters of W_d = span{W_{i-d}, L_i, C_W} together with the scalars by
/// which W_0 and C_W act on the base (the W_0 scalar is meaningful for
/// one-dimensional bases only; W_0 is not central in W_d).
struct WSubalgebraParams {
    unsigned d = 0, t = 0;
    Scalar hW, cW;

    WSubalgebraParams(unsigned d_, unsigned t_, Scalar hW_, Scalar cW_)
        : d(d_), t(t_), hW(std::move(hW_)), cW(std::move(cW_)) {
        if (t == 0) {
            if (auto n = t0_condition_check(hW, cW))
                throw std::invalid_argument("WSubalgebraParams: t = 0 condition fails at n = " + std::to_string(*n));
        }
    }
};

/// Base module over W_d; the mirror of BaseModule.
class WBaseModule {
public:
    virtual ~WBaseModule() = default;
    const WSubalgebraParams& params() const { return params_; }
    virtual bool one_dimensional() const { return false; }
    BaseKey cyclic() const { return cyclic_impl(); }

    virtual BaseVector act_sub(const Generator& g, const BaseKey& k) const = 0;
    BaseVector act_sub(const Generator& g, const BaseVector& v) const {
        BaseVector out;
        for (const auto& [k, c] : v) {
            BaseVector part = act_sub(g, k);
            part *= c;
            out += part;
        }
        return out;
    }

    bool in_subalgebra(const Generator& g) const {
        if (g.alg != Algebra::W22) return false;
        switch (g.fam) {
            case Family::W: return g.index >= -static_cast<int>(params_.d);
            case Family::L: return g.index >= 0;
            case Family::C: return true;
            default: return false;
        }
    }

protected:
    explicit WBaseModule(WSubalgebraParams p) : params_(std::move(p)) {}
    virtual BaseKey cyclic_impl() const { return BaseKey{}; }
    WSubalgebraParams params_;
};

/// One-dimensional W_0-module with t = 0: L_0 -> xi, W_0 -> hW, C_W -> cW,
/// all positively indexed generators act as zero.
class WOneDimModule : public WBaseModule {
public:
    WOneDimModule(Scalar xi_l0, Scalar hW, Scalar cW)
        : WBaseModule(WSubalgebraParams(0, 0, std::move(hW), std::move(cW))), xi_l0_(std::move(xi_l0)) {}
    bool one_dimensional() const override { return true; }
    const Scalar& xi_l0() const { return xi_l0_; }
    using WBaseModule::act_sub;
    BaseVector act_sub(const Generator& g, const BaseKey& k) const override;

private:
    Scalar xi_l0_;
};

/// Whittaker-style quotient of U(W_d) for t >= 1: free generators L_0 and
/// W_{-d},...,W_{t-1}; the ideal pins L_i - lambda_i (i = 1..t+d, with the
/// bracket-forced zero entries), W_t - omega_t (omega_t != 0), everything
/// above to zero, and C_W - cW.
class WWhittakerModule : public WBaseModule {
public:
    WWhittakerModule(unsigned d, unsigned t, std::map<int, Scalar> lambda, Scalar omega_t, Scalar hW, Scalar cW);

    const Scalar& omega_t() const { return omega_t_; }
    Scalar lambda_scalar(int i) const;
    using WBaseModule::act_sub;
    BaseVector act_sub(const Generator& g, const BaseKey& k) const override;

    /// key blocks: [0] = W exponents over indices -d..t-1, [1] = L_0 exponent
    BaseKey monomial(const FiniteTuple& wexp, uint32_t l0exp) const;

protected:
    BaseKey cyclic_impl() const override {
        return BaseKey{{FiniteTuple(params_.d + params_.t, 0), FiniteTuple(1, 0)}};
    }

private:
    friend struct WWhitUniverse;
    std::map<int, Scalar> lambda_;
    Scalar omega_t_;
};

std::shared_ptr<WOneDimModule> make_w_onedim(Scalar xi_l0, Scalar hW, Scalar cW);
std::shared_ptr<WWhittakerModule> make_w_whittaker(unsigned d, unsigned t, std::map<int, Scalar> lambda,
                                                   Scalar omega_t, Scalar cW);

/// Checks that W_t kills no nonzero sample vector and preserves independence.
ProbeResult wt_injectivity_probe(const WBaseModule& V, const std::vector<BaseVector>& sample);

/// Basis key of Ind(V) over W(2,2): W-slot s encodes W_{-d-s}, L-slot s
/// encodes L_{-s}.
struct WIndKey {
    PairIndex idx;
    BaseKey v;
    friend bool operator==(const WIndKey& a, const WIndKey& b) { return a.idx == b.idx && a.v == b.v; }
    friend bool operator<(const WIndKey& a, const WIndKey& b) {
        auto c = principal_cmp_w22(a.idx, b.idx);
        if (c != 0) return c < 0;
        return a.v < b.v;
    }
};

using WIndVector = LinComb<WIndKey>;

WIndVector w_ind_term(const PairIndex& t, const BaseKey& b, Scalar c = Scalar(1));

WIndVector w_act(const Generator& g, const WIndVector& v, const WBaseModule& V);

std::vector<PairIndex> w_supp(const WIndVector& v);
PairIndex w_deg(const WIndVector& v);

struct WDescentStep {
    Generator applied;
    PairIndex predicted;
    WIndVector result;
};

/// Two-case mirror of the reduction step: L-slot nonzero -> W_{j^+t}
/// predicting (i, j''); else W-slot nonzero -> L_{i^+t+d} predicting (i', 0).
WDescentStep w_descent_step(const WIndVector& v, const WBaseModule& V);

struct WTraceStep {
    Generator applied;
    PairIndex predicted, actual;
};

struct WReduceResult {
    BaseVector terminal;
    std::vector<WTraceStep> trace;
};

WReduceResult w_reduce(const WIndVector& v, const WBaseModule& V);

std::optional<unsigned> w_nilpotency_probe(const Generator& g, const WIndVector& v,
                                           const WBaseModule& V, unsigned maxN);

}  // namespace svmod
