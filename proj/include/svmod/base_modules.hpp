#pragma once

#include "svmod/errors.hpp"
#include "svmod/generator.hpp"
#include "svmod/lincomb.hpp"
#include "svmod/multi_index.hpp"
#include "svmod/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace svmod {

/// Parameters of the subalgebra G_{d1,d2} a base module lives over, together
/// with the scalars by which the central elements M_0 and C act.
struct SubalgebraParams {
    unsigned d1 = 0, d2 = 0, t = 0;
    Scalar nu0, c;

    SubalgebraParams(unsigned d1_, unsigned d2_, unsigned t_, Scalar nu0_, Scalar c_)
        : d1(d1_), d2(d2_), t(t_), nu0(std::move(nu0_)), c(std::move(c_)) {
        if (static_cast<long>(d1) < 2L * d2 - 1)
            throw std::invalid_argument("SubalgebraParams: d1 >= 2*d2 - 1 required");
        if (t == 0 && nu0.is_zero())
            throw std::invalid_argument("SubalgebraParams: t = 0 requires nu0 != 0");
    }
};

/// Opaque basis key of a base module: exponent blocks over its free
/// generators. One-dimensional modules use no blocks. Block-lexicographic
/// comparison coincides with the quotient-module degree order.
struct BaseKey {
    std::vector<FiniteTuple> blocks;
    friend bool operator<(const BaseKey& a, const BaseKey& b) { return a.blocks < b.blocks; }
    friend bool operator==(const BaseKey& a, const BaseKey& b) { return a.blocks == b.blocks; }
    bool is_cyclic() const {
        for (const auto& t : blocks)
            for (uint32_t e : t)
                if (e) return false;
        return true;
    }
};

using BaseVector = LinComb<BaseKey>;

std::string to_string(const BaseKey& k);

/// A module over G_{d1,d2} exposed through exact generator actions on basis
/// keys. Implementations must satisfy the high-index vanishing rule:
/// M_i, Y_{a+1/2}, L_k act as zero for i > t, a > t + d2 - 1, k > t + d1.
class BaseModule {
public:
    virtual ~BaseModule() = default;

    const SubalgebraParams& params() const { return params_; }
    virtual bool one_dimensional() const { return false; }

    BaseKey cyclic() const { return cyclic_impl(); }

    /// g * k for g in the subalgebra; rejects generators outside it.
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
        if (g.alg != Algebra::SV) return false;
        switch (g.fam) {
            case Family::M: return g.index >= -static_cast<int>(params_.d1);
            case Family::Y: return g.index >= -static_cast<int>(params_.d2);
            case Family::L: return g.index >= 0;
            case Family::C: return true;
            default: return false;
        }
    }

protected:
    explicit BaseModule(SubalgebraParams p) : params_(std::move(p)) {}
    virtual BaseKey cyclic_impl() const { return BaseKey{}; }
    SubalgebraParams params_;
};

/// One-dimensional G_{0,0}-module with t = 0: L_0, M_0, C act by the given
/// scalars, all other subalgebra generators act as zero. Ind of this module
/// is the Verma module.
class OneDimModule : public BaseModule {
public:
    OneDimModule(Scalar xi_l0, Scalar nu0, Scalar c)
        : BaseModule(SubalgebraParams(0, 0, 0, std::move(nu0), std::move(c))), xi_l0_(std::move(xi_l0)) {}

    bool one_dimensional() const override { return true; }
    const Scalar& xi_l0() const { return xi_l0_; }
    using BaseModule::act_sub;
    BaseVector act_sub(const Generator& g, const BaseKey& k) const override;

private:
    Scalar xi_l0_;
};

/// The full datum of a quotient module Q = U / I: index sets, their scalars,
/// and the central scalar. Scalars attached to S_nu1 must be nonzero, those
/// attached to S_nu0 zero; 0 and t always lie in S_nu1.
struct QSpec {
    unsigned t = 0, d1 = 0, d2 = 0;
    std::set<int> S_lambda, S_mu, S_nu0, S_nu1;
    std::map<int, Scalar> lambda, mu, nu;
    Scalar c;

    /// Structural validation: ranges, disjointness, scalar/set coherence.
    /// Throws std::invalid_argument; does not evaluate conditions (I)-(VII).
    void validate() const;

    std::set<int> S_nu() const;
    std::vector<int> sbar_lambda() const;  // p_1 = 0 < ... < p_m
    std::vector<int> sbar_mu() const;      // q_1 < ... < q_n, q_1 >= -d2 + 1
    std::vector<int> sbar_nu() const;      // r_1 < ... < r_l

    /// Substitution scalars with the lambda_i = 0 (etc.) conventions outside
    /// the explicit sets. Callers must not ask about free indices.
    Scalar lambda_scalar(int i) const;
    Scalar mu_scalar(int j) const;
    Scalar nu_scalar(int k) const;
};

/// One entry of the condition report.
struct ConditionResult {
    std::string name;  // "I" .. "VII"
    bool pass = true;
    std::optional<std::pair<int, int>> pair_witness;  // failing (i,j) for I-IV
    std::optional<int> element_witness;               // uncovered j for V-VII
    std::map<int, int> chosen;                        // V-VII: j -> selected y on pass
};

using VerifyReport = std::vector<ConditionResult>;

/// Evaluates conditions (I)-(VII) over the finite ranges. (V)-(VII) use the
/// surviving-term reading: a witness y is accepted for j only if every
/// higher-position bracket chain lands on a vanishing scalar, so the
/// per-step degree predictions of the reduction are guaranteed.
VerifyReport verify_conditions(const QSpec& spec);

bool all_pass(const VerifyReport& report);

/// Witness searches behind conditions (V)-(VII); also drive the reduction.
std::optional<int> case1_witness(const QSpec& spec, int p_x);
std::optional<int> case2_witness(const QSpec& spec, int q_x);
std::optional<int> case3_witness(const QSpec& spec, int r_x);

/// The quotient module Q with basis L^i Y^j M^k over the complement sets.
class QModule : public BaseModule {
public:
    explicit QModule(QSpec spec);

    const QSpec& spec() const { return spec_; }

    const std::vector<int>& p() const { return p_; }
    const std::vector<int>& q() const { return q_; }
    const std::vector<int>& r() const { return r_; }

    using BaseModule::act_sub;
    BaseVector act_sub(const Generator& g, const BaseKey& k) const override;

    BaseKey monomial(const FiniteTuple& i, const FiniteTuple& j, const FiniteTuple& k) const;

protected:
    BaseKey cyclic_impl() const override {
        return monomial(FiniteTuple(p_.size(), 0), FiniteTuple(q_.size(), 0), FiniteTuple(r_.size(), 0));
    }

private:
    friend struct QUniverse;
    QSpec spec_;
    std::vector<int> p_, q_, r_;
    std::map<int, size_t> p_pos_, q_pos_, r_pos_;
};

/// Degree of a nonzero Q-vector: the maximal key under (i, j, k) compared
/// block-lexicographically. Rejects the zero vector.
BaseKey q_deg(const BaseVector& v);

struct QTraceStep {
    int case_id = 0;  // 1, 2, 3
    Generator applied;
    Scalar subtracted;
    BaseKey predicted, actual;
};

struct QReduceResult {
    BaseVector terminal;
    std::vector<QTraceStep> trace;
};

/// Repeatedly applies the Case-1/2/3 element until the degree is the zero
/// tuple, asserting the predicted degree at every step. Requires a spec that
/// passes verify_conditions; prediction mismatches abort with
/// invariant_violation.
QReduceResult q_reduce(const BaseVector& v, const QModule& Q);

std::shared_ptr<OneDimModule> make_onedim(Scalar xi_l0, Scalar nu0, Scalar c);

/// The G_{1,1} quotient with free generators L_0, Y_{-1/2}, M_{-1}
/// (t = d1 = d2 = 1), realized as a QSpec instance.
std::shared_ptr<QModule> make_whittaker(Scalar l1, Scalar l2, Scalar m1, Scalar m2,
                                        Scalar nu0, Scalar nu1, Scalar c);

struct ProbeResult {
    bool pass = true;
    std::string detail;
};

/// Checks that M_t kills no nonzero sample vector and preserves linear
/// independence of the sample (exact rank computation). A probe, not a proof.
ProbeResult mt_injectivity_probe(const BaseModule& V, const std::vector<BaseVector>& sample);

}  // namespace svmod
