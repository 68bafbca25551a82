#include "svmod/base_modules.hpp"

#include "svmod/engine.hpp"
#include "svmod/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace svmod {

std::string to_string(const BaseKey& k) {
    std::string s = "[";
    for (size_t b = 0; b < k.blocks.size(); ++b) {
        if (b) s += ";";
        for (size_t i = 0; i < k.blocks[b].size(); ++i) {
            if (i) s += ",";
            s += std::to_string(k.blocks[b][i]);
        }
    }
    return s + "]";
}

// ---------------------------------------------------------------- OneDim

BaseVector OneDimModule::act_sub(const Generator& g, const BaseKey& k) const {
    if (!in_subalgebra(g))
        throw std::invalid_argument("OneDimModule: " + g.str() + " outside G_{0,0}");
    if (!k.blocks.empty()) throw std::invalid_argument("OneDimModule: foreign base key");
    Scalar s(0);
    if (g.fam == Family::C)
        s = params_.c;
    else if (g.fam == Family::L && g.index == 0)
        s = xi_l0_;
    else if (g.fam == Family::M && g.index == 0)
        s = params_.nu0;
    BaseVector out;
    out.add(k, s);
    return out;
}

// ---------------------------------------------------------------- QSpec

std::set<int> QSpec::S_nu() const {
    std::set<int> s = S_nu0;
    s.insert(S_nu1.begin(), S_nu1.end());
    return s;
}

namespace {
std::vector<int> complement(int lo, int hi, const std::set<int>& s) {
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i)
        if (!s.count(i)) out.push_back(i);
    return out;
}
}  // namespace

std::vector<int> QSpec::sbar_lambda() const { return complement(0, static_cast<int>(t + d1), S_lambda); }

std::vector<int> QSpec::sbar_mu() const {
    // the subalgebra's Y range starts at -d2+1; Y_{-d2-1/2} is not a
    // generator of G_{d1,d2} and adjoining it breaks condition (b) at
    // L_{t+d1+1} whenever d1 <= 2*d2
    return complement(-static_cast<int>(d2) + 1, static_cast<int>(t + d2), S_mu);
}

std::vector<int> QSpec::sbar_nu() const { return complement(-static_cast<int>(d1), static_cast<int>(t), S_nu()); }

void QSpec::validate() const {
    std::ostringstream err;
    auto fail = [&err](const std::string& m) { throw std::invalid_argument("QSpec: " + m); };

    const int ti = static_cast<int>(t), d1i = static_cast<int>(d1), d2i = static_cast<int>(d2);
    if (static_cast<long>(d1) < 2L * d2 - 1) fail("d1 >= 2*d2 - 1 required");
    for (int i : S_lambda)
        if (i < 1 || i > ti + d1i) fail("S_lambda entry out of range: " + std::to_string(i));
    for (int j : S_mu)
        if (j < -d2i + 1 || j > ti + d2i) fail("S_mu entry out of range: " + std::to_string(j));
    for (int k : S_nu0)
        if (k < -d1i || k > ti) fail("S_nu0 entry out of range: " + std::to_string(k));
    for (int k : S_nu1)
        if (k < -d1i || k > ti) fail("S_nu1 entry out of range: " + std::to_string(k));
    for (int k : S_nu0)
        if (S_nu1.count(k)) fail("S_nu0 and S_nu1 not disjoint at " + std::to_string(k));
    if (!S_nu1.count(0) || !S_nu1.count(ti)) fail("0 and t must lie in S_nu1");

    auto check_map = [&fail](const std::map<int, Scalar>& m, const std::set<int>& keys, const char* name) {
        if (m.size() != keys.size()) fail(std::string(name) + " scalar map does not match its set");
        for (const auto& [k, v] : m) {
            (void)v;
            if (!keys.count(k)) fail(std::string(name) + " scalar for foreign index " + std::to_string(k));
        }
    };
    check_map(lambda, S_lambda, "lambda");
    check_map(mu, S_mu, "mu");
    check_map(nu, S_nu(), "nu");
    for (const auto& [k, v] : nu) {
        if (S_nu1.count(k) && v.is_zero()) fail("nu_" + std::to_string(k) + " must be nonzero (S_nu1)");
        if (S_nu0.count(k) && !v.is_zero()) fail("nu_" + std::to_string(k) + " must be zero (S_nu0)");
    }
}

Scalar QSpec::lambda_scalar(int i) const {
    auto it = lambda.find(i);
    return it == lambda.end() ? Scalar(0) : it->second;
}
Scalar QSpec::mu_scalar(int j) const {
    auto it = mu.find(j);
    return it == mu.end() ? Scalar(0) : it->second;
}
Scalar QSpec::nu_scalar(int k) const {
    auto it = nu.find(k);
    return it == nu.end() ? Scalar(0) : it->second;
}

// ------------------------------------------------------- condition checks

namespace {

bool in_bar_or_nu1(const QSpec& s, const std::set<int>& sbar_nu_set, int e) {
    return sbar_nu_set.count(e) || s.S_nu1.count(e);
}

std::set<int> as_set(const std::vector<int>& v) { return std::set<int>(v.begin(), v.end()); }

}  // namespace

std::optional<int> case1_witness(const QSpec& spec, int p_x) {
    const auto sbar_nu_set = as_set(spec.sbar_nu());
    const auto sbar_lambda = spec.sbar_lambda();
    const int ti = static_cast<int>(spec.t);
    for (int y : spec.S_nu()) {
        if (y == 0) continue;
        if (!in_bar_or_nu1(spec, sbar_nu_set, y + p_x)) continue;
        // every multiset of higher free L-positions whose running sum stays
        // in range must land on a vanishing scalar, otherwise a dominating
        // term survives
        std::vector<int> higher;
        for (int p : sbar_lambda)
            if (p > p_x) higher.push_back(p);
        bool bad = false;
        if (!higher.empty()) {
            std::vector<char> reach(static_cast<size_t>(std::max(0, ti - y)) + 1, 0);
            reach[0] = 1;
            for (size_t s = 0; s < reach.size(); ++s) {
                if (!reach[s]) continue;
                for (int p : higher) {
                    size_t s2 = s + static_cast<size_t>(p);
                    if (s2 < reach.size()) reach[s2] = 1;
                }
            }
            for (size_t s = 1; s < reach.size() && !bad; ++s)
                if (reach[s] && in_bar_or_nu1(spec, sbar_nu_set, y + static_cast<int>(s))) bad = true;
        }
        if (!bad) return y;
    }
    return std::nullopt;
}

std::optional<int> case2_witness(const QSpec& spec, int q_x) {
    const auto sbar_nu_set = as_set(spec.sbar_nu());
    const auto sbar_mu = spec.sbar_mu();
    const auto sbar_mu_set = as_set(sbar_mu);
    const int ti = static_cast<int>(spec.t), d2i = static_cast<int>(spec.d2);
    for (int y = -d2i + 1; y <= ti - q_x + 1; ++y) {
        if (sbar_mu_set.count(y)) continue;  // free generator, not an applicable element
        if (!in_bar_or_nu1(spec, sbar_nu_set, y + q_x - 1)) continue;
        bool bad = false;
        for (int qp : sbar_mu)
            if (qp > q_x && in_bar_or_nu1(spec, sbar_nu_set, y + qp - 1)) bad = true;
        if (!bad) return y;
    }
    return std::nullopt;
}

std::optional<int> case3_witness(const QSpec& spec, int r_x) {
    const auto sbar_nu = spec.sbar_nu();
    const auto sbar_nu_set = as_set(sbar_nu);
    const auto sbar_lambda_set = as_set(spec.sbar_lambda());
    const int ti = static_cast<int>(spec.t);
    for (int y = 1; y <= ti - r_x; ++y) {
        if (sbar_lambda_set.count(y)) continue;
        if (!in_bar_or_nu1(spec, sbar_nu_set, y + r_x)) continue;
        bool bad = false;
        for (int rp : sbar_nu)
            if (rp > r_x && in_bar_or_nu1(spec, sbar_nu_set, y + rp)) bad = true;
        if (!bad) return y;
    }
    return std::nullopt;
}

VerifyReport verify_conditions(const QSpec& spec) {
    spec.validate();
    VerifyReport rep;
    const int ti = static_cast<int>(spec.t), d1i = static_cast<int>(spec.d1), d2i = static_cast<int>(spec.d2);

    {  // (I) pairs in S_lambda
        ConditionResult r;
        r.name = "I";
        for (int i : spec.S_lambda) {
            for (int j : spec.S_lambda) {
                if (i >= j) continue;
                bool ok = (i + j > ti + d1i) ||
                          (spec.S_lambda.count(i + j) && spec.lambda_scalar(i + j).is_zero());
                if (!ok) {
                    r.pass = false;
                    r.pair_witness = {i, j};
                    break;
                }
            }
            if (!r.pass) break;
        }
        rep.push_back(std::move(r));
    }
    {  // (II) S_lambda x S_mu, skipping the vanishing-coefficient pairs i = 2j-1
        ConditionResult r;
        r.name = "II";
        for (int i : spec.S_lambda) {
            for (int j : spec.S_mu) {
                if (i == 2 * j - 1) continue;
                bool ok = (i + j > ti + d2i) || (spec.S_mu.count(i + j) && spec.mu_scalar(i + j).is_zero());
                if (!ok) {
                    r.pass = false;
                    r.pair_witness = {i, j};
                    break;
                }
            }
            if (!r.pass) break;
        }
        rep.push_back(std::move(r));
    }
    {  // (III) pairs in S_mu
        ConditionResult r;
        r.name = "III";
        for (int i : spec.S_mu) {
            for (int j : spec.S_mu) {
                if (i >= j) continue;
                bool ok = (i + j - 1 > ti) || spec.S_nu0.count(i + j - 1);
                if (!ok) {
                    r.pass = false;
                    r.pair_witness = {i, j};
                    break;
                }
            }
            if (!r.pass) break;
        }
        rep.push_back(std::move(r));
    }
    {  // (IV) S_lambda x (S_nu minus 0)
        ConditionResult r;
        r.name = "IV";
        for (int i : spec.S_lambda) {
            for (int j : spec.S_nu()) {
                if (j == 0) continue;
                bool ok = (i + j > ti) || spec.S_nu0.count(i + j);
                if (!ok) {
                    r.pass = false;
                    r.pair_witness = {i, j};
                    break;
                }
            }
            if (!r.pass) break;
        }
        rep.push_back(std::move(r));
    }

    auto existential = [&rep](const char* name, const std::vector<int>& range, auto&& finder) {
        ConditionResult r;
        r.name = name;
        for (int j : range) {
            auto y = finder(j);
            if (!y) {
                r.pass = false;
                r.element_witness = j;
                break;
            }
            r.chosen[j] = *y;
        }
        rep.push_back(std::move(r));
    };
    existential("V", spec.sbar_lambda(), [&spec](int j) { return case1_witness(spec, j); });
    existential("VI", spec.sbar_mu(), [&spec](int j) { return case2_witness(spec, j); });
    existential("VII", spec.sbar_nu(), [&spec](int j) { return case3_witness(spec, j); });
    return rep;
}

bool all_pass(const VerifyReport& report) {
    return std::all_of(report.begin(), report.end(), [](const ConditionResult& r) { return r.pass; });
}

// ---------------------------------------------------------------- QModule

struct QUniverse {
    using Key = detail::Unit;
    const QModule* Q;

    detail::GenClass cls(const Generator& g) const {
        const QSpec& s = Q->spec();
        switch (g.fam) {
            case Family::C:
                return detail::GenClass::Central;
            case Family::L:
                if (Q->p_pos_.count(g.index)) return detail::GenClass::Free;
                if (g.index >= 0) return detail::GenClass::Boundary;
                break;
            case Family::Y: {
                if (Q->q_pos_.count(g.index + 1)) return detail::GenClass::Free;
                if (g.index >= -static_cast<int>(s.d2)) return detail::GenClass::Boundary;
                break;
            }
            case Family::M:
                if (Q->r_pos_.count(g.index)) return detail::GenClass::Free;
                if (g.index >= -static_cast<int>(s.d1)) return detail::GenClass::Boundary;
                break;
            default:
                break;
        }
        throw std::invalid_argument("QModule: " + g.str() + " outside the subalgebra");
    }

    std::pair<int, int64_t> rank(const Generator& g) const { return gen_rank(g, GenOrder::SvQ); }

    Scalar central_scalar(const Generator&) const { return Q->spec().c; }

    LinComb<Key> act_boundary(const Generator& g, const Key&) const {
        const QSpec& s = Q->spec();
        Scalar v(0);
        if (g.fam == Family::L)
            v = s.lambda_scalar(g.index);
        else if (g.fam == Family::Y)
            v = s.mu_scalar(g.index + 1);
        else if (g.fam == Family::M)
            v = s.nu_scalar(g.index);
        LinComb<Key> out;
        out.add(detail::Unit{}, v);
        return out;
    }
};

QModule::QModule(QSpec spec)
    : BaseModule(SubalgebraParams(spec.d1, spec.d2, spec.t, spec.nu.count(0) ? spec.nu.at(0) : Scalar(0), spec.c)),
      spec_(std::move(spec)) {
    spec_.validate();
    p_ = spec_.sbar_lambda();
    q_ = spec_.sbar_mu();
    r_ = spec_.sbar_nu();
    for (size_t i = 0; i < p_.size(); ++i) p_pos_[p_[i]] = i;
    for (size_t i = 0; i < q_.size(); ++i) q_pos_[q_[i]] = i;
    for (size_t i = 0; i < r_.size(); ++i) r_pos_[r_[i]] = i;
}

BaseKey QModule::monomial(const FiniteTuple& i, const FiniteTuple& j, const FiniteTuple& k) const {
    if (i.size() != p_.size() || j.size() != q_.size() || k.size() != r_.size())
        throw std::invalid_argument("QModule: tuple lengths do not match the complement sets");
    return BaseKey{{i, j, k}};
}

namespace {

Mono q_decode(const QModule& Q, const BaseKey& k) {
    Mono m;
    const auto& b = k.blocks;
    for (size_t i = 0; i < Q.p().size(); ++i)
        if (b[0][i]) m.push_back({Generator::L(Q.p()[i]), b[0][i]});
    for (size_t i = 0; i < Q.q().size(); ++i)
        if (b[1][i]) m.push_back({Generator::Y(Q.q()[i] - 1), b[1][i]});
    for (size_t i = 0; i < Q.r().size(); ++i)
        if (b[2][i]) m.push_back({Generator::M(Q.r()[i]), b[2][i]});
    return m;
}

BaseKey q_encode(const QModule& Q, const Mono& m) {
    FiniteTuple i(Q.p().size(), 0), j(Q.q().size(), 0), k(Q.r().size(), 0);
    auto pos = [](const std::vector<int>& v, int x) {
        auto it = std::lower_bound(v.begin(), v.end(), x);
        if (it == v.end() || *it != x) throw invariant_violation("QModule: factor outside the free sets");
        return static_cast<size_t>(it - v.begin());
    };
    for (const auto& [g, e] : m) {
        if (g.fam == Family::L)
            i[pos(Q.p(), g.index)] += e;
        else if (g.fam == Family::Y)
            j[pos(Q.q(), g.index + 1)] += e;
        else
            k[pos(Q.r(), g.index)] += e;
    }
    return BaseKey{{i, j, k}};
}

}  // namespace

BaseVector QModule::act_sub(const Generator& g, const BaseKey& k) const {
    QUniverse u{this};
    u.cls(g);  // reject generators outside the subalgebra up front
    LinComb<std::pair<Mono, detail::Unit>> out;
    detail::engine_act(u, g, q_decode(*this, k), detail::Unit{}, Scalar(1), out);
    BaseVector res;
    for (const auto& [tk, c] : out) res.add(q_encode(*this, tk.first), c);
    return res;
}

BaseKey q_deg(const BaseVector& v) {
    if (v.zero()) throw std::domain_error("q_deg: the zero element does not have a degree");
    return std::prev(v.terms().end())->first;
}

namespace {

size_t first_nonzero(const FiniteTuple& t) {
    for (size_t i = 0; i < t.size(); ++i)
        if (t[i]) return i;
    throw std::logic_error("first_nonzero: zero tuple");
}

// Strictly decreasing step potential: Case 1/2 may move one unit into the
// M block, Case 3 moves units to strictly higher M positions, so entries
// alone are not a bound once S_nu-bar is nonempty.
uint64_t q_potential(const BaseKey& d) {
    const uint64_t l = d.blocks[2].size();
    uint64_t phi = 0;
    for (uint32_t e : d.blocks[0]) phi += static_cast<uint64_t>(e) * (l + 1);
    for (uint32_t e : d.blocks[1]) phi += static_cast<uint64_t>(e) * (l + 1);
    for (size_t s = 0; s < d.blocks[2].size(); ++s)
        phi += static_cast<uint64_t>(d.blocks[2][s]) * (l - s);
    return phi;
}

}  // namespace

QReduceResult q_reduce(const BaseVector& v, const QModule& Q) {
    if (v.zero()) throw std::invalid_argument("q_reduce: zero vector");
    const QSpec& spec = Q.spec();

    QReduceResult res;
    res.terminal = v;
    const uint64_t max_steps = q_potential(q_deg(v)) + 1;
    uint64_t steps = 0;

    while (true) {
        BaseKey d = q_deg(res.terminal);
        if (d.is_cyclic()) return res;
        if (++steps > max_steps)
            throw invariant_violation("q_reduce: step bound exceeded at degree " + to_string(d));

        QTraceStep st;
        BaseKey pred = d;
        int e = 0;
        if (std::any_of(d.blocks[0].begin(), d.blocks[0].end(), [](uint32_t x) { return x != 0; })) {
            st.case_id = 1;
            size_t x = first_nonzero(d.blocks[0]);
            auto y = case1_witness(spec, Q.p()[x]);
            if (!y) throw invariant_violation("q_reduce: condition (V) has no witness for p=" + std::to_string(Q.p()[x]));
            st.applied = Generator::M(*y);
            st.subtracted = spec.nu_scalar(*y);
            e = *y + Q.p()[x];
            pred.blocks[0][x] -= 1;
        } else if (std::any_of(d.blocks[1].begin(), d.blocks[1].end(), [](uint32_t x) { return x != 0; })) {
            st.case_id = 2;
            size_t x = first_nonzero(d.blocks[1]);
            auto y = case2_witness(spec, Q.q()[x]);
            if (!y) throw invariant_violation("q_reduce: condition (VI) has no witness for q=" + std::to_string(Q.q()[x]));
            st.applied = Generator::Y(*y - 1);
            st.subtracted = spec.mu_scalar(*y);
            e = *y + Q.q()[x] - 1;
            pred.blocks[1][x] -= 1;
        } else {
            st.case_id = 3;
            size_t x = first_nonzero(d.blocks[2]);
            auto y = case3_witness(spec, Q.r()[x]);
            if (!y) throw invariant_violation("q_reduce: condition (VII) has no witness for r=" + std::to_string(Q.r()[x]));
            st.applied = Generator::L(*y);
            st.subtracted = spec.lambda_scalar(*y);
            e = *y + Q.r()[x];
            pred.blocks[2][x] -= 1;
        }
        auto rbar = Q.r();
        auto it = std::lower_bound(rbar.begin(), rbar.end(), e);
        if (it != rbar.end() && *it == e) pred.blocks[2][static_cast<size_t>(it - rbar.begin())] += 1;

        BaseVector next = Q.act_sub(st.applied, res.terminal);
        next -= st.subtracted * res.terminal;
        if (next.zero())
            throw invariant_violation("q_reduce: step produced zero at degree " + to_string(d));
        st.predicted = pred;
        st.actual = q_deg(next);
        if (!(st.actual == st.predicted))
            throw invariant_violation("q_reduce: degree prediction mismatch, predicted " + to_string(st.predicted) +
                                      " actual " + to_string(st.actual));
        res.terminal = std::move(next);
        res.trace.push_back(std::move(st));
    }
}

// ---------------------------------------------------------------- factories

std::shared_ptr<OneDimModule> make_onedim(Scalar xi_l0, Scalar nu0, Scalar c) {
    return std::make_shared<OneDimModule>(std::move(xi_l0), std::move(nu0), std::move(c));
}

std::shared_ptr<QModule> make_whittaker(Scalar l1, Scalar l2, Scalar m1, Scalar m2,
                                        Scalar nu0, Scalar nu1, Scalar c) {
    QSpec s;
    s.t = 1;
    s.d1 = 1;
    s.d2 = 1;
    s.S_lambda = {1, 2};
    s.S_mu = {1, 2};
    s.S_nu1 = {0, 1};
    s.lambda = {{1, std::move(l1)}, {2, std::move(l2)}};
    s.mu = {{1, std::move(m1)}, {2, std::move(m2)}};
    s.nu = {{0, std::move(nu0)}, {1, std::move(nu1)}};
    s.c = std::move(c);
    return std::make_shared<QModule>(std::move(s));
}

ProbeResult mt_injectivity_probe(const BaseModule& V, const std::vector<BaseVector>& sample) {
    const Generator mt = Generator::M(static_cast<int>(V.params().t));
    std::vector<BaseVector> images;
    for (const auto& v : sample) {
        BaseVector img = V.act_sub(mt, v);
        if (!v.zero() && img.zero())
            return {false, "M_t kills the nonzero sample vector starting at " + to_string(v.begin()->first)};
        images.push_back(std::move(img));
    }

    // coordinates over the union of keys
    auto coordinate = [](const std::vector<BaseVector>& vs) {
        std::map<BaseKey, size_t> cols;
        for (const auto& v : vs)
            for (const auto& [k, c] : v) cols.try_emplace(k, cols.size());
        RatMatrix m(vs.size(), std::vector<Scalar>(std::max<size_t>(cols.size(), 1), Scalar(0)));
        for (size_t i = 0; i < vs.size(); ++i)
            for (const auto& [k, c] : vs[i]) m[i][cols.at(k)] = c;
        return m;
    };
    size_t rank_sample = rank(coordinate(sample));
    size_t rank_images = rank(coordinate(images));
    if (rank_images < rank_sample)
        return {false, "rank dropped from " + std::to_string(rank_sample) + " to " + std::to_string(rank_images)};
    return {true, "rank " + std::to_string(rank_sample) + " preserved"};
}

}  // namespace svmod
