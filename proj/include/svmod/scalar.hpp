#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace svmod {

/// Exact rational number in canonical reduced form: gcd(|p|,q)=1, q>0, zero is 0/1.
/// All arithmetic is exact; there is no floating-point mode.
class Scalar {
public:
    Scalar() : q_(0) {}
    Scalar(long n) : q_(n) {}  // NOLINT: implicit on purpose, integers embed
    Scalar(int n) : q_(n) {}   // NOLINT
    Scalar(long num, long den) {
        if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    /// Parses "p" or "p/q"; rejects q=0.
    explicit Scalar(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("Scalar: empty string");
        try {
            q_ = mpq_class(s);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Scalar: cannot parse '" + s + "'");
        }
        if (mpz_sgn(q_.get_den().get_mpz_t()) == 0)
            throw std::invalid_argument("Scalar: zero denominator in '" + s + "'");
        q_.canonicalize();
    }

    bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return mpq_sgn(q_.get_mpq_t()); }

    Scalar operator-() const { return Scalar(mpq_class(-q_)); }
    Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
    Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
    Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.q_ != b.q_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.q_ < b.q_; }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
        return Scalar(mpq_class(1 / q_));
    }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const { return q_.get_str(); }

    const mpq_class& raw() const { return q_; }

private:
    explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace svmod

#include <ostream>

namespace svmod {
inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }
}  // namespace svmod
