#ifndef FRACX_RATIONAL_HPP
#define FRACX_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace fracx {

/// Exact arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.  Backed by GMP; every operation is exact.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long long value) : q_(static_cast<long>(value)) {} // NOLINT: implicit by design
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& q);

    /// Parses "p/q" or a bare integer "p".  Throws InputError on junk or a
    /// zero denominator.
    static Rational parse(const std::string& text);

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Renders "p/q" in lowest terms, or just "p" when the denominator is 1.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_; // invariant: canonical (lowest terms, positive denominator)
};

/// Least common multiple of the denominators, as an integer rational.
Rational common_denominator(const std::vector<Rational>& values);

/// Smallest integer >= r.
mpz_class ceil_of(const Rational& r);

} // namespace fracx

#endif
