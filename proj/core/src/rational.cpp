#include "fracx/rational.hpp"

#include <cctype>
#include <ostream>

#include "fracx/errors.hpp"

namespace fracx {

Rational::Rational(long long num, long long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw InputError("empty rational literal");

    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!is_int(num) || !is_int(den))
        throw InputError("malformed rational literal: " + text);

    mpq_class q(mpz_class(num), mpz_class(den));
    if (q.get_den() == 0) throw InputError("rational with zero denominator: " + text);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational common_denominator(const std::vector<Rational>& values) {
    mpz_class l = 1;
    for (const Rational& v : values) {
        mpz_class d = v.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return Rational(mpq_class(l));
}

mpz_class ceil_of(const Rational& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
    return q;
}

} // namespace fracx
