#include "ddchrom/rational.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ddchrom {

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0)
        throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    std::string str(s);
    mpq_class q;
    if (q.set_str(str, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + str + "'");
    if (sgn(mpq_class(q.get_den())) == 0)
        throw std::invalid_argument("Rational: zero denominator in '" + str + "'");
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Integer Rational::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

std::string Rational::to_string() const {
    std::ostringstream os;
    os << v_;
    return os.str();
}

std::string Rational::to_fraction_string() const {
    return num().get_str() + "/" + den().get_str();
}

std::string Rational::to_decimal_string(int digits) const {
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round(|num| * scale / den), half away from zero
    Integer n = ::abs(num()) * scale;
    Integer q = (2 * n + den()) / (2 * den());
    std::string ds = q.get_str();
    if (static_cast<int>(ds.size()) <= digits)
        ds.insert(0, digits + 1 - ds.size(), '0');
    std::string out;
    if (sign() < 0 && sgn(q) != 0) out += '-';
    out += ds.substr(0, ds.size() - digits);
    if (digits > 0) {
        out += '.';
        out += ds.substr(ds.size() - digits);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

}  // namespace ddchrom
