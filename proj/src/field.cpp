#include "multibetti/field.hpp"

#include "multibetti/errors.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

namespace multibetti {

Field Field::prime(unsigned long p) {
    if (p < 2 || !boost::multiprecision::miller_rabin_test(BigInt(p), 32))
        throw DomainError("field characteristic must be prime, got " + std::to_string(p));
    return Field(p);
}

std::string Field::name() const {
    return is_rational() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Rational Field::reduce(const Rational& v) const {
    if (is_rational()) return v;
    const BigInt p(p_);
    BigInt den = denominator(v) % p;
    if (den < 0) den += p;
    if (den == 0) throw DomainError("denominator divisible by the field characteristic");
    BigInt num = numerator(v) % p;
    if (num < 0) num += p;
    // den^-1 = den^(p-2) mod p
    const BigInt exp = p - 2;
    const BigInt den_inv = powm(den, exp, p);
    BigInt r = num * den_inv;
    r %= p;
    return Rational(r);
}

Rational Field::add(const Rational& a, const Rational& b) const { return reduce(a + b); }
Rational Field::sub(const Rational& a, const Rational& b) const { return reduce(a - b); }
Rational Field::mul(const Rational& a, const Rational& b) const { return reduce(a * b); }
Rational Field::neg(const Rational& a) const { return reduce(-a); }

Rational Field::inv(const Rational& a) const {
    const Rational r = reduce(a);
    if (r == 0) throw DomainError("division by zero");
    if (is_rational()) return 1 / r;
    return reduce(Rational(1, numerator(r)));
}

Rational Field::div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

Rational Field::from_int(long long n) const { return reduce(Rational(n)); }

Rational Field::parse(const std::string& text) const {
    // assembled from integer parts: the backend's direct string constructor
    // skips mpq canonicalization, which exact arithmetic relies on
    try {
        const std::size_t slash = text.find('/');
        if (slash == std::string::npos) return reduce(Rational(BigInt(text)));
        const BigInt num(text.substr(0, slash));
        const BigInt den(text.substr(slash + 1));
        if (den == 0) throw DomainError("zero denominator");
        return reduce(Rational(num, den));
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception&) {
        throw DomainError("cannot parse scalar '" + text + "'");
    }
}

} // namespace multibetti
