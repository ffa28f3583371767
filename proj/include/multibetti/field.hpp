#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace multibetti {

// All scalars are stored as GMP rationals in canonical form (lowest terms,
// positive denominator). For GF(p) the canonical representative is the
// residue 0..p-1 with denominator 1; arithmetic is routed through the Field
// so one dense-matrix code path serves both scalar domains.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(unsigned long p); // throws DomainError unless p is prime

    bool is_rational() const { return p_ == 0; }
    unsigned long characteristic() const { return p_; }
    std::string name() const;

    // Canonical representative of v in this field (identity over Q,
    // num * den^-1 mod p over GF(p)).
    Rational reduce(const Rational& v) const;

    Rational add(const Rational& a, const Rational& b) const;
    Rational sub(const Rational& a, const Rational& b) const;
    Rational mul(const Rational& a, const Rational& b) const;
    Rational neg(const Rational& a) const;
    Rational inv(const Rational& a) const; // throws DomainError on zero
    Rational div(const Rational& a, const Rational& b) const;

    Rational from_int(long long n) const;
    // Accepts "-3", "5/7", arbitrary-precision digits.
    Rational parse(const std::string& text) const;

    bool operator==(const Field& other) const { return p_ == other.p_; }

private:
    explicit Field(unsigned long p) : p_(p) {}
    unsigned long p_ = 0; // 0 = rationals
};

} // namespace multibetti
