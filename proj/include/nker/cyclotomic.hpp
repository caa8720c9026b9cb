#pragma once

// Exact arithmetic with sums of roots of unity in Q(zeta_e), e <= 512.
// A value is a dense rational coefficient vector indexed by the exponent of
// zeta_e; the canonical form is the remainder modulo the e-th cyclotomic
// polynomial (degree < phi(e)), computed lazily.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace nker {

using Rational = mpq_class;

constexpr int kMaxConductor = 512;

// Integer coefficients of the e-th cyclotomic polynomial, low to high (cached).
const std::vector<mpz_class>& cyclotomic_polynomial(int e);

int euler_phi(int n);
// Multiplicative order of a modulo m (order modulo 1 is 1).
long multiplicative_order(long a, long m);

class Cyclotomic {
public:
    Cyclotomic() : e_(1), c_(1) {}
    explicit Cyclotomic(const Rational& q) : e_(1), c_{q} {}
    explicit Cyclotomic(long n) : e_(1), c_{Rational(n)} {}

    // zeta_e^k
    static Cyclotomic root_of_unity(int e, long k);
    static Cyclotomic zero(int e = 1) { return Cyclotomic(e, std::vector<Rational>(e)); }

    int conductor() const { return e_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic scalar_mul(const Rational& q) const;
    Cyclotomic conj() const;

    // zeta_e -> zeta_e^k for gcd(k, e) = 1; throws NotCoprime.
    Cyclotomic galois_apply(long k) const;

    bool is_zero() const;
    bool is_rational() const;
    Rational as_rational() const; // throws NotRational

    // Remainder mod Phi_e at the current conductor; unique representative
    // for fixed e.
    Cyclotomic reduced() const {
        Cyclotomic r = *this;
        r.reduce();
        return r;
    }

    // Canonical representative: reduced mod Phi_e, then recast at the
    // smallest conductor d | e containing the value.
    Cyclotomic canonical() const;

    bool operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Only meaningful on canonical values at equal conductors.
    bool identical(const Cyclotomic& o) const { return e_ == o.e_ && c_ == o.c_; }

    // If this value is a root of unity times a positive rational, the order
    // of that root; otherwise -1.
    long root_order() const;

    std::string str() const;

private:
    Cyclotomic(int e, std::vector<Rational> c) : e_(e), c_(std::move(c)) {}
    Cyclotomic lifted(int target) const; // e_ | target
    void reduce();                       // remainder mod Phi_e in place

    int e_;
    std::vector<Rational> c_;
};

} // namespace nker
