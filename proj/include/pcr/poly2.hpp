#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pcr {

// Polynomial over F2, bit i = coefficient of x^i. The zero polynomial has
// an empty coefficient vector; nonzero polynomials keep their leading word
// nonzero.
class Poly2 {
public:
    Poly2() = default;
    static Poly2 zero() { return Poly2{}; }
    static Poly2 one() { return from_coeff_bits({0}); }
    static Poly2 x() { return from_coeff_bits({1}); }
    static Poly2 monomial(int e);
    static Poly2 from_coeff_bits(const std::vector<int>& exponents);
    // "1+x^3+x^4" (also accepts "x", "x^2", "0", "1")
    static Poly2 parse(const std::string& text);
    // hex string, least significant coefficient in the lowest bit
    static Poly2 from_hex(const std::string& hex);

    bool is_zero() const { return words_.empty(); }
    int degree() const;  // -1 for zero
    int weight() const;
    bool coeff(int e) const;
    std::vector<int> support() const;

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    // quotient/remainder by a nonzero divisor
    std::pair<Poly2, Poly2> divmod(const Poly2& d) const;
    Poly2 operator%(const Poly2& d) const { return divmod(d).second; }
    Poly2 operator/(const Poly2& d) const { return divmod(d).first; }
    bool divides(const Poly2& f) const;

    Poly2 square() const;
    // this^(2^e) mod m
    Poly2 frobenius_pow(int e, const Poly2& m) const;
    Poly2 powmod(unsigned long long e, const Poly2& m) const;

    auto operator<=>(const Poly2& o) const = default;

    std::string to_exponent_string() const;  // "1+x^3+x^4"
    std::string to_hex() const;

private:
    std::vector<std::uint64_t> words_;
    void trim();
    void flip(int e);
};

Poly2 poly_gcd(Poly2 a, Poly2 b);

// x^n - 1
Poly2 xn_minus_1(int n);

struct Factorization {
    int modulus_n = 0;
    std::vector<std::pair<Poly2, int>> factors;  // (irreducible, multiplicity)
};

// Factors x^n - 1 over F2: write n = m * 2^a with m odd, factor the
// squarefree x^m - 1 by distinct-degree then Cantor-Zassenhaus equal-degree
// splitting, and give every factor multiplicity 2^a. Output sorted by
// (degree, coefficients) so repeated calls are bit-identical despite the
// randomized splitting. seed controls the internal generator.
Factorization factor_xn_minus_1(int n, std::uint64_t seed = 1);

// All products of factor powers, sorted by (degree, coefficients).
std::vector<Poly2> divisors(const Factorization& f);

}  // namespace pcr
