#pragma once

// Exact arithmetic in the cyclotomic integer ring Z[zeta_p], p prime, with
// elements held in the basis 1, zeta, ..., zeta^{p-2}. For p = 2 this is the
// ordinary integers. Coefficients are 128-bit so that division-free
// determinant computations cannot overflow at the sizes used here.

#include <cstdint>
#include <string>
#include <vector>

#include "binderlab/gf.hpp"

namespace binderlab {

using Int128 = __int128;

std::string int128_to_string(Int128 v);

class CycloInt {
public:
    CycloInt() : p_(2), c_(1, 0) {}
    explicit CycloInt(int p) : p_(p), c_(size_t(p - 1), 0) {}
    CycloInt(int p, long long integer) : p_(p), c_(size_t(p - 1), 0) { c_[0] = integer; }

    static CycloInt root_power(int p, int k);         // zeta_p^k
    static CycloInt signed_root(int p, int eps, int k);  // eps * zeta_p^k

    int p() const { return p_; }
    bool is_zero() const;
    bool is_integer() const;
    Int128 integer_part() const { return c_[0]; }     // valid when is_integer()
    const std::vector<Int128>& coeffs() const { return c_; }

    CycloInt operator+(const CycloInt& o) const;
    CycloInt operator-(const CycloInt& o) const;
    CycloInt operator*(const CycloInt& o) const;
    CycloInt operator-() const;
    CycloInt conj() const;                            // zeta -> zeta^{-1}
    CycloInt scaled(Int128 k) const;

    bool operator==(const CycloInt& o) const;
    bool operator!=(const CycloInt& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void check(const CycloInt& o) const;
    int p_;
    std::vector<Int128> c_;
};

// Exact rational with 128-bit terms, kept reduced with positive denominator.
struct Rat {
    Int128 num = 0;
    Int128 den = 1;

    Rat() = default;
    Rat(Int128 n, Int128 d);
    static Rat integer(long long n) { return Rat(n, 1); }

    bool is_integer() const { return den == 1; }
    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    std::string to_string() const;
};

Int128 binom128(int n, int k);

// eps * zeta_p^k with eps in {-1, 0, +1}; eps = 0 encodes the zero entry.
// For p = 2 the exponent is folded into the sign, so k is always 0.
struct SignedRoot {
    int8_t eps = 0;
    int16_t k = 0;

    static SignedRoot zero() { return SignedRoot{0, 0}; }
    static SignedRoot make(int p, int eps, int k);
    bool is_zero() const { return eps == 0; }
    bool is_minus_one() const { return eps == -1 && k == 0; }
    SignedRoot negated() const { return SignedRoot{int8_t(-eps), k}; }
    SignedRoot conj(int p) const;
    SignedRoot times(int p, const SignedRoot& o) const;
    CycloInt to_cyclo(int p) const;
    bool operator==(const SignedRoot& o) const { return eps == o.eps && k == o.k; }
};

// Determinant by Bird's division-free algorithm; works over any commutative
// ring, here Z[zeta_p].
CycloInt cyclo_determinant(const std::vector<std::vector<CycloInt>>& m);

// Fraction-free (Bareiss) determinant for integer matrices.
Int128 integer_determinant(std::vector<std::vector<Int128>> m);

}  // namespace binderlab
