#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binderlab/cyclo.hpp"

#include <random>

using namespace binderlab;

namespace {

CycloInt random_cyclo(std::mt19937& rng, int p) {
    CycloInt z(p);
    CycloInt out(p);
    for (int k = 0; k < p - 1; ++k) {
        int coef = int(rng() % 7u) - 3;
        out = out + CycloInt::root_power(p, k).scaled(coef);
    }
    return out;
}

}  // namespace

TEST_CASE("root powers satisfy the cyclotomic relations") {
    for (int p : {2, 3, 5, 7}) {
        // zeta^p = 1 and 1 + zeta + ... + zeta^{p-1} = 0.
        CHECK(CycloInt::root_power(p, p) == CycloInt(p, 1));
        CycloInt sum(p);
        for (int k = 0; k < p; ++k) sum = sum + CycloInt::root_power(p, k);
        CHECK(sum.is_zero());
        // zeta^k * zeta^{p-k} = 1.
        for (int k = 0; k < p; ++k)
            CHECK(CycloInt::root_power(p, k) * CycloInt::root_power(p, p - k) == CycloInt(p, 1));
    }
}

TEST_CASE("ring laws and conjugation, randomized") {
    std::mt19937 rng(101);
    for (int p : {2, 3, 5}) {
        for (int t = 0; t < 200; ++t) {
            CycloInt a = random_cyclo(rng, p), b = random_cyclo(rng, p), c = random_cyclo(rng, p);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK(a.conj().conj() == a);
        }
    }
}

TEST_CASE("signed roots") {
    // p = 2 folds the exponent into the sign.
    CHECK(SignedRoot::make(2, 1, 1) == SignedRoot::make(2, -1, 0));
    CHECK(SignedRoot::make(2, -1, 1) == SignedRoot::make(2, 1, 0));
    // Multiplication matches the cyclotomic product.
    std::mt19937 rng(7);
    for (int p : {2, 3, 5}) {
        for (int t = 0; t < 100; ++t) {
            SignedRoot a = SignedRoot::make(p, rng() % 2 ? 1 : -1, int(rng() % uint32_t(p)));
            SignedRoot b = SignedRoot::make(p, rng() % 2 ? 1 : -1, int(rng() % uint32_t(p)));
            CHECK(a.times(p, b).to_cyclo(p) == a.to_cyclo(p) * b.to_cyclo(p));
            CHECK(a.conj(p).to_cyclo(p) == a.to_cyclo(p).conj());
        }
    }
    CHECK(SignedRoot::make(3, -1, 0).is_minus_one());
    CHECK_FALSE(SignedRoot::make(3, -1, 1).is_minus_one());
}

TEST_CASE("division-free determinant agrees with fraction-free elimination") {
    std::mt19937 rng(55);
    for (int n = 1; n <= 6; ++n) {
        for (int t = 0; t < 100; ++t) {
            std::vector<std::vector<Int128>> a(size_t(n), std::vector<Int128>(size_t(n), 0));
            std::vector<std::vector<CycloInt>> c(size_t(n),
                                                 std::vector<CycloInt>(size_t(n), CycloInt(2)));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    long long v = (long long)(rng() % 11u) - 5;
                    a[size_t(i)][size_t(j)] = v;
                    c[size_t(i)][size_t(j)] = CycloInt(2, v);
                }
            Int128 d1 = integer_determinant(a);
            CycloInt d2 = cyclo_determinant(c);
            REQUIRE(d2.is_integer());
            CHECK(d1 == d2.integer_part());
        }
    }
}

TEST_CASE("a hand-checked singular cyclotomic determinant") {
    // det [[1, z], [z^2, 1]] over Z[zeta_3] is 1 - z^3 = 0.
    std::vector<std::vector<CycloInt>> m{
        {CycloInt(3, 1), CycloInt::root_power(3, 1)},
        {CycloInt::root_power(3, 2), CycloInt(3, 1)}};
    CHECK(cyclo_determinant(m).is_zero());
    // det [[2, z], [z^2, 2]] = 4 - 1 = 3.
    std::vector<std::vector<CycloInt>> m2{
        {CycloInt(3, 2), CycloInt::root_power(3, 1)},
        {CycloInt::root_power(3, 2), CycloInt(3, 2)}};
    CHECK(cyclo_determinant(m2) == CycloInt(3, 3));
}

TEST_CASE("binomials and rationals") {
    CHECK(binom128(16, 6) == 8008);
    CHECK(binom128(16, 4) == 1820);
    CHECK(binom128(10, 4) == 210);
    // C(256, 16) and C(256, 17), frozen from an independent bignum computation.
    CHECK(int128_to_string(binom128(256, 16)) == "10078751602022313874633200");
    CHECK(int128_to_string(binom128(256, 17)) == "142288257910903254700704000");
    CHECK(Rat(60, 1820) == Rat(3, 91));
    CHECK(Rat(16, 8008) == Rat(2, 1001));
    CHECK((Rat(1, 2) + Rat(1, 3)) == Rat(5, 6));
    CHECK((Rat(3, 4) * Rat(2, 3)) == Rat(1, 2));
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK(Rat(3, -6).to_string() == "-1/2");
    CHECK_THROWS_AS(Rat(1, 0), InvalidInput);
}
