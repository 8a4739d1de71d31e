#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binderlab/cyclo.hpp"
#include "binderlab/symplectic.hpp"
#include "test_helpers.hpp"

#include <set>

using namespace binderlab;
using namespace binderlab::testing;

namespace {

// The 15 Lagrangian subspaces of F_2^4, frozen reference data.
const char* const kLagrangiansJ2[15][4] = {
    {"0000", "0010", "1000", "1010"}, {"0000", "0011", "1100", "1111"},
    {"0000", "0111", "1001", "1110"}, {"0000", "0110", "1011", "1101"},
    {"0000", "0001", "0100", "0101"}, {"0000", "0001", "1000", "1001"},
    {"0000", "0001", "1100", "1101"}, {"0000", "0010", "0100", "0110"},
    {"0000", "0010", "1100", "1110"}, {"0000", "0011", "0100", "0111"},
    {"0000", "0011", "1000", "1011"}, {"0000", "0101", "1010", "1111"},
    {"0000", "0101", "1011", "1110"}, {"0000", "0110", "1001", "1111"},
    {"0000", "0111", "1010", "1101"}};

std::vector<std::vector<GfVector>> lagrangians_j2_sets() {
    std::vector<std::vector<GfVector>> out;
    for (const auto& row : kLagrangiansJ2) {
        std::vector<GfVector> set;
        for (const char* s : row) set.push_back(GfVector::parse(2, s));
        std::sort(set.begin(), set.end());
        out.push_back(set);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("bform examples") {
    SymplecticSpace sp1(2, 1);
    CHECK(sp1.bform(v2("01"), v2("10")) == 1);
    SymplecticSpace sp2(2, 2);
    CHECK(sp2.bform(v2("0101"), v2("0110")) == 1);  // Gamma_2 entry '-'
    // Alternating: B(x, x) = 0.
    std::mt19937 rng(5);
    for (int p : {2, 3}) {
        SymplecticSpace sp(p, 2);
        for (int t = 0; t < 50; ++t) {
            GfVector x = random_vector(rng, p, 4), y = random_vector(rng, p, 4);
            CHECK(sp.bform(x, x) == 0);
            CHECK((sp.bform(x, y) + sp.bform(y, x)) % p == 0);
        }
    }
    CHECK_THROWS_AS(sp2.bform(v2("01"), v2("0101")), DimensionMismatch);
}

TEST_CASE("is_symplectic_map examples") {
    SymplecticSpace sp2(2, 1);
    CHECK(is_symplectic_map(sp2, GfMatrix::identity(2, 2)));
    // Swap of e1, e2 preserves B over F_2 (since -1 = 1) but not over F_3.
    GfMatrix swap2(2, 2, 2);
    swap2.set(0, 1, 1);
    swap2.set(1, 0, 1);
    CHECK(is_symplectic_map(sp2, swap2));
    SymplecticSpace sp3(3, 1);
    GfMatrix swap3(3, 2, 2);
    swap3.set(0, 1, 1);
    swap3.set(1, 0, 1);
    CHECK_FALSE(is_symplectic_map(sp3, swap3));
    CHECK_THROWS_AS(is_symplectic_map(sp2, GfMatrix(2, 2, 3)), DimensionMismatch);
}

TEST_CASE("build_symplectic_basis") {
    for (int p : {2, 3}) {
        for (int J = 1; J <= 3; ++J) {
            SymplecticSpace sp(p, J);
            GfMatrix canon = sp.form_matrix();
            GfMatrix t = build_symplectic_basis(canon);
            CHECK(t.transposed() * canon * t == canon);
            // The canonical form admits the identity transition.
            CHECK(t == GfMatrix::identity(p, 2 * J));
        }
    }
    // -B_1 over F_2 equals B_1; a valid transition exists.
    SymplecticSpace sp(2, 1);
    GfMatrix neg = sp.form_matrix().negated();
    GfMatrix t = build_symplectic_basis(neg);
    CHECK(t.transposed() * neg * t == sp.form_matrix());
    // Degenerate and non-alternating inputs are rejected.
    CHECK_THROWS_AS(build_symplectic_basis(GfMatrix(2, 4, 4)), InvalidInput);
    GfMatrix sym(2, 2, 2);
    sym.set(0, 0, 1);
    sym.set(1, 1, 1);
    CHECK_THROWS_AS(build_symplectic_basis(sym), InvalidInput);
}

TEST_CASE("enumerate_lagrangians counts and structure") {
    CHECK(enumerate_lagrangians(SymplecticSpace(2, 1)).size() == 3);
    CHECK(enumerate_lagrangians(SymplecticSpace(2, 2)).size() == 15);
    CHECK(enumerate_lagrangians(SymplecticSpace(2, 3)).size() == 135);
    // Brute-force oracle at (3,1): every line of F_3^2 is Lagrangian.
    SymplecticSpace sp31(3, 1);
    std::set<std::string> lines;
    for (const auto& v : sp31.domain()) {
        if (v.is_zero()) continue;
        lines.insert(canonical_subspace({v}).key());
    }
    CHECK(lines.size() == 4);
    CHECK(enumerate_lagrangians(sp31).size() == 4);
    // (3,2): the count formula gives (3+1)(9+1) = 40.
    CHECK(enumerate_lagrangians(SymplecticSpace(3, 2)).size() == 40);

    // (2,2) equals the reference sets verbatim; all members self-dual.
    auto lags = enumerate_lagrangians(SymplecticSpace(2, 2));
    CHECK(as_sets(lags) == lagrangians_j2_sets());
    GfMatrix f = SymplecticSpace(2, 2).form_matrix();
    for (const auto& lag : lags) CHECK(orthogonal_complement(lag, f) == lag);
}

TEST_CASE("every enumerated Lagrangian is self-perpendicular, J <= 4") {
    for (int J = 1; J <= 4; ++J) {
        SymplecticSpace sp(2, J);
        GfMatrix f = sp.form_matrix();
        auto lags = enumerate_lagrangians(sp);
        long long expect = 1, pj = 1;
        for (int j = 1; j <= J; ++j) {
            pj *= 2;
            expect *= pj + 1;
        }
        CHECK((long long)lags.size() == expect);
        for (const auto& lag : lags) {
            CHECK(lag.rank() == J);
            CHECK(orthogonal_complement(lag, f) == lag);
        }
    }
}

TEST_CASE("ordered Lagrangian basis double count at (2,2)") {
    // 90 ordered bases (v1, v2), 6 invertible 2x2 matrices over F_2, 90/6 = 15.
    SymplecticSpace sp(2, 2);
    long long ordered = 0;
    for (const auto& a : sp.domain()) {
        if (a.is_zero()) continue;
        for (const auto& b : sp.domain()) {
            if (b.is_zero() || b == a) continue;
            if (sp.bform(a, b) == 0 && !canonical_subspace({a}).contains(b)) ++ordered;
        }
    }
    CHECK(ordered == 90);
    long long gl22 = 0;
    for (int code = 0; code < 16; ++code) {
        GfMatrix m(2, 2, 2);
        m.set(0, 0, code & 1);
        m.set(0, 1, (code >> 1) & 1);
        m.set(1, 0, (code >> 2) & 1);
        m.set(1, 1, (code >> 3) & 1);
        if (m.invertible()) ++gl22;
    }
    CHECK(gl22 == 6);
    CHECK(ordered / gl22 == 15);
}

TEST_CASE("enumerate_affine_lagrangians counts") {
    CHECK(enumerate_affine_lagrangians(SymplecticSpace(2, 1)).size() == 6);
    CHECK(enumerate_affine_lagrangians(SymplecticSpace(2, 2)).size() == 60);
    CHECK(enumerate_affine_lagrangians(SymplecticSpace(2, 3)).size() == 1080);
    // Canonical and deduped.
    auto cosets = enumerate_affine_lagrangians(SymplecticSpace(2, 2));
    std::set<std::string> keys;
    for (const auto& c : cosets) {
        CHECK(coset_canonicalize(c.rep, c.space) == c);
        keys.insert(c.space.key() + "/" + c.rep.render());
    }
    CHECK(keys.size() == cosets.size());
}

TEST_CASE("lagrangian_spread") {
    // (2,1): all three lines of F_2^2.
    auto spread1 = lagrangian_spread(SymplecticSpace(2, 1));
    CHECK(spread1.members.size() == 3);

    // (2,2): the five subspaces match the first row of the reference listing
    // (the F_4 line structure realized in these coordinates).
    auto spread2 = lagrangian_spread(SymplecticSpace(2, 2));
    REQUIRE(spread2.members.size() == 5);
    std::vector<std::vector<GfVector>> want;
    for (int i : {0, 1, 2, 3, 4}) {
        std::vector<GfVector> set;
        for (const char* s : kLagrangiansJ2[i]) set.push_back(GfVector::parse(2, s));
        std::sort(set.begin(), set.end());
        want.push_back(set);
    }
    std::sort(want.begin(), want.end());
    CHECK(as_sets(spread2.members) == want);

    // (2,3): partition of the 63 nonzero vectors; cosets form a Lambda = 1 design.
    auto spread3 = lagrangian_spread(SymplecticSpace(2, 3));
    CHECK(spread3.members.size() == 9);
    std::set<std::string> covered;
    for (const auto& m : spread3.members)
        for (const auto& v : m.elements())
            if (!v.is_zero()) CHECK(covered.insert(v.render()).second);
    CHECK(covered.size() == 63);
    // Lambda = 1: every pair of distinct points lies in exactly one coset.
    std::map<std::pair<std::string, std::string>, int> pair_count;
    for (const auto& m : spread3.members) {
        for (uint64_t r = 0; r < 64; ++r) {
            AffineSubspace coset =
                coset_canonicalize(GfVector::from_lex_rank(2, 6, r), m);
            if (!(coset.rep == GfVector::from_lex_rank(2, 6, r))) continue;
            auto elems = coset.elements();
            for (size_t i = 0; i < elems.size(); ++i)
                for (size_t j = i + 1; j < elems.size(); ++j)
                    ++pair_count[{elems[i].render(), elems[j].render()}];
        }
    }
    CHECK(pair_count.size() == 64 * 63 / 2);
    for (const auto& [key, cnt] : pair_count) CHECK(cnt == 1);

    // (3,1) generic: four lines of F_3^2.
    CHECK(lagrangian_spread(SymplecticSpace(3, 1)).members.size() == 4);
    CHECK_THROWS_AS(lagrangian_spread(SymplecticSpace(5, 2)), LimitExceeded);
}

TEST_CASE("sp_order formula vs brute force") {
    CHECK(sp_order(SymplecticSpace(2, 1)) == 6);
    CHECK(sp_order(SymplecticSpace(2, 2)) == 720);
    CHECK(sp_order(SymplecticSpace(3, 1)) == 24);
    CHECK(sp_count_bruteforce(SymplecticSpace(2, 1)) == 6);
    CHECK(sp_count_bruteforce(SymplecticSpace(2, 2)) == 720);
    CHECK(sp_count_bruteforce(SymplecticSpace(3, 1)) == 24);
    CHECK_THROWS_AS(sp_count_bruteforce(SymplecticSpace(2, 3)), LimitExceeded);
}

TEST_CASE("the 16x16 character table sign pattern matches the reference matrix") {
    // Rows/columns indexed 0000..1111 in lex order; '+' is exponent 0.
    const char* const rows[16] = {
        "++++++++++++++++",
        "++--++--++--++--",
        "+-+-+-+-+-+-+-+-",
        "+--++--++--++--+",
        "++++++++--------",
        "++--++----++--++",
        "+-+-+-+--+-+-+-+",
        "+--++--+-++--++-",
        "++++----++++----",
        "++----++++----++",
        "+-+--+-++-+--+-+",
        "+--+-++-+--+-++-",
        "++++--------++++",
        "++----++--++++--",
        "+-+--+-+-+-++-+-",
        "+--+-++--++-+--+"};
    CharacterTable gamma(SymplecticSpace(2, 2));
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j)
            CHECK(gamma.exponent(uint64_t(i), uint64_t(j)) == (rows[i][j] == '+' ? 0 : 1));
}

TEST_CASE("character table: Gamma^2 = p^{2J} I in cyclotomic arithmetic") {
    for (auto [p, J] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}}) {
        SymplecticSpace sp(p, J);
        CharacterTable gamma(sp);
        const long long n = (long long)sp.domain_size();
        // Gamma* = Gamma: exponent(j,i) = -exponent(i,j) mod p.
        for (long long i = 0; i < n; ++i)
            for (long long j = 0; j < n; ++j)
                CHECK((gamma.exponent(uint64_t(i), uint64_t(j)) +
                       gamma.exponent(uint64_t(j), uint64_t(i))) % p == 0);
        for (long long i = 0; i < n; ++i) {
            CHECK(gamma.exponent(uint64_t(i), uint64_t(i)) == 0);
            for (long long j = 0; j < n; ++j) {
                CycloInt acc(p);
                for (long long k = 0; k < n; ++k)
                    acc = acc + CycloInt::root_power(p, gamma.exponent(uint64_t(i), uint64_t(k)) +
                                                            gamma.exponent(uint64_t(k), uint64_t(j)));
                CycloInt want(p, i == j ? n : 0);
                CHECK(acc == want);
            }
        }
    }
}
