#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binderlab/json_io.hpp"
#include "binderlab/report.hpp"
#include "test_helpers.hpp"

using namespace binderlab;
using namespace binderlab::testing;

TEST_CASE("report rows at J = 2 match the classification table") {
    auto rows = report_tables(2);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == ReportRow{FamilyTag::Phi, 10, 16, 6, 2, 6, 16});
    CHECK(rows[1] == ReportRow{FamilyTag::Psi, 6, 16, 4, 3, 15, 60});
    CHECK(rows[2] == ReportRow{FamilyTag::PhiDc, 5, 6, 6, 1, 1, 1});
    CHECK(rows[3] == ReportRow{FamilyTag::PhiDcHat, 1, 6, 2, 1, 5, 15});
    CHECK(rows[4] == ReportRow{FamilyTag::PsiD, 5, 10, 4, 2, 6, 15});
    CHECK(rows[5] == ReportRow{FamilyTag::PsiDHat, 5, 10, 4, 2, 6, 15});
    CHECK_THROWS_AS(report_tables(5), InvalidInput);
}

TEST_CASE("golden fixtures") {
    GoldenCheck g1 = golden_check("lagrangians-j2");
    CHECK(g1.pass);
    CHECK(g1.expected_count == 15);
    CHECK(g1.got_count == 15);
    GoldenCheck g2 = golden_check("tremain-j3-lambda");
    CHECK(g2.pass);
    CHECK(g2.expected_count == 8);
    CHECK_THROWS_AS(golden_check("no-such-fixture"), InvalidInput);
}

TEST_CASE("block selection probability") {
    CHECK(block_probability(FamilyTag::Psi, 2) == Rat(3, 91));   // 60/1820
    CHECK(block_probability(FamilyTag::Phi, 2) == Rat(2, 1001)); // 16/8008
    CHECK(block_probability(FamilyTag::Phi, 3) == Rat(0, 1));    // empty binder
}

TEST_CASE("gram JSON round-trip") {
    ExactGram g = gram_build(FrameFamily::make(FamilyTag::PsiD, 2, 2));
    json j = gram_to_json(g);
    ExactGram back = gram_from_json(j);
    CHECK(back.n == g.n);
    CHECK(back.diag == g.diag);
    CHECK(back.labels == g.labels);
    for (int i = 0; i < g.n; ++i)
        for (int k = 0; k < g.n; ++k)
            if (i != k) CHECK(back.entry(i, k) == g.entry(i, k));
    CHECK(back.analysis->tight);
    // Determinism: identical inputs produce byte-identical JSON.
    CHECK(gram_to_json(gram_build(FrameFamily::make(FamilyTag::PsiD, 2, 2))).dump() == j.dump());
}

TEST_CASE("quadratic form JSON round-trip") {
    QuadraticForm q(3, -1, GfVector::parse(2, "010110"));
    json j = quadratic_form_to_json(q);
    CHECK(j.at("base") == "-");
    QuadraticForm back = quadratic_form_from_json(j);
    CHECK(back.same_form(q));
    json quad = quadric_to_json(quadric(QuadraticForm::canonical(2, -1)));
    CHECK(quad.dump() == R"(["0000","0100","1000","1101","1110","1111"])");
}

TEST_CASE("incidence JSON round-trip") {
    BinderResult r = binder_dual_symplectic(2, 1);
    IncidenceStructure inc = r.incidence();
    json j = incidence_to_json(inc);
    IncidenceStructure back = incidence_from_json(j);
    CHECK(back.v == inc.v);
    CHECK(back.labels == inc.labels);
    CHECK(back.blocks == inc.blocks);
    // Bare array-of-blocks form as well.
    IncidenceStructure bare = incidence_from_json(j.at("blocks"));
    CHECK(bare.blocks.size() == inc.blocks.size());
}
