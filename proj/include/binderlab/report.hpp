#pragma once

// Table reports, golden-data checks, and the block-selection probability,
// composed from the other modules.

#include "binderlab/binder.hpp"
#include "binderlab/gram.hpp"

#include <string>
#include <vector>

namespace binderlab {

struct ReportRow {
    FamilyTag tag;
    long long d = 0;       // dimension of the ETF's span
    long long v = 0;       // number of vectors
    long long k = 0;       // simplex cardinality S + 1
    long long lambda = 0;  // 0, 0, 0 encode an empty binder
    long long r = 0;
    long long b = 0;
    bool operator==(const ReportRow& o) const {
        return tag == o.tag && d == o.d && v == o.v && k == o.k && lambda == o.lambda &&
               r == o.r && b == o.b;
    }
};

// One row per family (Phi, Psi, PhiDc, PhiDcHat, PsiD, PsiDHat) at this J,
// with every binder recomputed and BIBD-verified.
std::vector<ReportRow> report_tables(int J, int threads = 1);

struct GoldenCheck {
    bool pass = false;
    std::string fixture;
    long long expected_count = 0;
    long long got_count = 0;
    std::vector<std::string> mismatches;  // rendered sets missing or extra
};

// fixture in {"lagrangians-j2", "tremain-j3-lambda", "tremain-j4-lambda"}.
GoldenCheck golden_check(const std::string& fixture);
std::vector<std::string> golden_fixture_names();

// Exact B / C(N, S+1); zero when the binder is empty.
Rat block_probability(FamilyTag tag, int J);

namespace golden {
// Reference data sets, embedded verbatim.
extern const char* const kLagrangiansJ2[15][4];
extern const char* const kTremainJ3Extensions[8][4];
extern const char* const kTremainJ4Blocks[64][10];
}  // namespace golden

}  // namespace binderlab
