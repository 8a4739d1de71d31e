#include "binderlab/report.hpp"

#include "binderlab/symplectic.hpp"

#include <algorithm>
#include <set>

namespace binderlab {

std::vector<ReportRow> report_tables(int J, int threads) {
    if (J < 2 || J > 4) throw InvalidInput("report_tables: J in {2,3,4}");
    std::vector<ReportRow> rows;
    auto d = default_affine_quadric(J);
    for (FamilyTag tag : {FamilyTag::Phi, FamilyTag::Psi, FamilyTag::PhiDc, FamilyTag::PhiDcHat,
                          FamilyTag::PsiD, FamilyTag::PsiDHat}) {
        FrameFamily fam = (tag == FamilyTag::Phi || tag == FamilyTag::Psi)
                              ? FrameFamily::make(tag, 2, J)
                              : FrameFamily::make(tag, 2, J, d);
        ExactGram g = gram_build(fam);
        ReportRow row;
        row.tag = tag;
        row.d = g.analysis->rank;
        row.v = g.n;
        row.k = g.diag + 1;
        BinderResult res = binder_family(tag, J, d, threads);
        if (!res.blocks.empty()) {
            BibdCheck chk = verify_bibd(res.incidence());
            if (!chk.ok) throw InvalidInput("report_tables: binder is not a BIBD");
            if (chk.params.k != row.k) throw InvalidInput("report_tables: block size mismatch");
            row.lambda = chk.params.lambda;
            row.r = chk.params.r;
            row.b = chk.params.b;
        }
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::string render_set(const std::vector<GfVector>& set) {
    std::string s = "{";
    for (size_t i = 0; i < set.size(); ++i) {
        if (i) s += ",";
        s += set[i].render();
    }
    s += "}";
    return s;
}

GoldenCheck diff_sets(const std::string& fixture, std::vector<std::vector<GfVector>> got,
                      std::vector<std::vector<GfVector>> expected) {
    GoldenCheck out;
    out.fixture = fixture;
    for (auto& s : got) std::sort(s.begin(), s.end());
    for (auto& s : expected) std::sort(s.begin(), s.end());
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    out.expected_count = (long long)expected.size();
    out.got_count = (long long)got.size();
    std::set<std::string> got_keys, exp_keys;
    for (const auto& s : got) got_keys.insert(render_set(s));
    for (const auto& s : expected) exp_keys.insert(render_set(s));
    for (const auto& k : exp_keys)
        if (!got_keys.count(k)) out.mismatches.push_back("missing " + k);
    for (const auto& k : got_keys)
        if (!exp_keys.count(k)) out.mismatches.push_back("extra " + k);
    out.pass = out.mismatches.empty() && got.size() == expected.size();
    return out;
}

template <size_t N, size_t K>
std::vector<std::vector<GfVector>> parse_table(const char* const (&table)[N][K], int dim) {
    std::vector<std::vector<GfVector>> out;
    for (size_t i = 0; i < N; ++i) {
        std::vector<GfVector> set;
        for (size_t j = 0; j < K; ++j) set.push_back(GfVector::parse(2, table[i][j]));
        (void)dim;
        out.push_back(std::move(set));
    }
    return out;
}

}  // namespace

std::vector<std::string> golden_fixture_names() {
    return {"lagrangians-j2", "tremain-j3-lambda", "tremain-j4-lambda"};
}

GoldenCheck golden_check(const std::string& fixture) {
    if (fixture == "lagrangians-j2") {
        std::vector<std::vector<GfVector>> got;
        for (const auto& lag : enumerate_lagrangians(SymplecticSpace(2, 2)))
            got.push_back(lag.elements());
        return diff_sets(fixture, got, parse_table(golden::kLagrangiansJ2, 4));
    }
    if (fixture == "tremain-j3-lambda") {
        auto res = pair_extension_count(FamilyTag::PsiDHat, 3, GfVector::parse(2, "000000"),
                                        GfVector::parse(2, "001111"));
        return diff_sets(fixture, res.extensions, parse_table(golden::kTremainJ3Extensions, 6));
    }
    if (fixture == "tremain-j4-lambda") {
        auto res = pair_extension_count(FamilyTag::PsiDHat, 4, GfVector::parse(2, "00000000"),
                                        GfVector::parse(2, "11111111"));
        return diff_sets(fixture, res.blocks, parse_table(golden::kTremainJ4Blocks, 8));
    }
    throw InvalidInput("golden_check: fixture missing");
}

Rat block_probability(FamilyTag tag, int J) {
    FrameFamily fam = (tag == FamilyTag::Phi || tag == FamilyTag::Psi)
                          ? FrameFamily::make(tag, 2, J)
                          : FrameFamily::make(tag, 2, J, default_affine_quadric(J));
    ExactGram g = gram_build(fam);
    BinderResult res = binder_family(tag, J, fam.d.empty() ? default_affine_quadric(J) : fam.d);
    if (res.blocks.empty()) return Rat(0, 1);
    return Rat((long long)res.blocks.size(), binom128(g.n, int(g.diag + 1)));
}

}  // namespace binderlab
