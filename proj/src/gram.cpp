#include "binderlab/gram.hpp"

#include "binderlab/symplectic.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace binderlab {

const char* family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Phi: return "phi";
        case FamilyTag::Psi: return "psi";
        case FamilyTag::PhiDc: return "phi-dc";
        case FamilyTag::PhiDcHat: return "phi-dc-hat";
        case FamilyTag::PsiD: return "psi-d";
        case FamilyTag::PsiDHat: return "psi-d-hat";
    }
    return "?";
}

std::optional<FamilyTag> family_from_name(const std::string& name) {
    for (FamilyTag tag : {FamilyTag::Phi, FamilyTag::Psi, FamilyTag::PhiDc, FamilyTag::PhiDcHat,
                          FamilyTag::PsiD, FamilyTag::PsiDHat})
        if (name == family_name(tag)) return tag;
    return std::nullopt;
}

std::vector<GfVector> default_affine_quadric(int J) {
    Quadric neg = quadric(QuadraticForm::canonical(J, -1));
    std::vector<char> in_q(size_t(1) << (2 * J), 0);
    for (const auto& pnt : neg.points) in_q[size_t(pnt.lex_rank())] = 1;
    std::vector<GfVector> out;
    for (uint64_t r = 0; r < (uint64_t(1) << (2 * J)); ++r)
        if (!in_q[size_t(r)]) out.push_back(GfVector::from_lex_rank(2, 2 * J, r));
    return out;
}

FrameFamily FrameFamily::make(FamilyTag tag, int p, int J) {
    FrameFamily fam;
    fam.tag = tag;
    fam.p = p;
    fam.J = J;
    if (tag != FamilyTag::Phi && tag != FamilyTag::Psi) {
        if (p != 2) throw InvalidInput("FrameFamily: sub-families require p = 2");
        fam.d = default_affine_quadric(J);
    }
    return fam;
}

FrameFamily FrameFamily::make(FamilyTag tag, int p, int J, std::vector<GfVector> d) {
    FrameFamily fam = make(tag, p, J);
    if (tag == FamilyTag::Phi || tag == FamilyTag::Psi)
        throw InvalidInput("FrameFamily: Phi/Psi take no D");
    std::sort(d.begin(), d.end());
    fam.d = std::move(d);
    return fam;
}

void ExactGram::set_entry(int i, int j, SignedRoot e) { off[size_t(i) * n + j] = e; }

CycloInt ExactGram::entry_cyclo(int i, int j) const {
    if (i == j) return CycloInt(p, diag);
    return entry(i, j).to_cyclo(p);
}

void ExactGram::check_hermitian() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(entry(j, i) == entry(i, j).conj(p)))
                throw InvalidInput("ExactGram: not Hermitian");
}

WelchBound welch_spark_bounds(long long n, long long dm) {
    if (dm <= 0 || dm >= n) throw InvalidInput("welch_spark_bounds: need 0 < Dm < N");
    WelchBound out;
    out.s_squared = Rat(Int128(dm) * (n - 1), n - dm);
    if (out.s_squared.is_integer()) {
        long long s = 0;
        while (Int128(s) * s < out.s_squared.num) ++s;
        if (Int128(s) * s == out.s_squared.num) {
            out.is_integer = true;
            out.s = s;
        }
    }
    return out;
}

TightCheck is_tight(const ExactGram& g) {
    // G^2 = A G entrywise in the cyclotomic ring; A is read off the diagonal
    // of G^2 and then checked everywhere.
    const int n = g.n, p = g.p;
    CycloInt g2_00(p);
    for (int k = 0; k < n; ++k) g2_00 = g2_00 + g.entry_cyclo(0, k) * g.entry_cyclo(k, 0);
    if (!g2_00.is_integer()) return {false, Rat()};
    Rat a(g2_00.integer_part(), g.diag);
    // den * G^2 == num * G entrywise.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CycloInt s(p);
            for (int k = 0; k < n; ++k) s = s + g.entry_cyclo(i, k) * g.entry_cyclo(k, j);
            if (!(s.scaled(a.den) == g.entry_cyclo(i, j).scaled(a.num))) return {false, Rat()};
        }
    return {true, a};
}

void ExactGram::finalize() {
    check_hermitian();
    GramAnalysis res;
    TightCheck tc = is_tight(*this);
    res.tight = tc.tight;
    if (tc.tight) {
        res.tight_constant = tc.a;
        Rat rank = Rat(Int128(n) * diag, 1) * Rat(tc.a.den, tc.a.num);
        if (!rank.is_integer()) throw InvalidInput("ExactGram: non-integer rank");
        res.rank = (long long)rank.num;
        if (res.rank > 0 && res.rank < n) {
            WelchBound wb = welch_spark_bounds(n, res.rank);
            res.welch_integer = wb.is_integer;
            res.welch_s = wb.s;
        }
    }
    analysis = res;
}

namespace {

ExactGram build_from_indices(int p, long long diag, const std::vector<GfVector>& indices,
                             const std::function<SignedRoot(const GfVector&, const GfVector&)>& f) {
    ExactGram g;
    g.p = p;
    g.n = int(indices.size());
    g.diag = diag;
    for (const auto& v : indices) g.labels.push_back(v.render());
    g.off.assign(size_t(g.n) * g.n, SignedRoot::zero());
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (i != j) g.set_entry(i, j, f(indices[size_t(i)], indices[size_t(j)]));
    g.finalize();
    return g;
}

}  // namespace

ExactGram gram_build(const FrameFamily& family) {
    const int p = family.p, J = family.J;
    SymplecticSpace sp(p, J);
    if (family.tag == FamilyTag::Phi || family.tag == FamilyTag::Psi) {
        long long pj = 1;
        for (int i = 0; i < J; ++i) pj *= p;
        auto dom = sp.domain();
        bool is_phi = family.tag == FamilyTag::Phi;
        return build_from_indices(p, is_phi ? pj + 1 : pj - 1, dom,
                                  [&](const GfVector& a, const GfVector& b) {
                                      return SignedRoot::make(p, is_phi ? 1 : -1, sp.bform(a, b));
                                  });
    }
    if (p != 2) throw InvalidInput("gram_build: sub-families require p = 2");
    if (J < 2) throw InvalidInput("gram_build: sub-families require J >= 2");
    long long want = (1ll << (J - 1)) * ((1ll << J) + 1);
    if ((long long)family.d.size() != want || !is_affine_quadric(J, family.d))
        throw InvalidInput("gram_build: D must be an affine quadric of size 2^{J-1}(2^J+1)");
    std::vector<char> in_d(size_t(1) << (2 * J), 0);
    for (const auto& pnt : family.d) in_d[size_t(pnt.lex_rank())] = 1;
    std::vector<GfVector> dc;
    for (uint64_t r = 0; r < (uint64_t(1) << (2 * J)); ++r)
        if (!in_d[size_t(r)]) dc.push_back(GfVector::from_lex_rank(2, 2 * J, r));

    long long diag = 0;
    int eps = 1;
    const std::vector<GfVector>* idx = nullptr;
    switch (family.tag) {
        case FamilyTag::PhiDc:
            diag = (1ll << J) + 1;
            eps = 1;
            idx = &dc;
            break;
        case FamilyTag::PhiDcHat:
            diag = (1ll << (J - 1)) - 1;
            eps = -1;
            idx = &dc;
            break;
        case FamilyTag::PsiD:
            diag = (1ll << J) - 1;
            eps = -1;
            idx = &family.d;
            break;
        case FamilyTag::PsiDHat:
            diag = (1ll << (J - 1)) + 1;
            eps = 1;
            idx = &family.d;
            break;
        default:
            throw InvalidInput("gram_build: unreachable");
    }
    return build_from_indices(2, diag, *idx, [&](const GfVector& a, const GfVector& b) {
        return SignedRoot::make(2, sp.bform(a, b) ? -eps : eps, 0);
    });
}

ExactGram dual_gram(const ExactGram& g) {
    TightCheck tc = g.analysis && g.analysis->tight ? TightCheck{true, g.analysis->tight_constant}
                                                    : is_tight(g);
    if (!tc.tight) throw InvalidInput("dual_gram: G is not tight");
    if (!tc.a.is_integer()) throw InvalidInput("dual_gram: tight constant is not an integer");
    ExactGram d = g;
    d.diag = (long long)tc.a.num - g.diag;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (i != j) d.set_entry(i, j, g.entry(i, j).negated());
    d.analysis.reset();
    d.finalize();
    return d;
}

SignedRoot triple_product(const ExactGram& g, int i, int j, int k) {
    if (i == j || j == k || i == k) throw InvalidInput("triple_product: indices must be distinct");
    return g.entry(i, j).times(g.p, g.entry(j, k)).times(g.p, g.entry(k, i));
}

bool is_simplex(const ExactGram& g, const std::vector<int>& k) {
    if ((long long)k.size() != g.diag + 1) return false;
    for (size_t a = 0; a < k.size(); ++a)
        for (size_t b = a + 1; b < k.size(); ++b)
            for (size_t c = b + 1; c < k.size(); ++c)
                if (!triple_product(g, k[a], k[b], k[c]).is_minus_one()) return false;
    return true;
}

bool anchored_simplex_check(const ExactGram& g, const std::vector<int>& k, int anchor) {
    if (std::find(k.begin(), k.end(), anchor) == k.end())
        throw InvalidInput("anchored_simplex_check: anchor not in the set");
    if ((long long)k.size() != g.diag + 1) return false;
    for (size_t a = 0; a < k.size(); ++a) {
        if (k[a] == anchor) continue;
        for (size_t b = a + 1; b < k.size(); ++b) {
            if (k[b] == anchor) continue;
            if (!triple_product(g, anchor, k[a], k[b]).is_minus_one()) return false;
        }
    }
    return true;
}

PhasedIncidence phase_incidence(const ExactGram& g, const IncidenceStructure& blocks) {
    BibdCheck chk = verify_bibd(blocks);
    if (!chk.ok) throw InvalidInput("phase_incidence: blocks do not form a BIBD");
    if (blocks.v != g.n) throw InvalidInput("phase_incidence: vertex count mismatch");
    PhasedIncidence out;
    out.params = chk.params;
    out.blocks = blocks.blocks;
    std::sort(out.blocks.begin(), out.blocks.end());
    for (const auto& blk : out.blocks)
        if (!is_simplex(g, blk)) throw InvalidInput("phase_incidence: block fails the simplex test");
    for (const auto& blk : out.blocks) {
        std::vector<SignedRoot> row(size_t(g.n), SignedRoot::zero());
        int n0 = blk[0];
        row[size_t(n0)] = SignedRoot::make(g.p, 1, 0);
        for (size_t i = 1; i < blk.size(); ++i)
            row[size_t(blk[i])] = g.entry(n0, blk[i]).negated();
        out.rows.push_back(std::move(row));
    }
    // Exact dual-Gram identity: sum_b conj(z_{b,n1}) z_{b,n2} = -Lambda G(n1,n2)
    // for n1 != n2, and the diagonal support count equals R with
    // R/Lambda = A - diag.
    TightCheck tc = g.analysis && g.analysis->tight ? TightCheck{true, g.analysis->tight_constant}
                                                    : is_tight(g);
    if (!tc.tight) throw InvalidInput("phase_incidence: G is not tight");
    out.gram_identity_ok = true;
    Rat dual_diag = Rat(chk.params.r, chk.params.lambda);
    if (dual_diag != tc.a - Rat::integer(g.diag)) out.gram_identity_ok = false;
    for (int n1 = 0; n1 < g.n && out.gram_identity_ok; ++n1)
        for (int n2 = n1 + 1; n2 < g.n; ++n2) {
            CycloInt acc(g.p);
            for (const auto& row : out.rows) {
                if (row[size_t(n1)].is_zero() || row[size_t(n2)].is_zero()) continue;
                acc = acc + (row[size_t(n1)].conj(g.p).times(g.p, row[size_t(n2)])).to_cyclo(g.p);
            }
            CycloInt want = g.entry(n1, n2).negated().to_cyclo(g.p).scaled(chk.params.lambda);
            if (!(acc == want)) {
                out.gram_identity_ok = false;
                break;
            }
        }
    return out;
}

SparkResult spark_exhaustive(const ExactGram& g, int size_cap) {
    if (g.n > 20) throw LimitExceeded("spark_exhaustive: n <= 20 required");
    if (size_cap < 2 || size_cap > g.n) size_cap = g.n;
    SparkResult out;
    std::vector<int> subset;
    auto singular = [&](const std::vector<int>& idx) {
        size_t m = idx.size();
        if (g.p == 2) {
            std::vector<std::vector<Int128>> mat(m, std::vector<Int128>(m));
            for (size_t i = 0; i < m; ++i)
                for (size_t j = 0; j < m; ++j)
                    mat[i][j] = i == j ? Int128(g.diag) : Int128(g.entry(idx[i], idx[j]).eps);
            return integer_determinant(std::move(mat)) == 0;
        }
        std::vector<std::vector<CycloInt>> mat(m, std::vector<CycloInt>(m, CycloInt(g.p)));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) mat[i][j] = g.entry_cyclo(idx[i], idx[j]);
        return cyclo_determinant(mat).is_zero();
    };
    for (int k = 2; k <= size_cap; ++k) {
        std::vector<int> idx(size_t(std::max(k, 0)), 0);
        for (int i = 0; i < k; ++i) idx[size_t(i)] = i;
        while (true) {
            if (singular(idx)) out.singular_subsets.push_back(idx);
            int pos = k - 1;
            while (pos >= 0 && idx[size_t(pos)] == g.n - k + pos) --pos;
            if (pos < 0) break;
            ++idx[size_t(pos)];
            for (int i = pos + 1; i < k; ++i) idx[size_t(i)] = idx[size_t(i - 1)] + 1;
        }
        if (!out.singular_subsets.empty()) {
            out.found = true;
            out.spark = k;
            return out;
        }
    }
    return out;
}

SymmetryCheck verify_symmetry(const ExactGram& g, const std::vector<int>& perm) {
    if ((int)perm.size() != g.n) throw InvalidInput("verify_symmetry: permutation size mismatch");
    std::vector<char> hit(size_t(g.n), 0);
    for (int s : perm) {
        if (s < 0 || s >= g.n || hit[size_t(s)])
            throw InvalidInput("verify_symmetry: not a bijection");
        hit[size_t(s)] = 1;
    }
    SymmetryCheck out;
    if (g.n == 1) {
        out.ok = true;
        out.witnesses = {SignedRoot::make(g.p, 1, 0)};
        return out;
    }
    // Propagate ratios from index 0: z_0 := 1, z_j := G(s0, sj) / G(0, j);
    // unimodular entries make the ratio another signed root.
    out.witnesses.assign(size_t(g.n), SignedRoot::make(g.p, 1, 0));
    for (int j = 1; j < g.n; ++j) {
        SignedRoot base = g.entry(0, j);
        SignedRoot moved = g.entry(perm[0], perm[size_t(j)]);
        if (base.is_zero() || moved.is_zero())
            throw InvalidInput("verify_symmetry: zero off-diagonal entry");
        out.witnesses[size_t(j)] = moved.times(g.p, base.conj(g.p));
    }
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            SignedRoot want = out.witnesses[size_t(i)]
                                  .conj(g.p)
                                  .times(g.p, out.witnesses[size_t(j)])
                                  .times(g.p, g.entry(i, j));
            if (!(g.entry(perm[size_t(i)], perm[size_t(j)]) == want)) {
                out.ok = false;
                out.failure_pair = {i, j};
                return out;
            }
        }
    out.ok = true;
    return out;
}

}  // namespace binderlab
