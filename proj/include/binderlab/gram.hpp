#pragma once

// Exact Gram matrices for the symplectic ETF, its dual, and the four
// quadratic-form sub-families; Welch/spark bounds; tightness, duals, triple
// products and the regular-simplex test; phased incidence lifts; an
// exhaustive spark oracle; symmetry verification.

#include "binderlab/cyclo.hpp"
#include "binderlab/design.hpp"
#include "binderlab/gf.hpp"
#include "binderlab/quadratic.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace binderlab {

enum class FamilyTag { Phi, Psi, PhiDc, PhiDcHat, PsiD, PsiDHat };

const char* family_name(FamilyTag tag);
std::optional<FamilyTag> family_from_name(const std::string& name);

struct FrameFamily {
    FamilyTag tag;
    int p = 2;
    int J = 1;
    // Affine quadric of size 2^{J-1}(2^J+1); required for the four
    // sub-families, ignored for Phi/Psi. Defaults to the complement of the
    // quadric of Q_{J,-}.
    std::vector<GfVector> d;

    static FrameFamily make(FamilyTag tag, int p, int J);
    static FrameFamily make(FamilyTag tag, int p, int J, std::vector<GfVector> d);
};

std::vector<GfVector> default_affine_quadric(int J);  // complement of quadric(Q_{J,-})

struct GramAnalysis {
    bool tight = false;
    Rat tight_constant;      // A with G^2 = A G
    long long rank = 0;      // Tr(G)/A when tight
    bool welch_integer = false;
    long long welch_s = 0;   // S when integral
};

// Hermitian matrix with constant integer diagonal and entries eps * zeta_p^k
// off the diagonal (zero entries permitted for generality).
struct ExactGram {
    int p = 2;
    int n = 0;
    long long diag = 0;
    std::vector<std::string> labels;    // index labels, size n
    std::vector<SignedRoot> off;        // n*n; diagonal slots are unused
    std::optional<GramAnalysis> analysis;

    SignedRoot entry(int i, int j) const { return off[size_t(i) * n + j]; }
    void set_entry(int i, int j, SignedRoot e);
    CycloInt entry_cyclo(int i, int j) const;

    void check_hermitian() const;
    // Computes and caches the tightness analysis; call after construction.
    void finalize();
};

struct WelchBound {
    Rat s_squared;
    bool is_integer = false;
    long long s = 0;
};

// S = sqrt(Dm (N-1) / (N - Dm)) as an exact rational square root.
WelchBound welch_spark_bounds(long long n, long long dm);

ExactGram gram_build(const FrameFamily& family);

struct TightCheck {
    bool tight = false;
    Rat a;
};
TightCheck is_tight(const ExactGram& g);

ExactGram dual_gram(const ExactGram& g);

SignedRoot triple_product(const ExactGram& g, int i, int j, int k);

bool is_simplex(const ExactGram& g, const std::vector<int>& k);
bool anchored_simplex_check(const ExactGram& g, const std::vector<int>& k, int anchor);

struct PhasedIncidence {
    BibdParams params;                        // of the block design
    std::vector<std::vector<int>> blocks;     // row support, canonical order
    std::vector<std::vector<SignedRoot>> rows;  // unscaled entries; true matrix is rows / sqrt(Lambda)
    bool gram_identity_ok = false;            // Psi* Psi = A I - G, checked exactly
};

// Phases the incidence matrix of a BIBD of binder blocks: z_{b,n0} = 1 at the
// block minimum, z_{b,n} = -G(n0,n) elsewhere, and verifies the dual Gram
// identity exactly (the 1/sqrt(Lambda) scale is carried symbolically).
PhasedIncidence phase_incidence(const ExactGram& g, const IncidenceStructure& blocks);

struct SparkResult {
    bool found = false;       // a singular principal submatrix exists within the cap
    int spark = 0;            // smallest singular size when found
    std::vector<std::vector<int>> singular_subsets;  // all subsets at that size
};

// Smallest k with a singular k x k principal submatrix, by exact determinants
// over Z (p = 2) or Z[zeta_p]. Guarded to n <= 20 and sizes <= size_cap.
SparkResult spark_exhaustive(const ExactGram& g, int size_cap);

struct SymmetryCheck {
    bool ok = false;
    std::vector<SignedRoot> witnesses;       // z_n with G(s i, s j) = conj(z_i) z_j G(i,j)
    std::array<int, 2> failure_pair{-1, -1};
};

SymmetryCheck verify_symmetry(const ExactGram& g, const std::vector<int>& perm);

}  // namespace binderlab
