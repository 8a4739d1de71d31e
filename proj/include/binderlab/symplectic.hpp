#pragma once

// The canonical symplectic form B_J on F_p^{2J}, symplectic bases and group
// membership, character tables, Lagrangian and affine-Lagrangian enumeration,
// Lagrangian spreads, and the order of Sp.

#include "binderlab/gf.hpp"

#include <cstdint>
#include <vector>

namespace binderlab {

struct SymplecticSpace {
    int p = 2;
    int J = 1;

    SymplecticSpace(int p_, int J_);

    int dim() const { return 2 * J; }
    uint64_t domain_size() const;
    // B_J(x, y) = sum_j [x(2j-1) y(2j) - x(2j) y(2j-1)] mod p.
    int bform(const GfVector& x, const GfVector& y) const;
    int bform_rank(uint64_t r1, uint64_t r2) const;  // arguments as lex ranks
    GfMatrix form_matrix() const;
    // All p^{2J} vectors in lex order; vector at position r has lex_rank r.
    std::vector<GfVector> domain() const;
};

// Character table Gamma(v1,v2) = exp(2 pi i / p * B(v1,v2)), held as the
// exponent map. Dense for domains up to 256 points, entry-on-demand beyond.
class CharacterTable {
public:
    explicit CharacterTable(const SymplecticSpace& space);
    const SymplecticSpace& space() const { return space_; }
    int exponent(uint64_t r1, uint64_t r2) const;
    bool dense() const { return !table_.empty(); }

private:
    SymplecticSpace space_;
    std::vector<uint8_t> table_;
};

int bform(const SymplecticSpace& space, const GfVector& x, const GfVector& y);

// True iff a is invertible and preserves the canonical form on all basis pairs.
bool is_symplectic_map(const SymplecticSpace& space, const GfMatrix& a);

// Given an alternating nondegenerate form matrix, returns T whose columns form
// a symplectic basis: T^t * gram * T equals the canonical form matrix.
GfMatrix build_symplectic_basis(const GfMatrix& gram);

// All J-dimensional totally orthogonal subspaces, canonical and sorted.
std::vector<Subspace> enumerate_lagrangians(const SymplecticSpace& space);

// All p^J * prod_j (p^j + 1) cosets of Lagrangian subspaces, canonical, sorted.
std::vector<AffineSubspace> enumerate_affine_lagrangians(const SymplecticSpace& space);

struct LagrangianSpread {
    std::vector<Subspace> members;  // p^J + 1 subspaces
    GfMatrix transition;            // map applied to the pulled-back coordinates
};

// A spread of p^J + 1 Lagrangians whose nonzero parts partition the nonzero
// vectors; built from the F_{p^J} line structure. Supported for p = 2 with
// J in {1,2,3,4} and p = 3 with J = 1.
LagrangianSpread lagrangian_spread(const SymplecticSpace& space);

// prod_{j=1..J} p^{2j-1} (p^{2j} - 1).
long long sp_order(const SymplecticSpace& space);
// Counts invertible form-preserving matrices directly; 2J <= 4 only.
long long sp_count_bruteforce(const SymplecticSpace& space);

}  // namespace binderlab
