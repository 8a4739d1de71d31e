#pragma once

// Quadratic forms over F_2 yielding the canonical symplectic form B_J:
// evaluation, quadrics, signs, affine quadrics, hyperbolic bases, the
// Sp-action vector shift, and the totally-singular structure results.

#include "binderlab/gf.hpp"
#include "binderlab/symplectic.hpp"

#include <vector>

namespace binderlab {

// Form v -> Q_{J,base}(v) + B(shift, v). base_sign selects the canonical
// positive form sum x(2j-1) x(2j) or the negative one (which adds
// x(2J-1)^2 + x(2J)^2). Every form yielding B_J has such a representation;
// the canonical one prefers base_sign = +1, which always exists.
class QuadraticForm {
public:
    QuadraticForm(int J, int base_sign, const GfVector& shift);
    static QuadraticForm canonical(int J, int sign);  // Q_{J,+} or Q_{J,-}

    int J() const { return J_; }
    int dim() const { return 2 * J_; }
    int base_sign() const { return base_sign_; }
    const GfVector& shift() const { return shift_; }
    SymplecticSpace space() const { return SymplecticSpace(2, J_); }

    int eval(const GfVector& v) const;
    int eval_rank(uint64_t r) const;

    // Same value table; representations across both base signs compare equal.
    bool same_form(const QuadraticForm& o) const;
    // Prefer the base_sign = +1 representation.
    QuadraticForm canonicalized() const;

private:
    int J_;
    int base_sign_;
    GfVector shift_;
};

struct Quadric {
    QuadraticForm form;
    std::vector<GfVector> points;  // sorted; {v : Q(v) = 0}

    bool contains(const GfVector& v) const { return form.eval(v) == 0; }
};

int q_eval(const QuadraticForm& q, const GfVector& v);
Quadric quadric(const QuadraticForm& q);
int q_sign(const QuadraticForm& q);  // 2^{-(J-1)} (|quadric| - 2^{2J-1})

// The 2^{2J} distinct translates of the reference quadric of the requested
// size class ('+' -> 2^{J-1}(2^J+1), '-' -> 2^{J-1}(2^J-1)), each sorted.
std::vector<std::vector<GfVector>> enumerate_affine_quadrics(int J, char size_selector);

// True iff the set or its complement is the quadric of a form yielding B_J.
bool is_affine_quadric(int J, const std::vector<GfVector>& points);

// Symplectic basis (v_k) with Q(v_k) = 0 for k <= 2J-2 and the last pair both
// singular (sign +) or both nonsingular (sign -).
std::vector<GfVector> hyperbolic_basis(const QuadraticForm& q);

// The unique v_A in the quadric with A*quadric + v_A = quadric, equivalently
// Q(v) = Q(A v + v_A) for all v. Throws InvalidInput for non-symplectic A.
GfVector action_shift(const GfMatrix& a, const QuadraticForm& q);

struct SingularSplit {
    Subspace intersection;  // S meet quadric
    bool halved;            // true iff S is not contained in the quadric
};

// Requires S totally orthogonal; S meet Q is a subspace, of index 2 in S
// whenever S is not totally singular.
SingularSplit singular_split(const Subspace& s, const QuadraticForm& q);

struct LagrangianExtension {
    Subspace lagrangian;
    bool totally_singular;
};

// The exactly three Lagrangians containing a (J-1)-dimensional totally
// singular subspace, each flagged for total singularity.
std::vector<LagrangianExtension> lagrangian_extensions(const Subspace& s, const QuadraticForm& q);

// For sign(Q) = +1: the unique coset of the Lagrangian lying in the quadric.
AffineSubspace totally_singular_coset(const Subspace& lagrangian, const QuadraticForm& q);

}  // namespace binderlab
