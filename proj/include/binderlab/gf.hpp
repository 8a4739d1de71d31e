#pragma once

// Exact linear algebra over prime fields F_p.
//
// Vectors are coordinate tuples (x_1,...,x_dim) rendered as the digit string
// "x_1 x_2 ... x_dim" (no spaces); x_1 is the most significant digit for
// lexicographic comparison. For p == 2 the coordinates are bit-packed into a
// machine word with x_i in bit i-1, supporting dim <= 64.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace binderlab {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int mod_inverse(int a, int p);

class GfVector {
public:
    GfVector() = default;
    GfVector(int p, int dim);  // zero vector

    static GfVector parse(int p, std::string_view digits);
    static GfVector from_digits(int p, const std::vector<uint8_t>& digits);
    // Packed form, p == 2 only: coordinate x_i sits in bit i-1.
    static GfVector from_bits(int dim, uint64_t bits);
    // r-th vector in lex order, r in [0, p^dim): digits of r base p, most
    // significant digit first.
    static GfVector from_lex_rank(int p, int dim, uint64_t r);

    int p() const { return p_; }
    int dim() const { return dim_; }
    int get(int i) const;           // coordinate index 0-based
    void set(int i, int value);
    bool is_zero() const;
    uint64_t bits() const;          // p == 2 only
    uint64_t lex_rank() const;

    std::string render() const;

    GfVector operator+(const GfVector& o) const;
    GfVector operator-(const GfVector& o) const;
    GfVector scaled(int c) const;

    bool operator==(const GfVector& o) const;
    bool operator!=(const GfVector& o) const { return !(*this == o); }
    // Lex order on digit strings, left to right.
    bool operator<(const GfVector& o) const { return compare(o) < 0; }
    int compare(const GfVector& o) const;

private:
    void check_compatible(const GfVector& o) const;

    int p_ = 0;
    int dim_ = 0;
    uint64_t bits_ = 0;              // p == 2
    std::vector<uint8_t> digits_;    // p > 2
};

// Dense matrix over F_p, row major.
class GfMatrix {
public:
    GfMatrix() = default;
    GfMatrix(int p, int rows, int cols);
    static GfMatrix identity(int p, int n);
    static GfMatrix from_rows(const std::vector<GfVector>& rows);

    int p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
    void set(int r, int c, int v);

    GfVector row(int r) const;
    GfMatrix transposed() const;
    GfMatrix operator*(const GfMatrix& o) const;
    GfVector apply(const GfVector& v) const;   // matrix * column vector
    int rank() const;
    bool invertible() const;
    GfMatrix inverse() const;                  // throws InvalidInput if singular
    GfMatrix negated() const;

    bool operator==(const GfMatrix& o) const;

private:
    int p_ = 0, rows_ = 0, cols_ = 0;
    std::vector<uint8_t> a_;
};

// Subspace of F_p^dim held as a reduced row-echelon basis with strictly
// increasing pivot columns; two equal subspaces have identical bases.
class Subspace {
public:
    Subspace() = default;
    Subspace(int p, int dim);  // zero subspace

    static Subspace span(int p, int dim, const std::vector<GfVector>& gens);

    int p() const { return p_; }
    int dim() const { return dim_; }
    int rank() const { return int(basis_.size()); }
    const std::vector<GfVector>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const GfVector& v) const;
    // Residual of v after eliminating all pivot coordinates; the result is the
    // lex-minimal element of the coset v + S.
    GfVector reduce(const GfVector& v) const;
    Subspace extended(const GfVector& v) const;

    // All p^rank elements, sorted lex. Guarded for rank <= 24.
    std::vector<GfVector> elements() const;

    // Canonical byte key (identical subspaces yield identical keys).
    std::string key() const;
    // Text form: newline-separated basis rows.
    std::string render() const;

    bool operator==(const Subspace& o) const;
    bool operator<(const Subspace& o) const;

private:
    int p_ = 0, dim_ = 0;
    std::vector<GfVector> basis_;
    std::vector<int> pivots_;
};

// Coset v + S with the lex-minimal representative.
struct AffineSubspace {
    GfVector rep;
    Subspace space;

    std::vector<GfVector> elements() const;
    bool operator==(const AffineSubspace& o) const;
    bool operator<(const AffineSubspace& o) const;
};

Subspace canonical_subspace(const std::vector<GfVector>& vectors);
Subspace canonical_subspace(int p, int dim, const std::vector<GfVector>& vectors);

// {w : v^T form w = 0 for all v in S}. form must be square of matching size.
Subspace orthogonal_complement(const Subspace& s, const GfMatrix& form);

AffineSubspace coset_canonicalize(const GfVector& v, const Subspace& s);

}  // namespace binderlab
