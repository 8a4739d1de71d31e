#include "binderlab/gf.hpp"

#include <algorithm>

namespace binderlab {

int mod_inverse(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw InvalidInput("mod_inverse: zero has no inverse");
    // p is a small prime; Fermat by repeated multiplication is plenty.
    int r = 1;
    for (int e = p - 2; e > 0; --e) r = r * a % p;
    return r;
}

GfVector::GfVector(int p, int dim) : p_(p), dim_(dim) {
    if (p < 2 || dim < 0) throw InvalidInput("GfVector: bad p or dim");
    if (p == 2 && dim > 64) throw LimitExceeded("GfVector: p=2 packing supports dim <= 64");
    if (p != 2) digits_.assign(size_t(dim), 0);
}

GfVector GfVector::parse(int p, std::string_view digits) {
    GfVector v(p, int(digits.size()));
    for (size_t i = 0; i < digits.size(); ++i) {
        char c = digits[i];
        if (c < '0' || c >= '0' + p) throw InvalidInput("GfVector::parse: digit out of range");
        v.set(int(i), c - '0');
    }
    return v;
}

GfVector GfVector::from_digits(int p, const std::vector<uint8_t>& digits) {
    GfVector v(p, int(digits.size()));
    for (size_t i = 0; i < digits.size(); ++i) v.set(int(i), digits[i]);
    return v;
}

GfVector GfVector::from_bits(int dim, uint64_t bits) {
    GfVector v(2, dim);
    if (dim < 64 && (bits >> dim) != 0) throw InvalidInput("GfVector::from_bits: stray bits");
    v.bits_ = bits;
    return v;
}

GfVector GfVector::from_lex_rank(int p, int dim, uint64_t r) {
    GfVector v(p, dim);
    for (int i = dim - 1; i >= 0; --i) {
        v.set(i, int(r % p));
        r /= p;
    }
    if (r != 0) throw InvalidInput("GfVector::from_lex_rank: rank out of range");
    return v;
}

int GfVector::get(int i) const {
    if (i < 0 || i >= dim_) throw InvalidInput("GfVector::get: index out of range");
    return p_ == 2 ? int((bits_ >> i) & 1u) : int(digits_[size_t(i)]);
}

void GfVector::set(int i, int value) {
    if (i < 0 || i >= dim_) throw InvalidInput("GfVector::set: index out of range");
    value %= p_;
    if (value < 0) value += p_;
    if (p_ == 2) {
        bits_ = (bits_ & ~(uint64_t(1) << i)) | (uint64_t(value & 1) << i);
    } else {
        digits_[size_t(i)] = uint8_t(value);
    }
}

bool GfVector::is_zero() const {
    if (p_ == 2) return bits_ == 0;
    return std::all_of(digits_.begin(), digits_.end(), [](uint8_t d) { return d == 0; });
}

uint64_t GfVector::bits() const {
    if (p_ != 2) throw InvalidInput("GfVector::bits: packed form is p=2 only");
    return bits_;
}

uint64_t GfVector::lex_rank() const {
    uint64_t r = 0;
    for (int i = 0; i < dim_; ++i) r = r * p_ + uint64_t(get(i));
    return r;
}

std::string GfVector::render() const {
    std::string s(size_t(dim_), '0');
    for (int i = 0; i < dim_; ++i) s[size_t(i)] = char('0' + get(i));
    return s;
}

void GfVector::check_compatible(const GfVector& o) const {
    if (p_ != o.p_ || dim_ != o.dim_)
        throw DimensionMismatch("GfVector: mixed p or dim");
}

GfVector GfVector::operator+(const GfVector& o) const {
    check_compatible(o);
    GfVector r(p_, dim_);
    if (p_ == 2) {
        r.bits_ = bits_ ^ o.bits_;
    } else {
        for (int i = 0; i < dim_; ++i) r.digits_[size_t(i)] = uint8_t((get(i) + o.get(i)) % p_);
    }
    return r;
}

GfVector GfVector::operator-(const GfVector& o) const {
    check_compatible(o);
    GfVector r(p_, dim_);
    if (p_ == 2) {
        r.bits_ = bits_ ^ o.bits_;
    } else {
        for (int i = 0; i < dim_; ++i)
            r.digits_[size_t(i)] = uint8_t((get(i) - o.get(i) + p_) % p_);
    }
    return r;
}

GfVector GfVector::scaled(int c) const {
    c %= p_;
    if (c < 0) c += p_;
    GfVector r(p_, dim_);
    if (p_ == 2) {
        r.bits_ = c ? bits_ : 0;
    } else {
        for (int i = 0; i < dim_; ++i) r.digits_[size_t(i)] = uint8_t(get(i) * c % p_);
    }
    return r;
}

bool GfVector::operator==(const GfVector& o) const {
    if (p_ != o.p_ || dim_ != o.dim_) return false;
    return p_ == 2 ? bits_ == o.bits_ : digits_ == o.digits_;
}

int GfVector::compare(const GfVector& o) const {
    check_compatible(o);
    for (int i = 0; i < dim_; ++i) {
        int d = get(i) - o.get(i);
        if (d != 0) return d < 0 ? -1 : 1;
    }
    return 0;
}

GfMatrix::GfMatrix(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
    if (p < 2 || rows < 0 || cols < 0) throw InvalidInput("GfMatrix: bad shape");
    a_.assign(size_t(rows) * cols, 0);
}

GfMatrix GfMatrix::identity(int p, int n) {
    GfMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

GfMatrix GfMatrix::from_rows(const std::vector<GfVector>& rows) {
    if (rows.empty()) throw InvalidInput("GfMatrix::from_rows: empty");
    GfMatrix m(rows[0].p(), int(rows.size()), rows[0].dim());
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].p() != m.p_ || rows[r].dim() != m.cols_)
            throw DimensionMismatch("GfMatrix::from_rows: mixed p or dim");
        for (int c = 0; c < m.cols_; ++c) m.set(int(r), c, rows[r].get(c));
    }
    return m;
}

void GfMatrix::set(int r, int c, int v) {
    v %= p_;
    if (v < 0) v += p_;
    a_[size_t(r) * cols_ + c] = uint8_t(v);
}

GfVector GfMatrix::row(int r) const {
    GfVector v(p_, cols_);
    for (int c = 0; c < cols_; ++c) v.set(c, at(r, c));
    return v;
}

GfMatrix GfMatrix::transposed() const {
    GfMatrix t(p_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

GfMatrix GfMatrix::operator*(const GfMatrix& o) const {
    if (p_ != o.p_ || cols_ != o.rows_) throw DimensionMismatch("GfMatrix: shape mismatch");
    GfMatrix m(p_, rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            int v = at(r, k);
            if (!v) continue;
            for (int c = 0; c < o.cols_; ++c)
                m.set(r, c, m.at(r, c) + v * o.at(k, c));
        }
    return m;
}

GfVector GfMatrix::apply(const GfVector& v) const {
    if (v.p() != p_ || v.dim() != cols_) throw DimensionMismatch("GfMatrix::apply");
    GfVector r(p_, rows_);
    for (int i = 0; i < rows_; ++i) {
        int s = 0;
        for (int c = 0; c < cols_; ++c) s += at(i, c) * v.get(c);
        r.set(i, s % p_);
    }
    return r;
}

int GfMatrix::rank() const {
    std::vector<GfVector> rows;
    rows.reserve(size_t(rows_));
    for (int r = 0; r < rows_; ++r) rows.push_back(row(r));
    return Subspace::span(p_, cols_, rows).rank();
}

bool GfMatrix::invertible() const { return rows_ == cols_ && rank() == rows_; }

GfMatrix GfMatrix::inverse() const {
    if (rows_ != cols_) throw InvalidInput("GfMatrix::inverse: not square");
    int n = rows_;
    GfMatrix aug(p_, n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.set(r, c, at(r, c));
        aug.set(r, n + r, 1);
    }
    int row_i = 0;
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        for (int r = row_i; r < n; ++r)
            if (aug.at(r, col) != 0) { pr = r; break; }
        if (pr < 0) throw InvalidInput("GfMatrix::inverse: singular");
        if (pr != row_i)
            for (int c = 0; c < 2 * n; ++c) {
                int t = aug.at(pr, c);
                aug.set(pr, c, aug.at(row_i, c));
                aug.set(row_i, c, t);
            }
        int inv = mod_inverse(aug.at(row_i, col), p_);
        for (int c = 0; c < 2 * n; ++c) aug.set(row_i, c, aug.at(row_i, c) * inv);
        for (int r = 0; r < n; ++r) {
            if (r == row_i) continue;
            int f = aug.at(r, col);
            if (!f) continue;
            for (int c = 0; c < 2 * n; ++c)
                aug.set(r, c, aug.at(r, c) + (p_ - f) * aug.at(row_i, c));
        }
        ++row_i;
    }
    GfMatrix inv(p_, n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.set(r, c, aug.at(r, n + c));
    return inv;
}

GfMatrix GfMatrix::negated() const {
    GfMatrix m(p_, rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.set(r, c, -at(r, c));
    return m;
}

bool GfMatrix::operator==(const GfMatrix& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Subspace::Subspace(int p, int dim) : p_(p), dim_(dim) {}

Subspace Subspace::span(int p, int dim, const std::vector<GfVector>& gens) {
    Subspace s(p, dim);
    for (const auto& g : gens) {
        if (g.p() != p || g.dim() != dim)
            throw DimensionMismatch("canonical_subspace: mixed p or dim");
        GfVector r = s.reduce(g);
        if (r.is_zero()) continue;
        // Normalize leading coefficient to 1, then insert keeping pivot order
        // and re-reduce earlier rows above the new pivot.
        int piv = 0;
        while (r.get(piv) == 0) ++piv;
        r = r.scaled(mod_inverse(r.get(piv), p));
        size_t pos = 0;
        while (pos < s.pivots_.size() && s.pivots_[pos] < piv) ++pos;
        s.basis_.insert(s.basis_.begin() + long(pos), r);
        s.pivots_.insert(s.pivots_.begin() + long(pos), piv);
        for (size_t i = 0; i < pos; ++i) {
            int c = s.basis_[i].get(piv);
            if (c != 0) s.basis_[i] = s.basis_[i] - r.scaled(c);
        }
    }
    return s;
}

bool Subspace::contains(const GfVector& v) const { return reduce(v).is_zero(); }

GfVector Subspace::reduce(const GfVector& v) const {
    if (v.p() != p_ || v.dim() != dim_) throw DimensionMismatch("Subspace::reduce");
    GfVector r = v;
    for (size_t i = 0; i < basis_.size(); ++i) {
        int c = r.get(pivots_[i]);
        if (c != 0) r = r - basis_[i].scaled(c);
    }
    return r;
}

Subspace Subspace::extended(const GfVector& v) const {
    auto gens = basis_;
    gens.push_back(v);
    return span(p_, dim_, gens);
}

std::vector<GfVector> Subspace::elements() const {
    int k = rank();
    if (k > 24) throw LimitExceeded("Subspace::elements: rank too large");
    uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= uint64_t(p_);
    std::vector<GfVector> out;
    out.reserve(total);
    for (uint64_t m = 0; m < total; ++m) {
        GfVector v(p_, dim_);
        uint64_t t = m;
        for (int i = 0; i < k; ++i) {
            int c = int(t % uint64_t(p_));
            t /= uint64_t(p_);
            if (c) v = v + basis_[size_t(i)].scaled(c);
        }
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string Subspace::key() const {
    std::string k;
    k += char('0' + p_);
    k += ':';
    for (const auto& b : basis_) {
        k += b.render();
        k += ';';
    }
    return k;
}

std::string Subspace::render() const {
    std::string s;
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (i) s += '\n';
        s += basis_[i].render();
    }
    return s;
}

bool Subspace::operator==(const Subspace& o) const {
    if (p_ != o.p_ || dim_ != o.dim_ || basis_.size() != o.basis_.size()) return false;
    for (size_t i = 0; i < basis_.size(); ++i)
        if (!(basis_[i] == o.basis_[i])) return false;
    return true;
}

bool Subspace::operator<(const Subspace& o) const {
    if (rank() != o.rank()) return rank() < o.rank();
    for (size_t i = 0; i < basis_.size(); ++i) {
        int c = basis_[i].compare(o.basis_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::vector<GfVector> AffineSubspace::elements() const {
    auto out = space.elements();
    for (auto& v : out) v = v + rep;
    std::sort(out.begin(), out.end());
    return out;
}

bool AffineSubspace::operator==(const AffineSubspace& o) const {
    return rep == o.rep && space == o.space;
}

bool AffineSubspace::operator<(const AffineSubspace& o) const {
    if (!(space == o.space)) return space < o.space;
    return rep < o.rep;
}

Subspace canonical_subspace(const std::vector<GfVector>& vectors) {
    if (vectors.empty()) throw InvalidInput("canonical_subspace: need p and dim for empty span");
    return canonical_subspace(vectors[0].p(), vectors[0].dim(), vectors);
}

Subspace canonical_subspace(int p, int dim, const std::vector<GfVector>& vectors) {
    return Subspace::span(p, dim, vectors);
}

Subspace orthogonal_complement(const Subspace& s, const GfMatrix& form) {
    if (form.p() != s.p() || form.rows() != s.dim() || form.cols() != s.dim())
        throw DimensionMismatch("orthogonal_complement: form shape mismatch");
    const int p = s.p(), n = s.dim();
    // Constraint rows v^T * form for each basis vector v; kernel is S^perp.
    const int m = s.rank();
    if (m == 0) {
        std::vector<GfVector> all;
        for (int i = 0; i < n; ++i) {
            GfVector e(p, n);
            e.set(i, 1);
            all.push_back(e);
        }
        return Subspace::span(p, n, all);
    }
    GfMatrix c(p, m, n);
    for (int r = 0; r < m; ++r) {
        const GfVector& v = s.basis()[size_t(r)];
        for (int j = 0; j < n; ++j) {
            int acc = 0;
            for (int i = 0; i < n; ++i) acc += v.get(i) * form.at(i, j);
            c.set(r, j, acc);
        }
    }
    // Kernel via RREF of the constraint matrix.
    std::vector<GfVector> crows;
    for (int r = 0; r < m; ++r) crows.push_back(c.row(r));
    Subspace rref = Subspace::span(p, n, crows);
    std::vector<bool> is_pivot(size_t(n), false);
    for (int piv : rref.pivots()) is_pivot[size_t(piv)] = true;
    std::vector<GfVector> kernel;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[size_t(free_col)]) continue;
        GfVector v(p, n);
        v.set(free_col, 1);
        for (size_t r = 0; r < rref.basis().size(); ++r) {
            int coef = rref.basis()[r].get(free_col);
            if (coef != 0) v.set(rref.pivots()[r], -coef);
        }
        kernel.push_back(v);
    }
    return Subspace::span(p, n, kernel);
}

AffineSubspace coset_canonicalize(const GfVector& v, const Subspace& s) {
    if (v.p() != s.p() || v.dim() != s.dim())
        throw DimensionMismatch("coset_canonicalize: dimension mismatch");
    // Zeroing every pivot coordinate yields the lex-minimal coset element: any
    // other element differs by a combination whose leading digit sits at a
    // pivot column where the reduced representative has 0.
    return AffineSubspace{s.reduce(v), s};
}

}  // namespace binderlab
