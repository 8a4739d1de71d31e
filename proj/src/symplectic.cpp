#include "binderlab/symplectic.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace binderlab {

SymplecticSpace::SymplecticSpace(int p_, int J_) : p(p_), J(J_) {
    if (p < 2 || J < 1) throw InvalidInput("SymplecticSpace: need prime p and J >= 1");
}

uint64_t SymplecticSpace::domain_size() const {
    uint64_t n = 1;
    for (int i = 0; i < 2 * J; ++i) n *= uint64_t(p);
    return n;
}

int SymplecticSpace::bform(const GfVector& x, const GfVector& y) const {
    if (x.p() != p || y.p() != p || x.dim() != dim() || y.dim() != dim())
        throw DimensionMismatch("bform: dimension mismatch");
    if (p == 2) {
        // x_i lives in bit i-1; swap each even/odd bit pair of y and AND.
        uint64_t yb = y.bits();
        uint64_t even = 0x5555555555555555ull;
        uint64_t sw = ((yb & even) << 1) | ((yb >> 1) & even);
        return std::popcount(x.bits() & sw) & 1;
    }
    int s = 0;
    for (int j = 0; j < J; ++j)
        s += x.get(2 * j) * y.get(2 * j + 1) - x.get(2 * j + 1) * y.get(2 * j);
    s %= p;
    if (s < 0) s += p;
    return s;
}

int SymplecticSpace::bform_rank(uint64_t r1, uint64_t r2) const {
    return bform(GfVector::from_lex_rank(p, dim(), r1), GfVector::from_lex_rank(p, dim(), r2));
}

GfMatrix SymplecticSpace::form_matrix() const {
    GfMatrix m(p, dim(), dim());
    for (int j = 0; j < J; ++j) {
        m.set(2 * j, 2 * j + 1, 1);
        m.set(2 * j + 1, 2 * j, -1);
    }
    return m;
}

std::vector<GfVector> SymplecticSpace::domain() const {
    uint64_t n = domain_size();
    if (n > (1u << 16)) throw LimitExceeded("SymplecticSpace::domain: too large");
    std::vector<GfVector> out;
    out.reserve(n);
    for (uint64_t r = 0; r < n; ++r) out.push_back(GfVector::from_lex_rank(p, dim(), r));
    return out;
}

CharacterTable::CharacterTable(const SymplecticSpace& space) : space_(space) {
    uint64_t n = space.domain_size();
    if (n <= 256) {
        table_.assign(size_t(n) * n, 0);
        auto dom = space.domain();
        for (uint64_t i = 0; i < n; ++i)
            for (uint64_t j = 0; j < n; ++j)
                table_[size_t(i) * n + j] = uint8_t(space.bform(dom[i], dom[j]));
    }
}

int CharacterTable::exponent(uint64_t r1, uint64_t r2) const {
    if (!table_.empty()) return table_[size_t(r1) * space_.domain_size() + r2];
    return space_.bform_rank(r1, r2);
}

int bform(const SymplecticSpace& space, const GfVector& x, const GfVector& y) {
    return space.bform(x, y);
}

bool is_symplectic_map(const SymplecticSpace& space, const GfMatrix& a) {
    const int n = space.dim();
    if (a.p() != space.p || a.rows() != n || a.cols() != n)
        throw DimensionMismatch("is_symplectic_map: wrong shape");
    if (!a.invertible()) return false;
    GfMatrix f = space.form_matrix();
    return a.transposed() * f * a == f;
}

GfMatrix build_symplectic_basis(const GfMatrix& gram) {
    const int p = gram.p(), n = gram.rows();
    if (gram.cols() != n || n % 2 != 0) throw InvalidInput("build_symplectic_basis: need even square form");
    for (int i = 0; i < n; ++i) {
        if (gram.at(i, i) != 0) throw InvalidInput("build_symplectic_basis: form not alternating");
        for (int j = 0; j < n; ++j)
            if ((gram.at(i, j) + gram.at(j, i)) % p != 0)
                throw InvalidInput("build_symplectic_basis: form not antisymmetric");
    }
    auto form = [&](const GfVector& x, const GfVector& y) {
        int s = 0;
        for (int i = 0; i < n; ++i) {
            if (x.get(i) == 0) continue;
            for (int j = 0; j < n; ++j) s += x.get(i) * gram.at(i, j) * y.get(j);
        }
        s %= p;
        return s < 0 ? s + p : s;
    };
    // Symplectic Gram-Schmidt: peel one hyperbolic pair at a time off a
    // complement spanned by the remaining candidate vectors.
    std::vector<GfVector> pool;
    for (int i = 0; i < n; ++i) {
        GfVector e(p, n);
        e.set(i, 1);
        pool.push_back(e);
    }
    std::vector<GfVector> basis;
    while (!pool.empty()) {
        // First nonzero candidate.
        size_t i1 = 0;
        while (i1 < pool.size() && pool[i1].is_zero()) ++i1;
        if (i1 == pool.size()) break;
        GfVector v1 = pool[i1];
        size_t i2 = pool.size();
        for (size_t k = 0; k < pool.size(); ++k) {
            if (k == i1) continue;
            if (form(v1, pool[k]) != 0) { i2 = k; break; }
        }
        if (i2 == pool.size()) throw InvalidInput("build_symplectic_basis: degenerate form");
        GfVector v2 = pool[i2].scaled(mod_inverse(form(v1, pool[i2]), p));
        basis.push_back(v1);
        basis.push_back(v2);
        std::vector<GfVector> next;
        for (size_t k = 0; k < pool.size(); ++k) {
            if (k == i1 || k == i2) continue;
            const GfVector& w = pool[k];
            GfVector adj = w - v1.scaled(form(w, v2)) + v2.scaled(form(w, v1));
            next.push_back(adj);
        }
        pool = std::move(next);
    }
    if (int(basis.size()) != n) throw InvalidInput("build_symplectic_basis: degenerate form");
    GfMatrix t(p, n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) t.set(r, c, basis[size_t(c)].get(r));
    // Postcondition is checked exactly.
    SymplecticSpace canon(p, n / 2);
    if (!(t.transposed() * gram * t == canon.form_matrix()))
        throw InvalidInput("build_symplectic_basis: postcondition failed");
    return t;
}

std::vector<Subspace> enumerate_lagrangians(const SymplecticSpace& space) {
    if (space.domain_size() > (1u << 16))
        throw LimitExceeded("enumerate_lagrangians: configured cap exceeded");
    const int p = space.p, n = space.dim();
    GfMatrix f = space.form_matrix();
    auto dom = space.domain();
    // Orderly generation: grow totally orthogonal subspaces one dimension at a
    // time, choosing next vectors from S^perp \ S, deduping canonically per level.
    std::vector<Subspace> frontier{Subspace(p, n)};
    for (int level = 0; level < space.J; ++level) {
        std::vector<Subspace> next;
        std::unordered_set<std::string> seen;
        for (const auto& s : frontier) {
            Subspace perp = orthogonal_complement(s, f);
            for (const auto& v : perp.elements()) {
                if (s.contains(v)) continue;
                Subspace grown = s.extended(v);
                if (seen.insert(grown.key()).second) next.push_back(grown);
            }
        }
        frontier = std::move(next);
    }
    std::sort(frontier.begin(), frontier.end());
    return frontier;
}

std::vector<AffineSubspace> enumerate_affine_lagrangians(const SymplecticSpace& space) {
    auto lagrangians = enumerate_lagrangians(space);
    std::vector<AffineSubspace> out;
    for (const auto& lag : lagrangians) {
        // Reps are exactly the vectors supported on the non-pivot coordinates.
        std::vector<bool> is_pivot(size_t(space.dim()), false);
        for (int piv : lag.pivots()) is_pivot[size_t(piv)] = true;
        std::vector<int> free_cols;
        for (int c = 0; c < space.dim(); ++c)
            if (!is_pivot[size_t(c)]) free_cols.push_back(c);
        uint64_t total = 1;
        for (size_t i = 0; i < free_cols.size(); ++i) total *= uint64_t(space.p);
        for (uint64_t m = 0; m < total; ++m) {
            GfVector rep(space.p, space.dim());
            uint64_t t = m;
            for (int c : free_cols) {
                rep.set(c, int(t % uint64_t(space.p)));
                t /= uint64_t(space.p);
            }
            out.push_back(AffineSubspace{rep, lag});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// F_{p^deg} arithmetic with elements as base-p coefficient codes, c_0 lowest.
struct ExtField {
    int p, deg;
    std::vector<int> modulus;  // monic, length deg+1, coefficients of x^0..x^deg

    uint64_t size() const {
        uint64_t s = 1;
        for (int i = 0; i < deg; ++i) s *= uint64_t(p);
        return s;
    }
    int coeff(uint64_t code, int i) const {
        for (int k = 0; k < i; ++k) code /= uint64_t(p);
        return int(code % uint64_t(p));
    }
    uint64_t mul(uint64_t a, uint64_t b) const {
        std::vector<int> prod(size_t(2 * deg - 1), 0);
        for (int i = 0; i < deg; ++i) {
            int ai = coeff(a, i);
            if (!ai) continue;
            for (int j = 0; j < deg; ++j) prod[size_t(i + j)] += ai * coeff(b, j);
        }
        for (int d = 2 * deg - 2; d >= deg; --d) {
            int c = prod[size_t(d)] % p;
            if (!c) continue;
            for (int j = 0; j < deg; ++j)
                prod[size_t(d - deg + j)] -= c * modulus[size_t(j)];
            prod[size_t(d)] = 0;
        }
        uint64_t out = 0;
        for (int i = deg - 1; i >= 0; --i) {
            int c = prod[size_t(i)] % p;
            if (c < 0) c += p;
            out = out * uint64_t(p) + uint64_t(c);
        }
        return out;
    }
};

ExtField make_field(int p, int J) {
    if (J == 1) return ExtField{p, 1, {0, 1}};
    if (p == 2 && J == 2) return ExtField{2, 2, {1, 1, 1}};
    if (p == 2 && J == 3) return ExtField{2, 3, {1, 1, 0, 1}};
    if (p == 2 && J == 4) return ExtField{2, 4, {1, 1, 0, 0, 1}};
    throw LimitExceeded("lagrangian_spread: unsupported (p, J)");
}

}  // namespace

LagrangianSpread lagrangian_spread(const SymplecticSpace& space) {
    const int p = space.p, J = space.J, n = space.dim();
    ExtField field = make_field(p, J);
    const uint64_t q = field.size();
    // Interleave (X, Y) in F_q^2 into F_p^{2J}: coordinate 2j-1 carries the
    // alpha^{j-1} coefficient of X, coordinate 2j that of Y.
    auto embed = [&](uint64_t x, uint64_t y) {
        GfVector v(p, n);
        for (int j = 0; j < J; ++j) {
            v.set(2 * j, field.coeff(x, j));
            v.set(2 * j + 1, field.coeff(y, j));
        }
        return v;
    };
    // Pulled-back form B'(u, v) = L(X_u Y_v - X_v Y_u), L = coefficient of 1.
    // Standard basis vector e_{i+1} corresponds to (X, Y) with a single
    // alpha^{i/2} coefficient in X (i even) or Y (i odd).
    auto basis_xy = [&](int i) {
        uint64_t unit = 1;
        for (int k = 0; k < i / 2; ++k) unit *= uint64_t(p);
        return std::pair<uint64_t, uint64_t>{i % 2 == 0 ? unit : 0, i % 2 == 0 ? 0 : unit};
    };
    GfMatrix pulled(p, n, n);
    for (int i = 0; i < n; ++i) {
        auto [xi, yi] = basis_xy(i);
        for (int jj = 0; jj < n; ++jj) {
            auto [xj, yj] = basis_xy(jj);
            uint64_t a = field.mul(xi, yj);
            uint64_t b = field.mul(xj, yi);
            pulled.set(i, jj, field.coeff(a, 0) - field.coeff(b, 0));
        }
    }
    GfMatrix t = build_symplectic_basis(pulled);
    GfMatrix tinv = t.inverse();
    // The q + 1 lines of F_q^2 are Lagrangian for the pulled-back form; push
    // them through T^{-1} to get canonical-form Lagrangians.
    std::vector<Subspace> members;
    auto push_line = [&](uint64_t x0, uint64_t y0) {
        std::vector<GfVector> pts;
        for (uint64_t c = 0; c < q; ++c)
            pts.push_back(tinv.apply(embed(field.mul(c, x0), field.mul(c, y0))));
        members.push_back(Subspace::span(p, n, pts));
    };
    for (uint64_t slope = 0; slope < q; ++slope) push_line(1, slope);
    push_line(0, 1);

    // Verify the spread property exactly: Lagrangian members, pairwise meeting
    // only in 0, covering every nonzero vector once.
    GfMatrix f = space.form_matrix();
    std::vector<char> covered(size_t(space.domain_size()), 0);
    for (const auto& m : members) {
        if (m.rank() != J) throw InvalidInput("lagrangian_spread: member has wrong dimension");
        if (!(orthogonal_complement(m, f) == m))
            throw InvalidInput("lagrangian_spread: member not Lagrangian");
        for (const auto& v : m.elements()) {
            if (v.is_zero()) continue;
            if (covered[size_t(v.lex_rank())]++)
                throw InvalidInput("lagrangian_spread: members overlap");
        }
    }
    for (uint64_t r = 1; r < space.domain_size(); ++r)
        if (!covered[size_t(r)]) throw InvalidInput("lagrangian_spread: nonzero vector uncovered");
    std::sort(members.begin(), members.end());
    return LagrangianSpread{std::move(members), tinv};
}

long long sp_order(const SymplecticSpace& space) {
    long long order = 1;
    long long p2 = (long long)space.p * space.p;
    long long p2j = 1;   // p^{2j}
    long long podd = 1;  // p^{2j-1}
    for (int j = 1; j <= space.J; ++j) {
        p2j = (j == 1) ? p2 : p2j * p2;
        podd = p2j / space.p;
        order *= podd * (p2j - 1);
    }
    return order;
}

long long sp_count_bruteforce(const SymplecticSpace& space) {
    const int n = space.dim();
    if (n > 4) throw LimitExceeded("sp_count_bruteforce: restricted to 2J <= 4");
    const int p = space.p;
    uint64_t cells = 1;
    for (int i = 0; i < n * n; ++i) cells *= uint64_t(p);
    long long count = 0;
    for (uint64_t code = 0; code < cells; ++code) {
        GfMatrix a(p, n, n);
        uint64_t t = code;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                a.set(r, c, int(t % uint64_t(p)));
                t /= uint64_t(p);
            }
        if (is_symplectic_map(space, a)) ++count;
    }
    return count;
}

}  // namespace binderlab
