#include "binderlab/quadratic.hpp"

#include <algorithm>
#include <bit>

namespace binderlab {

namespace {

uint64_t rank_to_bits(int dim, uint64_t r) {
    // lex rank has coordinate 1 most significant; packed bits put it lowest.
    uint64_t b = 0;
    for (int i = dim - 1; i >= 0; --i) {
        b |= (r & 1u) << i;
        r >>= 1;
    }
    return b;
}

int eval_bits(int J, int base_sign, uint64_t shift_bits, uint64_t vb) {
    const uint64_t even = 0x5555555555555555ull;
    int q = std::popcount(vb & (vb >> 1) & even) & 1;  // sum x(2j-1) x(2j)
    if (base_sign < 0) {
        q ^= int((vb >> (2 * J - 2)) & 1u);
        q ^= int((vb >> (2 * J - 1)) & 1u);
    }
    // + B(shift, v)
    uint64_t sw = ((vb & even) << 1) | ((vb >> 1) & even);
    q ^= std::popcount(shift_bits & sw) & 1;
    return q;
}

}  // namespace

QuadraticForm::QuadraticForm(int J, int base_sign, const GfVector& shift)
    : J_(J), base_sign_(base_sign), shift_(shift) {
    if (J < 1) throw InvalidInput("QuadraticForm: J >= 1 required");
    if (base_sign != 1 && base_sign != -1) throw InvalidInput("QuadraticForm: base sign must be +-1");
    if (shift.p() != 2 || shift.dim() != 2 * J)
        throw DimensionMismatch("QuadraticForm: shift must live in F_2^{2J}");
}

QuadraticForm QuadraticForm::canonical(int J, int sign) {
    return QuadraticForm(J, sign, GfVector(2, 2 * J));
}

int QuadraticForm::eval(const GfVector& v) const {
    if (v.p() != 2 || v.dim() != dim()) throw DimensionMismatch("QuadraticForm::eval");
    return eval_bits(J_, base_sign_, shift_.bits(), v.bits());
}

int QuadraticForm::eval_rank(uint64_t r) const {
    return eval_bits(J_, base_sign_, shift_.bits(), rank_to_bits(dim(), r));
}

bool QuadraticForm::same_form(const QuadraticForm& o) const {
    if (J_ != o.J_) return false;
    uint64_t n = uint64_t(1) << dim();
    for (uint64_t r = 0; r < n; ++r)
        if (eval_rank(r) != o.eval_rank(r)) return false;
    return true;
}

QuadraticForm QuadraticForm::canonicalized() const {
    if (base_sign_ == 1) return *this;
    // Q_{J,-} = Q_{J,+} + B(u, .) with u = e_{2J-1} + e_{2J}.
    GfVector u(2, dim());
    u.set(dim() - 2, 1);
    u.set(dim() - 1, 1);
    QuadraticForm c(J_, 1, shift_ + u);
    return c;
}

int q_eval(const QuadraticForm& q, const GfVector& v) { return q.eval(v); }

Quadric quadric(const QuadraticForm& q) {
    uint64_t n = uint64_t(1) << q.dim();
    std::vector<GfVector> pts;
    for (uint64_t r = 0; r < n; ++r)
        if (q.eval_rank(r) == 0) pts.push_back(GfVector::from_lex_rank(2, q.dim(), r));
    return Quadric{q, std::move(pts)};  // lex ranks ascend, so already sorted
}

int q_sign(const QuadraticForm& q) {
    long long size = (long long)quadric(q).points.size();
    long long half = 1ll << (2 * q.J() - 1);
    long long scale = 1ll << (q.J() - 1);
    long long s = (size - half) / scale;
    if (s != 1 && s != -1) throw InvalidInput("q_sign: quadric size violates the sign law");
    return int(s);
}

std::vector<std::vector<GfVector>> enumerate_affine_quadrics(int J, char size_selector) {
    if (J < 1 || J > 8) throw LimitExceeded("enumerate_affine_quadrics: J cap exceeded");
    if (size_selector != '+' && size_selector != '-')
        throw InvalidInput("enumerate_affine_quadrics: selector must be '+' or '-'");
    Quadric ref = quadric(QuadraticForm::canonical(J, size_selector == '+' ? 1 : -1));
    const int dim = 2 * J;
    uint64_t n = uint64_t(1) << dim;
    std::vector<std::vector<GfVector>> out;
    out.reserve(n);
    for (uint64_t r = 0; r < n; ++r) {
        GfVector t = GfVector::from_lex_rank(2, dim, r);
        std::vector<GfVector> shifted;
        shifted.reserve(ref.points.size());
        for (const auto& pnt : ref.points) shifted.push_back(pnt + t);
        std::sort(shifted.begin(), shifted.end());
        out.push_back(std::move(shifted));
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw InvalidInput("enumerate_affine_quadrics: translates are not distinct");
    return out;
}

bool is_affine_quadric(int J, const std::vector<GfVector>& points) {
    const int dim = 2 * J;
    size_t plus = size_t(1) << (J - 1);
    size_t sz_plus = plus * ((size_t(1) << J) + 1);
    size_t sz_minus = plus * ((size_t(1) << J) - 1);
    if (points.size() != sz_plus && points.size() != sz_minus) return false;
    // Translate so the set contains 0, then test whether the resulting value
    // table is a quadratic form yielding B (polar identity holds everywhere);
    // the size precondition then pins the sign class.
    uint64_t n = uint64_t(1) << dim;
    std::vector<char> member(size_t(n), 0);
    uint64_t t = points[0].bits();
    for (const auto& pnt : points) {
        if (pnt.p() != 2 || pnt.dim() != dim) return false;
        member[size_t(pnt.bits() ^ t)] = 1;
    }
    SymplecticSpace sp(2, J);
    auto val = [&](uint64_t b) { return member[size_t(b)] ? 0 : 1; };
    for (uint64_t x = 0; x < n; ++x)
        for (uint64_t y = x; y < n; ++y) {
            GfVector vx = GfVector::from_bits(dim, x), vy = GfVector::from_bits(dim, y);
            if ((val(x) ^ val(y) ^ val(x ^ y)) != sp.bform(vx, vy)) return false;
        }
    return true;
}

std::vector<GfVector> hyperbolic_basis(const QuadraticForm& q) {
    const int n = q.dim();
    SymplecticSpace sp(2, q.J());
    // Peel hyperbolic pairs greedily, keeping a basis of the running
    // orthogonal complement, as in build_symplectic_basis but preferring
    // singular pair members.
    std::vector<GfVector> pool;
    for (int i = 0; i < n; ++i) {
        GfVector e(2, n);
        e.set(i, 1);
        pool.push_back(e);
    }
    std::vector<GfVector> basis;
    while (pool.size() > 2) {
        // Scan the span of the pool for a singular nonzero v1 (one exists
        // whenever more than one hyperbolic pair remains).
        Subspace cur = Subspace::span(2, n, pool);
        GfVector v1(2, n);
        bool found = false;
        for (const auto& v : cur.elements()) {
            if (!v.is_zero() && q.eval(v) == 0) {
                v1 = v;
                found = true;
                break;
            }
        }
        if (!found) throw InvalidInput("hyperbolic_basis: no singular vector in complement");
        GfVector v2(2, n);
        bool found2 = false;
        for (const auto& v : cur.elements()) {
            if (sp.bform(v1, v) == 1) {
                v2 = v;
                found2 = true;
                break;
            }
        }
        if (!found2) throw InvalidInput("hyperbolic_basis: degenerate restriction");
        if (q.eval(v2) == 1) v2 = v1 + v2;  // Q(v1+v2) = Q(v1)+Q(v2)+B(v1,v2)
        basis.push_back(v1);
        basis.push_back(v2);
        std::vector<GfVector> next;
        for (const auto& w : pool) {
            GfVector adj = w + v1.scaled(sp.bform(w, v2)) + v2.scaled(sp.bform(w, v1));
            if (!adj.is_zero()) next.push_back(adj);
        }
        Subspace reduced = Subspace::span(2, n, next);
        pool = reduced.basis();
    }
    // Final two-dimensional complement: three nonzero vectors, one or three
    // singular; pick a pair with B = 1 matching the sign of the form.
    Subspace last = Subspace::span(2, n, pool);
    auto elems = last.elements();
    std::vector<GfVector> nz;
    for (const auto& v : elems)
        if (!v.is_zero()) nz.push_back(v);
    if (nz.size() != 3) throw InvalidInput("hyperbolic_basis: bad final complement");
    GfVector a(2, n), b(2, n);
    bool picked = false;
    for (size_t i = 0; i < 3 && !picked; ++i)
        for (size_t j = 0; j < 3 && !picked; ++j) {
            if (i == j) continue;
            if (sp.bform(nz[i], nz[j]) != 1) continue;
            if (q.eval(nz[i]) == q.eval(nz[j])) {
                a = nz[i];
                b = nz[j];
                picked = true;
            }
        }
    if (!picked) throw InvalidInput("hyperbolic_basis: no sign-matching final pair");
    basis.push_back(a);
    basis.push_back(b);
    // Verify by direct evaluation.
    GfMatrix t(2, n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) t.set(r, c, basis[size_t(c)].get(r));
    if (!is_symplectic_map(sp, t)) throw InvalidInput("hyperbolic_basis: not a symplectic basis");
    int sign = q_sign(q);
    for (int k = 0; k < n - 2; ++k)
        if (q.eval(basis[size_t(k)]) != 0) throw InvalidInput("hyperbolic_basis: early vector nonsingular");
    int want = sign > 0 ? 0 : 1;
    if (q.eval(basis[size_t(n - 2)]) != want || q.eval(basis[size_t(n - 1)]) != want)
        throw InvalidInput("hyperbolic_basis: final pair does not match sign");
    return basis;
}

GfVector action_shift(const GfMatrix& a, const QuadraticForm& q) {
    SymplecticSpace sp(2, q.J());
    if (!is_symplectic_map(sp, a)) throw InvalidInput("action_shift: matrix not symplectic");
    const int dim = q.dim();
    uint64_t n = uint64_t(1) << dim;
    Quadric quad = quadric(q);
    std::vector<char> in_q(size_t(n), 0);
    for (const auto& pnt : quad.points) in_q[size_t(pnt.bits())] = 1;
    std::vector<uint64_t> image;
    image.reserve(quad.points.size());
    for (const auto& pnt : quad.points) image.push_back(a.apply(pnt).bits());
    GfVector result(2, dim);
    int hits = 0;
    for (const auto& cand : quad.points) {
        uint64_t cb = cand.bits();
        bool ok = true;
        for (uint64_t ib : image)
            if (!in_q[size_t(ib ^ cb)]) { ok = false; break; }
        if (ok) {
            result = cand;
            ++hits;
        }
    }
    if (hits != 1) throw InvalidInput("action_shift: shift not unique");
    // Second characterization, checked exactly: Q(v) = Q(Av + v_A) for all v.
    for (uint64_t r = 0; r < n; ++r) {
        GfVector v = GfVector::from_lex_rank(2, dim, r);
        if (q.eval(v) != q.eval(a.apply(v) + result))
            throw InvalidInput("action_shift: characterizations disagree");
    }
    return result;
}

SingularSplit singular_split(const Subspace& s, const QuadraticForm& q) {
    if (s.p() != 2 || s.dim() != q.dim()) throw DimensionMismatch("singular_split");
    SymplecticSpace sp(2, q.J());
    auto elems = s.elements();
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = i; j < elems.size(); ++j)
            if (sp.bform(elems[i], elems[j]) != 0)
                throw InvalidInput("singular_split: subspace not totally orthogonal");
    std::vector<GfVector> singular;
    for (const auto& v : elems)
        if (q.eval(v) == 0) singular.push_back(v);
    Subspace inter = Subspace::span(2, q.dim(), singular);
    bool halved = singular.size() != elems.size();
    if (size_t(1) << inter.rank() != singular.size())
        throw InvalidInput("singular_split: intersection not a subspace");
    if (halved && 2 * singular.size() != elems.size())
        throw InvalidInput("singular_split: split is not in half");
    return SingularSplit{inter, halved};
}

std::vector<LagrangianExtension> lagrangian_extensions(const Subspace& s, const QuadraticForm& q) {
    const int J = q.J();
    if (s.rank() != J - 1) throw InvalidInput("lagrangian_extensions: need dimension J-1");
    for (const auto& v : s.elements())
        if (q.eval(v) != 0) throw InvalidInput("lagrangian_extensions: subspace not totally singular");
    SymplecticSpace sp(2, J);
    Subspace perp = orthogonal_complement(s, sp.form_matrix());
    // S has exactly three nontrivial cosets in S^perp; each spans one of the
    // three Lagrangians containing S.
    std::vector<LagrangianExtension> out;
    std::vector<std::string> seen;
    for (const auto& v : perp.elements()) {
        if (s.contains(v)) continue;
        Subspace lag = s.extended(v);
        std::string k = lag.key();
        if (std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
        seen.push_back(k);
        bool ts = true;
        for (const auto& w : lag.elements())
            if (q.eval(w) != 0) { ts = false; break; }
        out.push_back(LagrangianExtension{lag, ts});
    }
    if (out.size() != 3) throw InvalidInput("lagrangian_extensions: expected exactly three");
    std::sort(out.begin(), out.end(), [](const LagrangianExtension& x, const LagrangianExtension& y) {
        return x.lagrangian < y.lagrangian;
    });
    return out;
}

AffineSubspace totally_singular_coset(const Subspace& lagrangian, const QuadraticForm& q) {
    if (q_sign(q) != 1) throw InvalidInput("totally_singular_coset: requires sign +1");
    const int J = q.J();
    if (lagrangian.rank() != J) throw InvalidInput("totally_singular_coset: need a Lagrangian");
    SymplecticSpace sp(2, J);
    if (!(orthogonal_complement(lagrangian, sp.form_matrix()) == lagrangian))
        throw InvalidInput("totally_singular_coset: subspace is not Lagrangian");
    uint64_t n = uint64_t(1) << q.dim();
    std::vector<AffineSubspace> found;
    std::vector<char> seen_rep(size_t(n), 0);
    for (uint64_t r = 0; r < n; ++r) {
        GfVector v = GfVector::from_lex_rank(2, q.dim(), r);
        AffineSubspace coset = coset_canonicalize(v, lagrangian);
        uint64_t rep_rank = coset.rep.lex_rank();
        if (seen_rep[size_t(rep_rank)]) continue;
        seen_rep[size_t(rep_rank)] = 1;
        bool ts = true;
        for (const auto& w : coset.elements())
            if (q.eval(w) != 0) { ts = false; break; }
        if (ts) found.push_back(coset);
    }
    if (found.size() != 1) throw InvalidInput("totally_singular_coset: uniqueness failed");
    return found[0];
}

}  // namespace binderlab
