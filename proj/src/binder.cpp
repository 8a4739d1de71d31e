#include "binderlab/binder.hpp"

#include "binderlab/quadratic.hpp"
#include "binderlab/symplectic.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <thread>

namespace binderlab {

IncidenceStructure BinderResult::incidence() const {
    IncidenceStructure inc;
    inc.v = int(labels.size());
    inc.blocks = blocks;
    inc.labels = labels;
    return inc;
}

std::vector<std::vector<GfVector>> BinderResult::blocks_as_vectors(int p) const {
    std::vector<std::vector<GfVector>> out;
    for (const auto& blk : blocks) {
        std::vector<GfVector> set;
        for (int m : blk) set.push_back(GfVector::parse(p, labels[size_t(m)]));
        out.push_back(std::move(set));
    }
    return out;
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

// Fixed-capacity bitset over vertex ids (n <= 4096 in practice).
struct Mask {
    std::vector<uint64_t> w;
    explicit Mask(int n = 0) : w(size_t((n + 63) / 64), 0) {}
    void set(int i) { w[size_t(i >> 6)] |= uint64_t(1) << (i & 63); }
    bool test(int i) const { return (w[size_t(i >> 6)] >> (i & 63)) & 1; }
    int count() const {
        int c = 0;
        for (uint64_t x : w) c += std::popcount(x);
        return c;
    }
    void and_with(const Mask& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    }
    template <typename F>
    void for_each(F f) const {
        for (size_t i = 0; i < w.size(); ++i) {
            uint64_t x = w[i];
            while (x) {
                int b = std::countr_zero(x);
                f(int(i * 64) + b);
                x &= x - 1;
            }
        }
    }
};

// All cliques of exactly `need` vertices per anchor, where compat(a, i, j)
// defines the anchor's compatibility graph on vertices > a. Blocks come out
// as {anchor} + clique, globally sorted.
std::vector<std::vector<int>> anchored_clique_blocks(
    int n, int need, const std::function<bool(int, int, int)>& compat, int threads,
    long long node_budget) {
    std::vector<std::vector<std::vector<int>>> per_anchor{size_t(n)};
    std::atomic<long long> nodes{0};
    std::atomic<bool> over{false};

    auto run_anchor = [&](int a) {
        std::vector<std::vector<int>> found;
        std::vector<int> cand;
        for (int i = a + 1; i < n; ++i) cand.push_back(i);
        if (int(cand.size()) < need) {
            if (need == 0) found.push_back({a});
            per_anchor[size_t(a)] = std::move(found);
            return;
        }
        // Adjacency among candidates, indexed by position in cand.
        const int m = int(cand.size());
        std::vector<Mask> adj(size_t(m), Mask{m});
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (compat(a, cand[size_t(i)], cand[size_t(j)])) {
                    adj[size_t(i)].set(j);
                    adj[size_t(j)].set(i);
                }
        std::vector<int> cur;
        std::function<void(const Mask&, int)> extend = [&](const Mask& avail, int still) {
            if (nodes.fetch_add(1) > node_budget) {
                over = true;
                return;
            }
            if (over) return;
            if (still == 0) {
                std::vector<int> blk{a};
                for (int pos : cur) blk.push_back(cand[size_t(pos)]);
                found.push_back(std::move(blk));
                return;
            }
            if (avail.count() < still) return;
            avail.for_each([&](int v) {
                if (over) return;
                Mask next = avail;
                // only vertices after v remain, ascending enumeration
                for (int i = 0; i <= v; ++i)
                    if (next.test(i)) next.w[size_t(i >> 6)] &= ~(uint64_t(1) << (i & 63));
                next.and_with(adj[size_t(v)]);
                cur.push_back(v);
                extend(next, still - 1);
                cur.pop_back();
            });
        };
        Mask all(m);
        for (int i = 0; i < m; ++i) all.set(i);
        extend(all, need);
        std::sort(found.begin(), found.end());
        per_anchor[size_t(a)] = std::move(found);
    };

    if (threads <= 1) {
        for (int a = 0; a < n; ++a) run_anchor(a);
    } else {
        std::atomic<int> next_anchor{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                while (true) {
                    int a = next_anchor.fetch_add(1);
                    if (a >= n) break;
                    run_anchor(a);
                }
            });
        for (auto& t : pool) t.join();
    }
    if (over) throw BudgetExceeded("binder search budget exceeded after " +
                                   std::to_string(nodes.load()) + " nodes");
    std::vector<std::vector<int>> blocks;
    for (auto& chunk : per_anchor)
        for (auto& blk : chunk) blocks.push_back(std::move(blk));
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

std::vector<GfVector> sorted_domain(int p, int J) {
    return SymplecticSpace(p, J).domain();
}

std::vector<std::string> labels_of(const std::vector<GfVector>& verts) {
    std::vector<std::string> out;
    for (const auto& v : verts) out.push_back(v.render());
    return out;
}

std::vector<int> as_index_block(const std::vector<GfVector>& set,
                                const std::map<std::string, int>& index) {
    std::vector<int> blk;
    for (const auto& v : set) blk.push_back(index.at(v.render()));
    std::sort(blk.begin(), blk.end());
    return blk;
}

std::map<std::string, int> index_of(const std::vector<GfVector>& verts) {
    std::map<std::string, int> idx;
    for (size_t i = 0; i < verts.size(); ++i) idx[verts[i].render()] = int(i);
    return idx;
}

}  // namespace

BinderResult binder_generic(const ExactGram& g, int threads, long long node_budget) {
    Timer timer;
    BinderResult out;
    out.source = "gram";
    out.method = BinderMethod::Generic;
    out.labels = g.labels;
    GramAnalysis an;
    if (g.analysis) {
        an = *g.analysis;
    } else {
        ExactGram copy = g;
        copy.finalize();
        an = *copy.analysis;
    }
    if (!an.tight) throw InvalidInput("binder_generic: Gram is not tight");
    if (!an.welch_integer || an.welch_s != g.diag)
        throw InvalidInput("binder_generic: Welch bound inconsistent with the normalization");
    const int need = int(g.diag);  // block size S + 1 = diag + 1, anchor included
    out.blocks = anchored_clique_blocks(
        g.n, need,
        [&](int a, int i, int j) { return triple_product(g, a, i, j).is_minus_one(); }, threads,
        node_budget);
    out.elapsed_seconds = timer.seconds();
    return out;
}

BinderResult binder_symplectic(int p, int J) {
    Timer timer;
    SymplecticSpace sp(p, J);
    BinderResult out;
    out.source = family_name(FamilyTag::Phi);
    out.method = BinderMethod::Structural;
    out.labels = labels_of(sorted_domain(p, J));
    if (p > 2 || J > 2) {
        out.elapsed_seconds = timer.seconds();
        return out;  // empty by the classification
    }
    if (J == 1) {
        out.blocks.push_back({0, 1, 2, 3});
        out.elapsed_seconds = timer.seconds();
        return out;
    }
    // J = 2: the 16 translates of the quadric of the canonical negative form.
    Quadric neg = quadric(QuadraticForm::canonical(2, -1));
    for (uint64_t r = 0; r < 16; ++r) {
        GfVector t = GfVector::from_lex_rank(2, 4, r);
        std::vector<GfVector> shifted;
        for (const auto& pnt : neg.points) shifted.push_back(pnt + t);
        std::sort(shifted.begin(), shifted.end());
        if (!is_affine_quadric(2, shifted))
            throw InvalidInput("binder_symplectic: block is not an affine quadric");
        std::vector<int> blk;
        for (const auto& v : shifted) blk.push_back(int(v.lex_rank()));
        out.blocks.push_back(std::move(blk));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    out.elapsed_seconds = timer.seconds();
    return out;
}

namespace {

long long lagrangian_count_formula(int p, int J) {
    long long c = 1, pj = 1;
    for (int j = 1; j <= J; ++j) {
        pj *= p;
        c *= pj + 1;
    }
    return c;
}

}  // namespace

BinderResult binder_dual_symplectic(int p, int J) {
    Timer timer;
    SymplecticSpace sp(p, J);
    BinderResult out;
    out.source = family_name(FamilyTag::Psi);
    out.method = BinderMethod::Structural;
    out.labels = labels_of(sorted_domain(p, J));
    auto cosets = enumerate_affine_lagrangians(sp);
    for (const auto& coset : cosets) {
        std::vector<int> blk;
        for (const auto& v : coset.elements()) blk.push_back(int(v.lex_rank()));
        out.blocks.push_back(std::move(blk));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    // The BIBD parameters are pinned by the classification; verify them.
    BibdCheck chk = verify_bibd(out.incidence());
    long long pj = 1;
    for (int i = 0; i < J; ++i) pj *= p;
    long long r = lagrangian_count_formula(p, J);
    BibdParams want{(long long)sp.domain_size(), pj, r / (pj + 1), r, pj * r};
    if (!chk.ok || !(chk.params == want))
        throw InvalidInput("binder_dual_symplectic: BIBD parameters do not match");
    out.elapsed_seconds = timer.seconds();
    return out;
}

BinderResult binder_family(FamilyTag tag, int J, int threads) {
    return binder_family(tag, J, default_affine_quadric(J), threads);
}

BinderResult binder_family(FamilyTag tag, int J, const std::vector<GfVector>& d_in, int threads) {
    if (tag == FamilyTag::Phi) return binder_symplectic(2, J);
    if (tag == FamilyTag::Psi) return binder_dual_symplectic(2, J);
    Timer timer;
    if (J < 2) throw InvalidInput("binder_family: sub-families require J >= 2");
    std::vector<GfVector> d = d_in;
    std::sort(d.begin(), d.end());
    long long want = (1ll << (J - 1)) * ((1ll << J) + 1);
    if ((long long)d.size() != want || !is_affine_quadric(J, d))
        throw InvalidInput("binder_family: invalid D");
    SymplecticSpace sp(2, J);
    std::vector<char> in_d(size_t(sp.domain_size()), 0);
    for (const auto& pnt : d) in_d[size_t(pnt.lex_rank())] = 1;
    std::vector<GfVector> dc;
    for (uint64_t r = 0; r < sp.domain_size(); ++r)
        if (!in_d[size_t(r)]) dc.push_back(GfVector::from_lex_rank(2, 2 * J, r));

    BinderResult out;
    out.source = family_name(tag);
    out.method = BinderMethod::Structural;

    if (tag == FamilyTag::PhiDc) {
        out.labels = labels_of(dc);
        if (J == 2) {
            std::vector<int> blk(dc.size());
            for (size_t i = 0; i < dc.size(); ++i) blk[i] = int(i);
            out.blocks.push_back(std::move(blk));
        }
        out.elapsed_seconds = timer.seconds();
        return out;
    }

    if (tag == FamilyTag::PsiD || tag == FamilyTag::PhiDcHat) {
        auto cosets = enumerate_affine_lagrangians(sp);
        if (tag == FamilyTag::PsiD) {
            out.labels = labels_of(d);
            auto idx = index_of(d);
            std::map<std::string, int> per_lagrangian;
            for (const auto& coset : cosets) {
                auto elems = coset.elements();
                bool inside = std::all_of(elems.begin(), elems.end(), [&](const GfVector& v) {
                    return in_d[size_t(v.lex_rank())];
                });
                if (!inside) continue;
                ++per_lagrangian[coset.space.key()];
                out.blocks.push_back(as_index_block(elems, idx));
            }
            // Exactly one coset of every Lagrangian lies in D.
            if (per_lagrangian.size() * 1 != size_t(lagrangian_count_formula(2, J)))
                throw InvalidInput("binder_family: PsiD coset count mismatch");
            for (const auto& [key, cnt] : per_lagrangian)
                if (cnt != 1) throw InvalidInput("binder_family: Lagrangian with multiple cosets in D");
        } else {
            out.labels = labels_of(dc);
            auto idx = index_of(dc);
            std::map<std::vector<int>, int> multiplicity;
            for (const auto& coset : cosets) {
                std::vector<GfVector> part;
                for (const auto& v : coset.elements())
                    if (!in_d[size_t(v.lex_rank())]) part.push_back(v);
                if (part.empty()) continue;  // coset inside D
                if ((long long)part.size() != (1ll << (J - 1)))
                    throw InvalidInput("binder_family: straddling coset not split in half");
                ++multiplicity[as_index_block(part, idx)];
            }
            for (const auto& [blk, cnt] : multiplicity) {
                if (cnt != 3)
                    throw InvalidInput("binder_family: D^c component without threefold extension");
                out.blocks.push_back(blk);
            }
        }
        std::sort(out.blocks.begin(), out.blocks.end());
        out.elapsed_seconds = timer.seconds();
        return out;
    }

    // PsiDHat: translates v + ({0} u S) inside D with S pairwise-nonorthogonal
    // of size 2^{J-1} + 1, via minimum-vertex anchored clique search.
    out.labels = labels_of(d);
    if (J > 4) {
        out.elapsed_seconds = timer.seconds();
        return out;
    }
    const int n = int(d.size());
    std::vector<uint64_t> bits(size_t(n), 0);
    for (int i = 0; i < n; ++i) bits[size_t(i)] = d[size_t(i)].bits();
    const int dim = 2 * J;
    auto compat = [&](int a, int i, int j) {
        GfVector vi = GfVector::from_bits(dim, bits[size_t(i)] ^ bits[size_t(a)]);
        GfVector vj = GfVector::from_bits(dim, bits[size_t(j)] ^ bits[size_t(a)]);
        return sp.bform(vi, vj) == 1;
    };
    out.blocks = anchored_clique_blocks(n, (1 << (J - 1)) + 1, compat, threads, 4000000000ll);
    out.elapsed_seconds = timer.seconds();
    return out;
}

void verify_blocks(const BinderResult& result, const ExactGram& g) {
    if (g.labels != result.labels)
        throw InvalidInput("verify_blocks: vertex labels do not match the Gram");
    for (const auto& blk : result.blocks)
        if (!is_simplex(g, blk)) throw InvalidInput("verify_blocks: block fails is_simplex");
}

PairExtensionResult pair_extension_count(FamilyTag tag, int J, const GfVector& v1,
                                         const GfVector& v2, const std::vector<GfVector>* d_opt) {
    if (v1 == v2) throw InvalidInput("pair_extension_count: pair must be distinct");
    std::vector<GfVector> d;
    if (d_opt) {
        d = *d_opt;
        std::sort(d.begin(), d.end());
    } else if (tag == FamilyTag::PsiDHat || tag == FamilyTag::PsiD) {
        d = quadric(QuadraticForm::canonical(J, 1)).points;
    } else {
        d = default_affine_quadric(J);
    }
    PairExtensionResult out;
    auto collect = [&](const std::vector<std::vector<GfVector>>& blocks) {
        for (const auto& blk : blocks) {
            bool has1 = std::find(blk.begin(), blk.end(), v1) != blk.end();
            bool has2 = std::find(blk.begin(), blk.end(), v2) != blk.end();
            if (!has1 || !has2) continue;
            out.blocks.push_back(blk);
            std::vector<GfVector> ext;
            for (const auto& v : blk)
                if (v != v1 && v != v2) ext.push_back(v);
            out.extensions.push_back(std::move(ext));
        }
        out.count = (long long)out.blocks.size();
    };
    if (tag != FamilyTag::PsiDHat) {
        BinderResult res = binder_family(tag, J, d);
        collect(res.blocks_as_vectors(2));
        return out;
    }
    // PsiDHat: quadric-restricted search. Shift the pair to (0, w); blocks are
    // {0, w} u T with T a 2^{J-1}-clique of the nonorthogonality graph on
    // C = {u in D - v1 : B(u, w) = 1}.
    std::vector<char> in_d(size_t(1) << (2 * J), 0);
    for (const auto& pnt : d) in_d[size_t(pnt.lex_rank())] = 1;
    if (!in_d[size_t(v1.lex_rank())] || !in_d[size_t(v2.lex_rank())])
        throw InvalidInput("pair_extension_count: pair must lie in D");
    SymplecticSpace sp(2, J);
    GfVector w = v1 + v2;
    std::vector<GfVector> cands;
    for (const auto& pnt : d) {
        GfVector u = pnt + v1;
        if (u.is_zero() || u == w) continue;
        if (sp.bform(u, w) == 1) cands.push_back(u);
    }
    const int m = int(cands.size());
    std::vector<std::vector<int>> cliques;
    std::vector<int> cur;
    std::function<void(int, int)> extend = [&](int start, int still) {
        if (still == 0) {
            cliques.push_back(cur);
            return;
        }
        for (int i = start; i < m; ++i) {
            bool ok = true;
            for (int c : cur)
                if (sp.bform(cands[size_t(c)], cands[size_t(i)]) != 1) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(i);
            extend(i + 1, still - 1);
            cur.pop_back();
        }
    };
    extend(0, 1 << (J - 1));
    std::vector<std::vector<GfVector>> blocks;
    for (const auto& clique : cliques) {
        std::vector<GfVector> blk{v1, v2};
        for (int c : clique) blk.push_back(cands[size_t(c)] + v1);
        std::sort(blk.begin(), blk.end());
        blocks.push_back(std::move(blk));
    }
    std::sort(blocks.begin(), blocks.end());
    collect(blocks);
    return out;
}

MaxNonorthogonalSet max_nonorthogonal_set(int J) {
    if (J < 1 || J > 4) throw LimitExceeded("max_nonorthogonal_set: J <= 4 required");
    SymplecticSpace sp(2, J);
    const int dim = 2 * J;
    const int n = int(sp.domain_size()) - 1;  // nonzero vectors
    std::vector<uint64_t> vecs;
    for (uint64_t r = 1; r < sp.domain_size(); ++r)
        vecs.push_back(GfVector::from_lex_rank(2, dim, r).bits());
    std::vector<Mask> adj(size_t(n), Mask{n});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            GfVector vi = GfVector::from_bits(dim, vecs[size_t(i)]);
            GfVector vj = GfVector::from_bits(dim, vecs[size_t(j)]);
            if (sp.bform(vi, vj) == 1) {
                adj[size_t(i)].set(j);
                adj[size_t(j)].set(i);
            }
        }
    std::vector<int> best, cur;
    // Plain branch and bound; the 2J+1 ceiling keeps the depth tiny.
    std::function<void(Mask)> grow = [&](Mask avail) {
        if (int(cur.size()) > int(best.size())) best = cur;
        if (int(cur.size()) + avail.count() <= int(best.size())) return;
        avail.for_each([&](int v) {
            Mask next = avail;
            for (int i = 0; i <= v; ++i)
                if (next.test(i)) next.w[size_t(i >> 6)] &= ~(uint64_t(1) << (i & 63));
            next.and_with(adj[size_t(v)]);
            cur.push_back(v);
            grow(next);
            cur.pop_back();
        });
    };
    Mask all(n);
    for (int i = 0; i < n; ++i) all.set(i);
    grow(all);
    MaxNonorthogonalSet out;
    out.size = int(best.size());
    for (int v : best) out.witness.push_back(GfVector::from_bits(dim, vecs[size_t(v)]));
    std::sort(out.witness.begin(), out.witness.end());
    if (out.size > 2 * J + 1)
        throw InvalidInput("max_nonorthogonal_set: classification bound violated");
    return out;
}

}  // namespace binderlab
