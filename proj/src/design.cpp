#include "binderlab/design.hpp"

#include "binderlab/quadratic.hpp"

#include <algorithm>
#include <numeric>

namespace binderlab {

void IncidenceStructure::sort_blocks() { std::sort(blocks.begin(), blocks.end()); }

BibdCheck verify_bibd(const IncidenceStructure& inc) {
    BibdCheck out;
    if (inc.v <= 1 || inc.blocks.empty()) throw InvalidInput("verify_bibd: empty structure");
    size_t k = inc.blocks[0].size();
    if (k < 2) throw InvalidInput("verify_bibd: block size must be >= 2");
    for (const auto& blk : inc.blocks) {
        if (blk.size() != k) throw InvalidInput("verify_bibd: ragged blocks");
        for (int m : blk)
            if (m < 0 || m >= inc.v) throw InvalidInput("verify_bibd: vertex out of range");
        if (!std::is_sorted(blk.begin(), blk.end()) ||
            std::adjacent_find(blk.begin(), blk.end()) != blk.end())
            throw InvalidInput("verify_bibd: block members must be sorted and distinct");
    }
    std::vector<long long> deg(size_t(inc.v), 0);
    std::vector<long long> pair_count(size_t(inc.v) * size_t(inc.v), 0);
    for (const auto& blk : inc.blocks) {
        for (size_t i = 0; i < blk.size(); ++i) {
            ++deg[size_t(blk[i])];
            for (size_t j = i + 1; j < blk.size(); ++j)
                ++pair_count[size_t(blk[i]) * size_t(inc.v) + size_t(blk[j])];
        }
    }
    long long lambda = pair_count[0 * size_t(inc.v) + 1];
    for (int i = 0; i < inc.v; ++i)
        for (int j = i + 1; j < inc.v; ++j)
            if (pair_count[size_t(i) * size_t(inc.v) + size_t(j)] != lambda) {
                out.ok = false;
                out.violating_pair = {i, j};
                return out;
            }
    long long r = deg[0];
    for (int i = 1; i < inc.v; ++i)
        if (deg[size_t(i)] != r) {
            out.ok = false;
            out.violating_pair = {0, i};
            return out;
        }
    out.params = BibdParams{inc.v, (long long)k, lambda, r, (long long)inc.blocks.size()};
    // Consistency identities, asserted independently of the matrix check.
    const auto& pr = out.params;
    if (pr.lambda * (pr.v - 1) != pr.r * (pr.k - 1) || pr.b * pr.k != pr.v * pr.r)
        throw InvalidInput("verify_bibd: parameter identities violated");
    if (!(pr.k == pr.v || pr.v <= pr.b))
        throw InvalidInput("verify_bibd: Fisher condition violated");
    out.ok = true;
    return out;
}

Rat oval_bound(const BibdParams& params) {
    return Rat(params.v - 1, params.k - 1) + Rat::integer(1);
}

OvalCheck is_oval(const std::vector<int>& set, const IncidenceStructure& inc) {
    BibdCheck chk = verify_bibd(inc);
    if (!chk.ok) throw InvalidInput("is_oval: structure is not a BIBD");
    std::vector<char> in_set(size_t(inc.v), 0);
    for (int s : set) in_set[size_t(s)] = 1;
    OvalCheck out;
    out.is_arc = true;
    bool all_02 = true;
    for (const auto& blk : inc.blocks) {
        int meet = 0;
        for (int m : blk) meet += in_set[size_t(m)];
        if (meet > 2) {
            out.is_arc = false;
            all_02 = false;
            break;
        }
        if (meet == 1) all_02 = false;
    }
    out.is_oval = out.is_arc && all_02 && !set.empty();
    if (out.is_oval) {
        Rat bound = oval_bound(chk.params);
        if (Rat::integer((long long)set.size()) != bound)
            throw InvalidInput("is_oval: oval cardinality differs from the bound");
    }
    return out;
}

std::map<int, long long> cross_oval_matrix(const IncidenceStructure& a, const IncidenceStructure& b) {
    if (a.v != b.v) throw InvalidInput("cross_oval_matrix: vertex-set mismatch");
    if (!a.labels.empty() && !b.labels.empty() && a.labels != b.labels)
        throw InvalidInput("cross_oval_matrix: vertex-set mismatch");
    std::map<int, long long> hist;
    std::vector<char> mark(size_t(a.v), 0);
    for (const auto& ba : a.blocks) {
        for (int m : ba) mark[size_t(m)] = 1;
        for (const auto& bb : b.blocks) {
            int meet = 0;
            for (int m : bb) meet += mark[size_t(m)];
            ++hist[meet];
        }
        for (int m : ba) mark[size_t(m)] = 0;
    }
    return hist;
}

namespace {

long long prod_2j_plus_1(int lo, int hi) {
    long long r = 1;
    for (int j = lo; j <= hi; ++j) r *= (1ll << j) + 1;
    return r;
}

IncidenceStructure reindexed(const std::vector<std::vector<int>>& blocks,
                             const std::vector<int>& verts) {
    std::map<int, int> pos;
    for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = int(i);
    IncidenceStructure out;
    out.v = int(verts.size());
    for (const auto& blk : blocks) {
        std::vector<int> nb;
        for (int m : blk) nb.push_back(pos.at(m));
        std::sort(nb.begin(), nb.end());
        out.blocks.push_back(std::move(nb));
    }
    out.sort_blocks();
    return out;
}

}  // namespace

DecompositionReport decompose_incidence(const IncidenceStructure& binder_psi,
                                        const std::vector<int>& d) {
    DecompositionReport rep;
    const int v = binder_psi.v;
    int two_j = 0;
    while ((1 << two_j) < v) ++two_j;
    if ((1 << two_j) != v || two_j % 2 != 0)
        throw InvalidInput("decompose_incidence: vertex count is not 2^{2J}");
    const int big_j = two_j / 2;
    if (binder_psi.labels.size() != size_t(v))
        throw InvalidInput("decompose_incidence: vertex labels required");
    // D must be an affine quadric of size 2^{J-1}(2^J+1).
    std::vector<GfVector> d_pts;
    for (int m : d) d_pts.push_back(GfVector::parse(2, binder_psi.labels[size_t(m)]));
    if ((long long)d.size() != (1ll << (big_j - 1)) * ((1ll << big_j) + 1) ||
        !is_affine_quadric(big_j, d_pts))
        throw InvalidInput("decompose_incidence: malformed D");

    std::vector<char> in_d(size_t(v), 0);
    for (int m : d) in_d[size_t(m)] = 1;

    // Canonical column order: D^c vertices then D vertices, each lex (vertex
    // ids already follow label lex order).
    std::vector<int> cols;
    for (int i = 0; i < v; ++i)
        if (!in_d[size_t(i)]) cols.push_back(i);
    size_t dc_count = cols.size();
    for (int i = 0; i < v; ++i)
        if (in_d[size_t(i)]) cols.push_back(i);
    std::vector<int> col_of(size_t(std::max(v, 0)), 0);
    for (size_t c = 0; c < cols.size(); ++c) col_of[size_t(cols[c])] = int(c);
    for (int i : cols) rep.column_labels.push_back(binder_psi.labels[size_t(i)]);

    // Re-express blocks in column coordinates and split.
    std::vector<std::vector<int>> straddling, inside;
    for (const auto& blk : binder_psi.blocks) {
        std::vector<int> nb;
        for (int m : blk) nb.push_back(col_of[size_t(m)]);
        std::sort(nb.begin(), nb.end());
        bool has_dc = !nb.empty() && size_t(nb[0]) < dc_count;
        (has_dc ? straddling : inside).push_back(std::move(nb));
    }
    std::sort(straddling.begin(), straddling.end());
    std::sort(inside.begin(), inside.end());

    const size_t half = size_t(1) << (big_j - 1);
    rep.half_split_ok = true;
    std::vector<std::vector<int>> dc_parts, d_parts;
    for (const auto& blk : straddling) {
        std::vector<int> dc_part, d_part;
        for (int m : blk) (size_t(m) < dc_count ? dc_part : d_part).push_back(m);
        if (dc_part.size() != half || d_part.size() != half) rep.half_split_ok = false;
        dc_parts.push_back(dc_part);
        d_parts.push_back(d_part);
    }

    // The D^c-components must occur in runs of exactly three; collapsing the
    // multiplicity yields X_{D^c}.
    std::vector<std::vector<int>> dc_distinct;
    rep.multiplicity_three_ok = true;
    for (size_t i = 0; i < dc_parts.size();) {
        size_t j = i;
        while (j < dc_parts.size() && dc_parts[j] == dc_parts[i]) ++j;
        if (j - i != 3) rep.multiplicity_three_ok = false;
        dc_distinct.push_back(dc_parts[i]);
        i = j;
    }

    auto fill_matrix = [](const std::vector<std::vector<int>>& blocks, size_t width,
                          size_t offset) {
        std::vector<BitRow> m;
        for (const auto& blk : blocks) {
            BitRow row(width, 0);
            for (int c : blk) row[size_t(c) - offset] = 1;
            m.push_back(std::move(row));
        }
        return m;
    };
    std::vector<std::vector<int>> all_rows = straddling;
    all_rows.insert(all_rows.end(), inside.begin(), inside.end());
    rep.x = fill_matrix(all_rows, size_t(v), 0);
    rep.x_dc = fill_matrix(dc_distinct, dc_count, 0);
    rep.x_0 = fill_matrix(d_parts, size_t(v) - dc_count, dc_count);
    rep.x_d = fill_matrix(inside, size_t(v) - dc_count, dc_count);

    // Literal identity: X = [[X_{D^c} (x) [1;1;1], X_0], [0, X_D]].
    rep.literal_identity_ok = rep.multiplicity_three_ok && rep.half_split_ok;
    if (rep.literal_identity_ok) {
        for (size_t r = 0; r < straddling.size() && rep.literal_identity_ok; ++r) {
            const BitRow& xr = rep.x[r];
            const BitRow& left = rep.x_dc[r / 3];
            const BitRow& right = rep.x_0[r];
            for (size_t c = 0; c < dc_count; ++c)
                if (xr[c] != left[c]) rep.literal_identity_ok = false;
            for (size_t c = dc_count; c < size_t(v); ++c)
                if (xr[c] != right[c - dc_count]) rep.literal_identity_ok = false;
        }
        for (size_t r = 0; r < inside.size() && rep.literal_identity_ok; ++r) {
            const BitRow& xr = rep.x[straddling.size() + r];
            for (size_t c = 0; c < dc_count; ++c)
                if (xr[c] != 0) rep.literal_identity_ok = false;
            for (size_t c = dc_count; c < size_t(v); ++c)
                if (xr[c] != rep.x_d[r][c - dc_count]) rep.literal_identity_ok = false;
        }
    }

    // Verify the four BIBDs and match the closed-form parameter tuples.
    auto column_range = [&](size_t lo, size_t hi) {
        std::vector<int> verts;
        for (size_t c = lo; c < hi; ++c) verts.push_back(int(c));
        return verts;
    };
    IncidenceStructure full_inc;
    full_inc.v = v;
    full_inc.blocks = all_rows;
    full_inc.sort_blocks();
    rep.full = verify_bibd(full_inc).params;
    rep.inside_d = verify_bibd(reindexed(inside, column_range(dc_count, size_t(v)))).params;
    rep.d_complement = verify_bibd(reindexed(dc_distinct, column_range(0, dc_count))).params;
    rep.d_part = verify_bibd(reindexed(d_parts, column_range(dc_count, size_t(v)))).params;

    const int J = big_j;
    BibdParams want_full{1ll << (2 * J), 1ll << J, prod_2j_plus_1(1, J - 1), prod_2j_plus_1(1, J),
                         (1ll << J) * prod_2j_plus_1(1, J)};
    BibdParams want_d{(1ll << (J - 1)) * ((1ll << J) + 1), 1ll << J, prod_2j_plus_1(0, J - 2),
                      prod_2j_plus_1(0, J - 1), prod_2j_plus_1(1, J)};
    BibdParams want_dc{(1ll << (J - 1)) * ((1ll << J) - 1), 1ll << (J - 1), prod_2j_plus_1(2, J - 1),
                       prod_2j_plus_1(2, J), ((1ll << J) - 1) * prod_2j_plus_1(2, J)};
    BibdParams want_0{(1ll << (J - 1)) * ((1ll << J) + 1), 1ll << (J - 1),
                      ((1ll << (J - 1)) - 1) * prod_2j_plus_1(1, J - 2),
                      ((1ll << J) - 1) * prod_2j_plus_1(1, J - 1),
                      ((1ll << J) - 1) * prod_2j_plus_1(1, J)};
    rep.closed_forms_ok = rep.full == want_full && rep.inside_d == want_d &&
                          rep.d_complement == want_dc && rep.d_part == want_0;
    return rep;
}

namespace {

struct ResolutionSearch {
    const IncidenceStructure& inc;
    int class_count;
    size_t group_size;
    long long budget;
    std::vector<char> used;
    std::vector<std::vector<int>> classes;
    bool parallel_mode;

    ResolutionSearch(const IncidenceStructure& i, int cc, long long b)
        : inc(i), class_count(cc), budget(b) {
        if (cc <= 0 || inc.blocks.size() % size_t(cc) != 0)
            throw InvalidInput("find_resolution: block count not divisible by class count");
        group_size = inc.blocks.size() / size_t(cc);
        size_t k = inc.blocks[0].size();
        parallel_mode = group_size * k == size_t(inc.v);
        used.assign(inc.blocks.size(), 0);
    }

    void tick() {
        if (--budget < 0) throw BudgetExceeded("find_resolution: search budget exceeded");
    }

    // Parallel-class mode: extend the current class to cover every vertex.
    // Branching on the smallest uncovered vertex generates each class once.
    bool extend_class(std::vector<char>& covered, std::vector<int>& cls) {
        tick();
        int missing = -1;
        for (int vtx = 0; vtx < inc.v; ++vtx)
            if (!covered[size_t(vtx)]) { missing = vtx; break; }
        if (missing < 0) return solve_next(cls);
        for (size_t b = 0; b < inc.blocks.size(); ++b) {
            if (used[b]) continue;
            const auto& blk = inc.blocks[b];
            if (!std::binary_search(blk.begin(), blk.end(), missing)) continue;
            bool disjoint = true;
            for (int m : blk)
                if (covered[size_t(m)]) { disjoint = false; break; }
            if (!disjoint) continue;
            used[b] = 1;
            cls.push_back(int(b));
            for (int m : blk) covered[size_t(m)] = 1;
            if (extend_class(covered, cls)) return true;
            for (int m : blk) covered[size_t(m)] = 0;
            cls.pop_back();
            used[b] = 0;
        }
        return false;
    }

    bool solve_next(std::vector<int>& finished_class) {
        classes.push_back(finished_class);
        bool done = solve();
        if (!done) classes.pop_back();
        return done;
    }

    bool solve() {
        size_t first_unused = 0;
        while (first_unused < inc.blocks.size() && used[first_unused]) ++first_unused;
        if (first_unused == inc.blocks.size()) return true;
        if (parallel_mode) {
            std::vector<char> covered(size_t(inc.v), 0);
            std::vector<int> cls;
            used[first_unused] = 1;
            cls.push_back(int(first_unused));
            for (int m : inc.blocks[first_unused]) covered[size_t(m)] = 1;
            bool ok = extend_class(covered, cls);
            if (!ok) used[first_unused] = 0;
            return ok;
        }
        return build_bibd_group();
    }

    // Sub-design mode: each group of group_size blocks must itself be a BIBD;
    // the per-group pair multiplicity is forced by the parameters.
    bool build_bibd_group() {
        size_t k = inc.blocks[0].size();
        long long num = (long long)group_size * (long long)k * (long long)(k - 1);
        long long den = (long long)inc.v * (long long)(inc.v - 1);
        if (num % den != 0) return false;
        long long lambda_part = num / den;
        std::vector<long long> need(size_t(inc.v) * size_t(inc.v), lambda_part);
        std::vector<int> cls;
        return cover_pairs(need, cls);
    }

    // Branches on the smallest pair whose multiplicity is still unmet, so each
    // group is generated canonically (no reordering duplicates at lambda 1).
    bool cover_pairs(std::vector<long long>& need, std::vector<int>& cls) {
        tick();
        if (cls.size() == group_size) {
            for (long long n : need)
                if (n != 0) return false;
            return solve_next(cls);
        }
        int p1 = -1, p2 = -1;
        for (int i = 0; i < inc.v && p1 < 0; ++i)
            for (int j = i + 1; j < inc.v; ++j)
                if (need[size_t(i) * size_t(inc.v) + size_t(j)] > 0) {
                    p1 = i;
                    p2 = j;
                    break;
                }
        if (p1 < 0) return false;  // all pairs met with blocks still to place
        for (size_t b = 0; b < inc.blocks.size(); ++b) {
            if (used[b]) continue;
            const auto& blk = inc.blocks[b];
            if (!std::binary_search(blk.begin(), blk.end(), p1) ||
                !std::binary_search(blk.begin(), blk.end(), p2))
                continue;
            bool fits = true;
            for (size_t i = 0; i < blk.size() && fits; ++i)
                for (size_t j = i + 1; j < blk.size(); ++j)
                    if (need[size_t(blk[i]) * size_t(inc.v) + size_t(blk[j])] == 0) {
                        fits = false;
                        break;
                    }
            if (!fits) continue;
            used[b] = 1;
            cls.push_back(int(b));
            for (size_t i = 0; i < blk.size(); ++i)
                for (size_t j = i + 1; j < blk.size(); ++j)
                    --need[size_t(blk[i]) * size_t(inc.v) + size_t(blk[j])];
            if (cover_pairs(need, cls)) return true;
            for (size_t i = 0; i < blk.size(); ++i)
                for (size_t j = i + 1; j < blk.size(); ++j)
                    ++need[size_t(blk[i]) * size_t(inc.v) + size_t(blk[j])];
            cls.pop_back();
            used[b] = 0;
        }
        return false;
    }
};

}  // namespace

ResolutionResult find_resolution(const IncidenceStructure& inc, int class_count,
                                 long long node_budget) {
    if (inc.blocks.empty()) throw InvalidInput("find_resolution: no blocks");
    ResolutionSearch search(inc, class_count, node_budget);
    ResolutionResult out;
    if (search.solve()) {
        out.found = true;
        out.classes = search.classes;
    } else {
        out.certified_none = true;  // search ran to completion
    }
    return out;
}

}  // namespace binderlab
