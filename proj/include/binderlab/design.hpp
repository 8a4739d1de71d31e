#pragma once

// Incidence structures and their verification: BIBD axioms and parameters,
// arcs and ovals, cross-oval intersection histograms, the four-block
// incidence decomposition of the affine-Lagrangian design, and resolvability
// search with exhaustive-none certificates.

#include "binderlab/cyclo.hpp"
#include "binderlab/gf.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace binderlab {

struct IncidenceStructure {
    int v = 0;                              // vertices are 0 .. v-1
    std::vector<std::vector<int>> blocks;   // members sorted ascending; repeats allowed
    std::vector<std::string> labels;        // optional, size v when present

    void sort_blocks();                     // lex on member lists
};

struct BibdParams {
    long long v = 0, k = 0, lambda = 0, r = 0, b = 0;
    bool operator==(const BibdParams& o) const {
        return v == o.v && k == o.k && lambda == o.lambda && r == o.r && b == o.b;
    }
};

struct BibdCheck {
    bool ok = false;
    BibdParams params;
    std::pair<int, int> violating_pair{-1, -1};
};

// Checks X^t X = (R - Lambda) I + Lambda J for integers R, Lambda.
BibdCheck verify_bibd(const IncidenceStructure& inc);

Rat oval_bound(const BibdParams& params);  // (V-1)/(K-1) + 1

// arc iff every block meets the set in <= 2 points; oval iff nonempty and all
// intersections are 0 or 2 (then the cardinality equals the bound, asserted).
struct OvalCheck {
    bool is_arc = false;
    bool is_oval = false;
};
OvalCheck is_oval(const std::vector<int>& set, const IncidenceStructure& inc);

// Histogram of |a meet b| over all block pairs; both structures must share a
// vertex set.
std::map<int, long long> cross_oval_matrix(const IncidenceStructure& a, const IncidenceStructure& b);

using BitRow = std::vector<uint8_t>;

struct DecompositionReport {
    BibdParams full, inside_d, d_complement, d_part;
    bool half_split_ok = false;
    bool multiplicity_three_ok = false;
    bool literal_identity_ok = false;
    bool closed_forms_ok = false;
    // Canonical matrices: columns are D^c vertices then D vertices, each lex;
    // straddling rows first, sorted lex by member list under that column order.
    std::vector<BitRow> x, x_d, x_dc, x_0;
    std::vector<std::string> column_labels;
};

// binder_psi must be the affine-Lagrangian design on F_2^{2J} (labels are the
// vector digit strings); d lists the vertex ids of an affine quadric of size
// 2^{J-1}(2^J+1).
DecompositionReport decompose_incidence(const IncidenceStructure& binder_psi,
                                        const std::vector<int>& d);

struct ResolutionResult {
    bool found = false;
    bool certified_none = false;            // completed search, no partition exists
    std::vector<std::vector<int>> classes;  // block indices per class
};

// Partitions the blocks into class_count equal groups. Group size V/K means
// each group must partition the vertex set (a parallel class); larger group
// sizes require each group to verify as a BIBD on the full vertex set.
ResolutionResult find_resolution(const IncidenceStructure& inc, int class_count,
                                 long long node_budget = 200000000);

}  // namespace binderlab
