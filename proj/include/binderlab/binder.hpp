#pragma once

// Binder enumeration: structure-aware enumerators for each characterized
// family and a generic anchored backtracking search over any exact Gram, with
// cross-validation between the two.

#include "binderlab/design.hpp"
#include "binderlab/gram.hpp"

#include <string>
#include <vector>

namespace binderlab {

enum class BinderMethod { Structural, Generic };

struct BinderResult {
    std::string source;                    // family name or "gram"
    std::vector<std::string> labels;       // vertex labels, lex order
    std::vector<std::vector<int>> blocks;  // sorted member lists, lex-sorted list
    BinderMethod method = BinderMethod::Structural;
    double elapsed_seconds = 0.0;

    IncidenceStructure incidence() const;
    std::vector<std::vector<GfVector>> blocks_as_vectors(int p) const;
};

// Anchored backtracking over the triple-product compatibility relation: for
// each anchor (the block minimum), grow cliques in the graph
// {(i, j) : TP(anchor, i, j) = -1}. Requires a tight Gram.
BinderResult binder_generic(const ExactGram& g, int threads = 1,
                            long long node_budget = 2000000000);

BinderResult binder_symplectic(int p, int J);
BinderResult binder_dual_symplectic(int p, int J);

BinderResult binder_family(FamilyTag tag, int J, const std::vector<GfVector>& d,
                           int threads = 1);
BinderResult binder_family(FamilyTag tag, int J, int threads = 1);  // default D

// Every block must pass is_simplex on the Gram; throws otherwise.
void verify_blocks(const BinderResult& result, const ExactGram& g);

struct PairExtensionResult {
    long long count = 0;
    std::vector<std::vector<GfVector>> blocks;      // witness blocks containing the pair
    std::vector<std::vector<GfVector>> extensions;  // blocks with the pair removed
};

// Number of binder blocks containing both members of the pair, with witness
// sets. For PsiDHat this runs the quadric-restricted clique search; d
// defaults to the quadric of Q_{J,+} (which contains the documented pairs).
PairExtensionResult pair_extension_count(FamilyTag tag, int J, const GfVector& v1,
                                         const GfVector& v2,
                                         const std::vector<GfVector>* d = nullptr);

struct MaxNonorthogonalSet {
    int size = 0;
    std::vector<GfVector> witness;
};

// Maximum cardinality of S in F_2^{2J} with B(v1, v2) = 1 for all distinct
// members; always <= 2J + 1. Exact search, J <= 4.
MaxNonorthogonalSet max_nonorthogonal_set(int J);

}  // namespace binderlab
