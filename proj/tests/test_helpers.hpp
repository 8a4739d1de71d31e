#pragma once

#include "binderlab/gf.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace binderlab::testing {

inline GfVector v2(const char* digits) { return GfVector::parse(2, digits); }
inline GfVector v3(const char* digits) { return GfVector::parse(3, digits); }

inline std::vector<std::vector<GfVector>> as_sets(const std::vector<Subspace>& spaces) {
    std::vector<std::vector<GfVector>> out;
    for (const auto& s : spaces) out.push_back(s.elements());
    std::sort(out.begin(), out.end());
    return out;
}

inline GfVector random_vector(std::mt19937& rng, int p, int dim) {
    GfVector v(p, dim);
    for (int i = 0; i < dim; ++i) v.set(i, int(rng() % uint32_t(p)));
    return v;
}

}  // namespace binderlab::testing
