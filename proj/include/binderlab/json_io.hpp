#pragma once

// JSON wire formats. Vector text format: digit string of length 2J over
// {0,...,p-1}; subspace format: newline-separated basis rows; both used
// verbatim in JSON fields.

#include "binderlab/binder.hpp"
#include "binderlab/design.hpp"
#include "binderlab/gram.hpp"
#include "binderlab/report.hpp"
#include "binderlab/symplectic.hpp"

#include <json.hpp>

namespace binderlab {

using json = nlohmann::json;

json lagrangians_to_json(const std::vector<Subspace>& lagrangians);
json affine_lagrangians_to_json(const std::vector<AffineSubspace>& cosets);
json spread_to_json(const LagrangianSpread& spread);

// {"j":J, "base":"+|-", "shift":"digits"}; quadrics are sorted string arrays.
json quadratic_form_to_json(const QuadraticForm& q);
QuadraticForm quadratic_form_from_json(const json& j);
json quadric_to_json(const Quadric& quad);

// {"n":N, "p":p, "diag":d, "offdiag":[[i,j,eps,k],...]} with i < j.
json gram_to_json(const ExactGram& g);
ExactGram gram_from_json(const json& j);

// Block lists are arrays of arrays of vector strings.
json blocks_to_json(const BinderResult& result);

// {"vertices":[...], "blocks":[[...],...]}.
json incidence_to_json(const IncidenceStructure& inc);
IncidenceStructure incidence_from_json(const json& j);

json report_to_json(int J, const std::vector<ReportRow>& rows);

std::string incidence_matrix_csv(const std::vector<BitRow>& rows);

}  // namespace binderlab
