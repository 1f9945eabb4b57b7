#pragma once

#include <string>

#include "operlab/criteria.hpp"

namespace operlab {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Differential file schema: {"degree": l, "coefficients": [[re, im], ...], "r_max": r}
// or {"differentials": [ ... ]} for a tuple. Coefficients may also be plain numbers.
std::vector<DiskDifferential> load_differentials(const std::string& path);
std::vector<DiskDifferential> parse_differentials(const std::string& text);

// Expand a possibly-partial tuple to one differential per exponent: entries are
// matched by degree; missing levels become zero differentials.
std::vector<DiskDifferential> align_to_levels(const AlgebraContext& ctx,
                                              std::vector<DiskDifferential> in);

std::string criterion_json(const CriterionReport& r);
std::string grid_report_json(const GridReport& g);
std::string constants_json(const ConstantsReport& rep);
std::string constants_markdown(const ConstantsReport& rep);

// Exponents, r_alpha, the normalized-basis metadata (including the orthogonalization
// choice at repeated exponent levels), and the nonzero c-tensor entries.
std::string principal_json(const AlgebraContext& ctx);

}  // namespace operlab
