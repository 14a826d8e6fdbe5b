#pragma once

#include <vector>

#include "scatspec/term.hpp"

namespace scatspec {

// One step of the finite condensation: the canonical term denoting the
// quotient of the input chain by "the interval between x and y is finite".
// Rejects terms denoting the empty chain.
ChainTerm fin_condense(const ChainTerm& term);

// Number of fin_condense iterations until the term becomes One.
unsigned fc_rank(const ChainTerm& term);

// Hausdorff rank; equals the finite condensation rank on this term class.
unsigned hausdorff_rank(const ChainTerm& term);

// The full iteration trail: canonical input, then each condensation step,
// ending with One. Length is fc_rank + 1.
std::vector<ChainTerm> condensation_steps(const ChainTerm& term);

}  // namespace scatspec
