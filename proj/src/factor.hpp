#pragma once

// Dense factors for variable elimination. Internal to the library.

#include <cstdint>
#include <span>
#include <vector>

#include "infosel/model.hpp"

namespace infosel::detail {

/// Table over an ordered variable list; the last variable varies fastest.
struct Factor {
  std::vector<VarId> vars;
  std::vector<std::uint32_t> cards;
  std::vector<double> values;
};

/// The CPT of `child` as a factor over (parents..., child).
Factor cpt_factor(const DiscreteNetwork& network, VarId child);

/// Fixes the evidence variables present in `factor`, dropping them.
Factor reduce(const Factor& factor, const Assignment& evidence);

/// Product of `factors`, marginalized onto `keep` (in that order). Every
/// kept variable must occur in some factor. Throws TooLarge when the output
/// exceeds `cell_cap`.
Factor combine(std::span<const Factor* const> factors, std::span<const VarId> keep,
               std::span<const std::uint32_t> keep_cards, std::size_t cell_cap);

/// Eliminates every variable outside `keep` with a min-degree order (ties on
/// the lowest id), then combines what is left onto `keep`.
Factor eliminate_to(std::vector<Factor> factors, std::span<const VarId> keep,
                    const DiscreteNetwork& network);

}  // namespace infosel::detail
