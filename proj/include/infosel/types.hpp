#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace infosel {

/// Dense variable index, contiguous 0..n-1 within a network.
using VarId = std::uint32_t;

/// Index into a variable's domain.
using Value = std::uint32_t;

/// Sorted, duplicate-free list of variable ids.
using VarSet = std::vector<VarId>;

// Error taxonomy. Precondition violations on in-process calls use
// std::invalid_argument / std::out_of_range.

/// Malformed or invalid model input.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evidence with zero probability under the model.
class InconsistentEvidence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact computation would exceed its table-size cap.
class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No candidate fits the budget.
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certified run was requested on a model without the structure that
/// makes the certificate valid.
class GuaranteeRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sorts and deduplicates.
VarSet make_set(std::vector<VarId> ids);

bool contains(const VarSet& set, VarId id);
VarSet set_union(const VarSet& a, const VarSet& b);
VarSet set_difference(const VarSet& a, const VarSet& b);
VarSet set_intersection(const VarSet& a, const VarSet& b);
VarSet with(const VarSet& set, VarId id);
bool is_subset(const VarSet& sub, const VarSet& super);

std::string format_set(std::span<const VarId> ids);

}  // namespace infosel
