#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "infosel/model.hpp"

namespace infosel {

/// Contents of a JSON model file.
struct ModelFile {
  DiscreteNetwork network;
  /// Resolved per-variable costs (missing entries default to 1).
  std::vector<std::int64_t> costs;
  std::optional<std::int64_t> budget;
};

/// Parses the JSON model format. Throws ModelError on malformed input,
/// fractional or non-positive costs, or a network that fails validation.
ModelFile parse_model(std::string_view text);
ModelFile load_model(const std::string& path);

/// Canonical serialization: fixed field order, costs keyed by ascending id,
/// budget only when present. serialize(parse(serialize(m))) == serialize(m).
std::string serialize_model(const ModelFile& model);

/// 64-bit FNV-1a digest of the canonical serialization, as 16 hex digits.
std::string model_digest(const ModelFile& model);

}  // namespace infosel
