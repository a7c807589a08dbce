#pragma once

#include "orthofix/space.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace orthofix {

struct SpaceFile {
    FiniteSpace space;
    std::optional<SelfMap> map;
};

/// Strict parse of the space-definition format:
///
///   { "points":   ["0", "1", ...],
///     "metric":   [["0", "1", ...], ...],   // integers or "p/q" strings
///     "relation": [[0, 0], [1, 0], ...],    // ordered pairs: i ⊥ j
///     "map":      [0, 0, 1, ...] }          // optional
///
/// Unknown keys, decimals, ragged rows, bad indices and non-metric matrices
/// are InputErrors naming the offending field.
SpaceFile parse_space_json(std::string_view text);
SpaceFile parse_space_file(const std::filesystem::path& path);

/// Serialises to the same format (pretty-printed, deterministic).
std::string space_to_json(const FiniteSpace& space, const std::optional<SelfMap>& map);

} // namespace orthofix
