#pragma once

#include "orthofix/space.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace orthofix {

enum class OrthoVerdict { o_set, ow_set_only, neither };

std::string_view verdict_name(OrthoVerdict v);

struct OrthoClassification {
    std::vector<Index> strong_elements; ///< x0 with (∀y: x0 ⊥ y) or (∀y: y ⊥ x0)
    std::vector<Index> weak_elements;   ///< x0 with ∀y: (x0 ⊥ y or y ⊥ x0)
    OrthoVerdict verdict = OrthoVerdict::neither;
};

struct SequenceCheck {
    bool ok = true;
    /// Least n such that x_n and x_{n+1} are not orthogonally related.
    std::optional<std::size_t> first_violation;
};

struct PreservationReport {
    bool preserving = true;
    /// Relation pairs (in stored orientation) whose images are not orthogonally related.
    std::vector<IndexPair> violations;
};

/// The orbit x, Tx, T^2x, ... split into a tail-free prefix and the cycle it
/// eventually repeats.
struct OrbitInfo {
    std::vector<Index> prefix;
    std::vector<Index> cycle;
    bool enters_fixed_point = false;

    /// The n-th iterate T^n(start), read off prefix and cycle.
    [[nodiscard]] Index at(std::size_t n) const;

    friend bool operator==(const OrbitInfo&, const OrbitInfo&) = default;
};

// Results enumerate indices in point order.
std::vector<Index> strong_orthogonal_elements(const Relation& rel);
std::vector<Index> weak_orthogonal_elements(const Relation& rel);
OrthoClassification classify_orthogonality(const Relation& rel);

/// Throws InputError for an empty sequence or an out-of-range index.
SequenceCheck is_ow_sequence(const Relation& rel, std::span<const Index> seq);

/// Sequence check against an arbitrary orthogonality predicate, for sequences
/// that do not live in a finite space.
template <class T, class Related>
SequenceCheck is_ow_sequence(std::span<const T> seq, Related&& related)
{
    if (seq.empty()) {
        throw InputError("empty sequence");
    }
    for (std::size_t n = 0; n + 1 < seq.size(); ++n) {
        if (!(related(seq[n], seq[n + 1]) || related(seq[n + 1], seq[n]))) {
            return {false, n};
        }
    }
    return {};
}

PreservationReport is_ow_preserving(const Relation& rel, const SelfMap& map);
OrbitInfo orbit(const SelfMap& map, Index start);

template <class Scalar>
std::vector<Index> strong_orthogonal_elements(const BasicFiniteSpace<Scalar>& space)
{
    return strong_orthogonal_elements(space.relation());
}

template <class Scalar>
std::vector<Index> weak_orthogonal_elements(const BasicFiniteSpace<Scalar>& space)
{
    return weak_orthogonal_elements(space.relation());
}

template <class Scalar>
OrthoClassification classify_orthogonality(const BasicFiniteSpace<Scalar>& space)
{
    return classify_orthogonality(space.relation());
}

template <class Scalar>
SequenceCheck is_ow_sequence(const BasicFiniteSpace<Scalar>& space, std::span<const Index> seq)
{
    return is_ow_sequence(space.relation(), seq);
}

template <class Scalar>
PreservationReport is_ow_preserving(const BasicFiniteSpace<Scalar>& space, const SelfMap& map)
{
    require_compatible(space, map);
    return is_ow_preserving(space.relation(), map);
}

template <class Scalar>
OrbitInfo orbit(const BasicFiniteSpace<Scalar>& space, const SelfMap& map, Index start)
{
    require_compatible(space, map);
    space.require_index(start);
    return orbit(map, start);
}

} // namespace orthofix
