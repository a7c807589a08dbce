#pragma once

#include "orthofix/contraction.hpp"
#include "orthofix/solver.hpp"
#include "orthofix/space.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace orthofix {

/// Parameters of the randomized theorem audit.
struct GenParams {
    std::uint64_t seed = 0;
    std::size_t min_points = 2;
    std::size_t max_points = 8;  ///< point count is uniform in [min_points, max_points], within [2, 8]
    std::int64_t weight_lo = 1;  ///< edge weights are uniform integers in [weight_lo, weight_hi]
    std::int64_t weight_hi = 10;
    Rat relation_density{1, 2};
    std::size_t trials = 500;          ///< accepted instances to audit
    std::size_t max_map_attempts = 64; ///< candidate maps per space before rejection
    std::size_t draw_factor = 50;      ///< at most draw_factor * trials spaces are drawn

    /// Throws InputError for out-of-range fields.
    void validate() const;
};

/// Seedable generator with platform-independent output: std::mt19937_64
/// (its sequence is fixed by the standard) plus unbiased bounded draws
/// done here rather than through implementation-defined distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);
    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);
    bool coin() { return below(2) == 1; }
    /// True with probability p (p in [0,1], exact for rational p).
    bool chance(const Rat& p);

private:
    std::mt19937_64 engine_;
};

/// splitmix64 finaliser of seed + index; per-draw stream seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Exhaustive scan: exactly the z with T z = z, in point order.
std::vector<Index> brute_force_fixed_points(const FiniteSpace& space, const SelfMap& map);

/// Minimal generalized ⊥-contraction constant computed straight from the
/// metric matrix, independently of the contraction module. None if some
/// related pair has M = 0 < d(Tx,Ty).
std::optional<Rat> brute_force_generalized_k(const FiniteSpace& space, const SelfMap& map);

/// Random metric (shortest-path closure of integer edge weights) and random
/// relation, augmented so that one randomly chosen point is a weak
/// orthogonal element.
FiniteSpace generate_space(const GenParams& params, Rng& rng);
FiniteSpace generate_space(const GenParams& params);

struct MapDraw {
    std::optional<SelfMap> map; ///< none when every attempt was rejected
    std::size_t attempts = 0;
};

/// Generate-and-filter: each candidate sends every point to a random
/// attractor with probability 1/2 and to a uniform point otherwise; the first
/// candidate satisfying all theorem hypotheses is kept.
MapDraw generate_map(const GenParams& params, const FiniteSpace& space, Rng& rng);

/// Independent re-check of a Picard trace's certificates against the metric.
/// Returns a description of the first violated inequality, if any.
std::optional<std::string> audit_trace(const FiniteSpace& space, const PicardTrace& trace);

struct AuditFailure {
    std::size_t draw = 0;
    std::uint64_t seed = 0; ///< stream seed reproducing the instance
    FiniteSpace space;
    SelfMap map;
    std::string discrepancy;
};

struct HierarchyFailure {
    std::size_t draw = 0;
    std::string implication;
    std::optional<IndexPair> witness;
};

struct AuditSummary {
    GenParams params;
    std::size_t trials_run = 0; ///< spaces drawn
    std::size_t hypotheses_satisfied = 0;
    std::size_t rejected = 0;
    std::size_t map_candidates = 0;
    std::size_t conclusion_verified = 0;
    std::size_t traces_checked = 0;
    std::vector<AuditFailure> failures;
    std::vector<HierarchyFailure> hierarchy_failures;
};

/// For every accepted instance: the brute-force fixed-point set is a
/// singleton {z}; Picard from every weak orthogonal element converges to z
/// with all certificates holding; the contraction module's minimal k matches
/// the brute-force oracle; the contraction hierarchy has no failures.
AuditSummary theorem_audit(const GenParams& params);

} // namespace orthofix
