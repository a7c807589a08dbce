#pragma once

#include "orthofix/contraction.hpp"
#include "orthofix/relational.hpp"
#include "orthofix/space.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace orthofix {

/// Smallest n with k^n/(1-k)·d1 <= eps, found by exact doubling then
/// bisection on n (no logarithms).
///
/// Throws DomainError unless 0 <= k < 1, d1 >= 0 and eps > 0.
std::uint64_t required_iterations(const Rat& k, const Rat& d1, const Rat& eps);

/// k^n/(1-k)·d1, the a-priori bound on d(x_n, x_m) for every m > n.
Rat apriori_bound(const Rat& k, std::uint64_t n, const Rat& d1);

struct PicardOptions {
    /// Contraction constant for the certificates. When absent the minimal
    /// admissible generalized ⊥-contraction constant is used.
    std::optional<Rat> k;
    /// Stop once the a-priori bound drops to eps. When absent only an exact
    /// fixed point or max_iter stops the iteration.
    std::optional<Rat> eps;
    /// Maximum number of applications of the map.
    std::size_t max_iter = 1000;
    /// Accept a start that is not a weak orthogonal element. The resulting
    /// trace is uncertified: the step inequality need not hold along it.
    bool allow_any_start = false;
    /// Skip the check that a supplied k dominates the minimal generalized k.
    bool trust_k = false;
};

enum class StopReason { fixed_point, tolerance, max_iter };

std::string_view stop_reason_name(StopReason r);

struct PicardTrace {
    Index start = 0;
    std::vector<Index> iterates;    ///< x_0 = start, x_{n+1} = T x_n
    std::vector<Rat> step_distances; ///< d(x_n, x_{n+1}), one per iterate
    Rat k;
    std::vector<Rat> apriori_bounds; ///< k^n/(1-k)·d(x_0,x_1), one per iterate
    bool converged = false;
    std::optional<Index> fixed_point;
    bool certified = false;
    StopReason stop = StopReason::max_iter;

    /// Number of map applications that produced a new iterate.
    [[nodiscard]] std::size_t applications() const { return iterates.empty() ? 0 : iterates.size() - 1; }
};

/// Picard iteration x_{n+1} = T x_n with runtime certificates.
///
/// Preconditions (PreconditionError): start is a weak orthogonal element
/// unless allow_any_start; the constant k is admissible for the generalized
/// ⊥-contraction unless trust_k. DomainError for k outside [0,1) or eps <= 0.
/// On a certified trace, a violated step inequality or a-priori bound throws
/// CertificateError.
PicardTrace picard_solve(const FiniteSpace& space, const SelfMap& map, Index start, const PicardOptions& options = {});

/// True iff T z = z.
bool certify_fixed_point(const FiniteSpace& space, const SelfMap& map, Index z);

enum class HypothesisMode { orbital_continuity, o1 };

std::string_view mode_name(HypothesisMode m);
/// Accepts "orbital-continuity" and "O1"/"o1"; throws InputError otherwise.
HypothesisMode parse_mode(std::string_view name);

struct HypothesisReport {
    HypothesisMode mode = HypothesisMode::orbital_continuity;
    bool has_weak_element = false;
    std::vector<Index> weak_elements;
    bool preserving = false;
    std::vector<IndexPair> preservation_violations;
    bool contraction_feasible = false;
    bool contraction_admissible = false;
    std::optional<Rat> minimal_k;
    std::optional<IndexPair> contraction_witness;
    /// Every orbit in a finite space is eventually constant or periodic, so
    /// orbital O_w-completeness and orbital O_w-continuity always hold.
    bool orbital_completeness = true;
    bool orbital_continuity = true;
    bool o1_mode_holds = false;
    /// Weak element whose orbit limit is not orthogonally related to itself.
    std::optional<Index> o1_witness;
    bool all_hold = false;
};

HypothesisReport hypothesis_check(const FiniteSpace& space, const SelfMap& map,
                                  HypothesisMode mode = HypothesisMode::orbital_continuity);

} // namespace orthofix
