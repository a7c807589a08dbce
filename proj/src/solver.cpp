#include "orthofix/solver.hpp"

#include <algorithm>

namespace orthofix {

namespace {

void require_unit_interval(const Rat& k)
{
    if (k.sign() < 0 || k >= Rat(1)) {
        throw DomainError("contraction constant k = " + k.to_string() + " is outside [0,1)");
    }
}

std::string pair_text(Index i, Index j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

} // namespace

Rat apriori_bound(const Rat& k, std::uint64_t n, const Rat& d1) { return pow(k, n) * d1 / (Rat(1) - k); }

std::uint64_t required_iterations(const Rat& k, const Rat& d1, const Rat& eps)
{
    require_unit_interval(k);
    if (eps.sign() <= 0) {
        throw DomainError("eps = " + eps.to_string() + " must be positive");
    }
    if (d1.sign() < 0) {
        throw DomainError("d1 = " + d1.to_string() + " must be non-negative");
    }
    auto within = [&](std::uint64_t n) { return apriori_bound(k, n, d1) <= eps; };
    if (within(0)) {
        return 0;
    }
    // bound(lo) > eps >= bound(hi)
    std::uint64_t lo = 0;
    std::uint64_t hi = 1;
    while (!within(hi)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (within(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

std::string_view stop_reason_name(StopReason r)
{
    switch (r) {
    case StopReason::fixed_point:
        return "fixed_point";
    case StopReason::tolerance:
        return "tolerance";
    case StopReason::max_iter:
        return "max_iter";
    }
    return "max_iter";
}

PicardTrace picard_solve(const FiniteSpace& space, const SelfMap& map, Index start, const PicardOptions& options)
{
    require_compatible(space, map);
    space.require_index(start);
    if (options.eps && options.eps->sign() <= 0) {
        throw DomainError("eps = " + options.eps->to_string() + " must be positive");
    }

    const auto weak = weak_orthogonal_elements(space);
    const bool start_is_weak = std::find(weak.begin(), weak.end(), start) != weak.end();
    if (!start_is_weak && !options.allow_any_start) {
        throw PreconditionError("start '" + space.label(start) + "' is not a weak orthogonal element");
    }

    PicardTrace trace;
    trace.start = start;
    trace.certified = start_is_weak;

    if (options.k) {
        require_unit_interval(*options.k);
        trace.k = *options.k;
        if (!options.trust_k) {
            const auto report = check_contraction(ContractionKind::generalized_perp, space, map);
            if (!report.feasible || *options.k < *report.minimal_k) {
                throw PreconditionError("k = " + options.k->to_string()
                                        + " is not a generalized contraction constant for this map"
                                        + (report.minimal_k ? " (minimal k = " + report.minimal_k->to_string() + ")"
                                                            : std::string(" (infeasible)")));
            }
        }
    } else {
        const auto report = check_contraction(ContractionKind::generalized_perp, space, map);
        if (!report.admissible) {
            throw PreconditionError(report.minimal_k ? "map is not a generalized contraction: minimal k = "
                                                           + report.minimal_k->to_string()
                                                     : std::string("map is not a generalized contraction: infeasible"));
        }
        trace.k = *report.minimal_k;
    }

    Index x = start;
    trace.iterates.push_back(x);
    for (;;) {
        const std::size_t n = trace.iterates.size() - 1;
        const Index next = map(x);
        trace.step_distances.push_back(space.distance(x, next));
        const Rat& step = trace.step_distances.back();
        if (trace.certified && n > 0 && step > trace.k * trace.step_distances[n - 1]) {
            throw CertificateError("step inequality fails at n = " + std::to_string(n - 1) + ": d(x_"
                                   + std::to_string(n) + ", x_" + std::to_string(n + 1) + ") = " + step.to_string()
                                   + " > k * " + trace.step_distances[n - 1].to_string());
        }
        if (step.is_zero()) {
            trace.converged = true;
            trace.fixed_point = x;
            trace.stop = StopReason::fixed_point;
            break;
        }
        if (trace.certified && options.eps && apriori_bound(trace.k, n, trace.step_distances.front()) <= *options.eps) {
            trace.stop = StopReason::tolerance;
            break;
        }
        if (trace.applications() >= options.max_iter) {
            trace.stop = StopReason::max_iter;
            break;
        }
        trace.iterates.push_back(next);
        x = next;
    }

    const Rat& d1 = trace.step_distances.front();
    for (std::size_t n = 0; n < trace.iterates.size(); ++n) {
        trace.apriori_bounds.push_back(apriori_bound(trace.k, n, d1));
    }

    if (trace.certified) {
        for (std::size_t n = 0; n < trace.iterates.size(); ++n) {
            if (trace.step_distances[n] > pow(trace.k, n) * d1) {
                throw CertificateError("d(x_n, x_n+1) > k^n d(x_0, x_1) at n = " + std::to_string(n));
            }
            for (std::size_t m = n + 1; m < trace.iterates.size(); ++m) {
                if (space.distance(trace.iterates[n], trace.iterates[m]) > trace.apriori_bounds[n]) {
                    throw CertificateError("a-priori bound fails for iterate pair " + pair_text(n, m));
                }
            }
            if (trace.fixed_point && space.distance(trace.iterates[n], *trace.fixed_point) > trace.apriori_bounds[n]) {
                throw CertificateError("distance-to-limit bound fails at n = " + std::to_string(n));
            }
        }
    }
    return trace;
}

bool certify_fixed_point(const FiniteSpace& space, const SelfMap& map, Index z)
{
    require_compatible(space, map);
    space.require_index(z);
    return map(z) == z;
}

std::string_view mode_name(HypothesisMode m)
{
    return m == HypothesisMode::o1 ? "O1" : "orbital-continuity";
}

HypothesisMode parse_mode(std::string_view name)
{
    if (name == "orbital-continuity") {
        return HypothesisMode::orbital_continuity;
    }
    if (name == "O1" || name == "o1") {
        return HypothesisMode::o1;
    }
    throw InputError("unknown hypothesis mode '" + std::string(name) + "'");
}

HypothesisReport hypothesis_check(const FiniteSpace& space, const SelfMap& map, HypothesisMode mode)
{
    require_compatible(space, map);
    HypothesisReport r;
    r.mode = mode;
    r.weak_elements = weak_orthogonal_elements(space);
    r.has_weak_element = !r.weak_elements.empty();

    auto preservation = is_ow_preserving(space, map);
    r.preserving = preservation.preserving;
    r.preservation_violations = std::move(preservation.violations);

    const auto contraction = check_contraction(ContractionKind::generalized_perp, space, map);
    r.contraction_feasible = contraction.feasible;
    r.contraction_admissible = contraction.admissible;
    r.minimal_k = contraction.minimal_k;
    r.contraction_witness = contraction.feasible ? contraction.witness_max : contraction.infeasible_witness;

    // The tail of a convergent orbit is constantly its limit z, so every
    // subsequence eventually consists of z alone.
    r.o1_mode_holds = r.has_weak_element;
    for (Index w : r.weak_elements) {
        const auto info = orbit(map, w);
        if (info.enters_fixed_point && !space.relation().related(info.cycle.front(), info.cycle.front())) {
            r.o1_mode_holds = false;
            r.o1_witness = w;
            break;
        }
    }

    r.all_hold = r.has_weak_element && r.preserving && r.contraction_admissible;
    if (mode == HypothesisMode::o1) {
        r.all_hold = r.all_hold && r.o1_mode_holds;
    }
    return r;
}

} // namespace orthofix
