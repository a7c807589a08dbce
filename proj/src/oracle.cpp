#include "orthofix/oracle.hpp"

#include "orthofix/relational.hpp"

#include <algorithm>
#include <array>

namespace orthofix {

void GenParams::validate() const
{
    if (min_points < 2 || max_points > 8 || min_points > max_points) {
        throw InputError("point count range must satisfy 2 <= min_points <= max_points <= 8");
    }
    if (weight_lo < 1 || weight_lo > weight_hi) {
        throw InputError("weight range must satisfy 1 <= lo <= hi");
    }
    if (relation_density.sign() < 0 || relation_density > Rat(1)) {
        throw InputError("relation density must lie in [0,1]");
    }
    if (max_map_attempts == 0 || draw_factor == 0) {
        throw InputError("attempt limits must be positive");
    }
}

std::uint64_t Rng::below(std::uint64_t n)
{
    // Reject the low (2^64 mod n) values so that x mod n is uniform.
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x >= threshold) {
            return x % n;
        }
    }
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(below(span));
}

bool Rng::chance(const Rat& p)
{
    if (p.sign() <= 0) {
        return false;
    }
    if (p >= Rat(1)) {
        return true;
    }
    const auto den = p.denominator().convert_to<std::uint64_t>();
    const auto num = p.numerator().convert_to<std::uint64_t>();
    return below(den) < num;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

std::vector<Index> brute_force_fixed_points(const FiniteSpace& space, const SelfMap& map)
{
    require_compatible(space, map);
    std::vector<Index> out;
    for (Index z = 0; z < space.size(); ++z) {
        if (map(z) == z) {
            out.push_back(z);
        }
    }
    return out;
}

std::optional<Rat> brute_force_generalized_k(const FiniteSpace& space, const SelfMap& map)
{
    require_compatible(space, map);
    const auto& d = space.metric();
    const auto& rel = space.relation();
    const std::size_t n = space.size();
    Rat best(0);
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            if (!rel.holds(x, y) && !rel.holds(y, x)) {
                continue;
            }
            const Index tx = map(x);
            const Index ty = map(y);
            const Index ttx = map(tx);
            const std::array<Rat, 8> terms{
                d(x, y),
                d(x, tx),
                d(y, ty),
                (d(x, ty) + d(tx, y)) / Rat(2),
                (d(ttx, x) + d(ttx, ty)) / Rat(2),
                d(ttx, tx),
                d(ttx, y),
                d(ttx, ty),
            };
            const Rat m = *std::max_element(terms.begin(), terms.end());
            const Rat& lhs = d(tx, ty);
            if (m.is_zero()) {
                if (!lhs.is_zero()) {
                    return std::nullopt;
                }
                continue;
            }
            best = std::max(best, lhs / m);
        }
    }
    return best;
}

FiniteSpace generate_space(const GenParams& params, Rng& rng)
{
    params.validate();
    const auto n = static_cast<std::size_t>(
        rng.between(static_cast<std::int64_t>(params.min_points), static_cast<std::int64_t>(params.max_points)));

    // Floyd-Warshall closure of random positive edge weights.
    std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, 0));
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            w[i][j] = w[j][i] = rng.between(params.weight_lo, params.weight_hi);
        }
    }
    for (Index k = 0; k < n; ++k) {
        for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < n; ++j) {
                w[i][j] = std::min(w[i][j], w[i][k] + w[k][j]);
            }
        }
    }
    SquareMatrix<Rat> metric(n, Rat(0));
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            metric(i, j) = Rat(w[i][j]);
        }
    }

    std::vector<IndexPair> pairs;
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            if (rng.chance(params.relation_density)) {
                pairs.emplace_back(i, j);
            }
        }
    }
    const auto anchor = static_cast<Index>(rng.below(n));
    for (Index y = 0; y < n; ++y) {
        if (rng.coin()) {
            pairs.emplace_back(anchor, y);
        } else {
            pairs.emplace_back(y, anchor);
        }
    }

    std::vector<std::string> labels;
    labels.reserve(n);
    for (Index i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
    }
    return FiniteSpace(std::move(labels), std::move(metric), Relation(n, std::move(pairs)));
}

FiniteSpace generate_space(const GenParams& params)
{
    Rng rng(params.seed);
    return generate_space(params, rng);
}

MapDraw generate_map(const GenParams& params, const FiniteSpace& space, Rng& rng)
{
    MapDraw draw;
    const std::size_t n = space.size();
    while (draw.attempts < params.max_map_attempts) {
        ++draw.attempts;
        const auto attractor = static_cast<Index>(rng.below(n));
        std::vector<Index> images(n);
        for (Index x = 0; x < n; ++x) {
            images[x] = rng.coin() ? attractor : static_cast<Index>(rng.below(n));
        }
        SelfMap candidate(std::move(images), n);
        if (hypothesis_check(space, candidate).all_hold) {
            draw.map = std::move(candidate);
            break;
        }
    }
    return draw;
}

std::optional<std::string> audit_trace(const FiniteSpace& space, const PicardTrace& trace)
{
    const auto& xs = trace.iterates;
    if (xs.empty()) {
        return "empty trace";
    }
    auto step = [&](std::size_t n) {
        // x_{n+1} may be the first iterate past the recorded window
        const Index next = n + 1 < xs.size() ? xs[n + 1] : xs[n];
        return space.distance(xs[n], next);
    };
    const Rat d1 = xs.size() > 1 ? space.distance(xs[0], xs[1]) : Rat(0);
    const Rat denom = Rat(1) - trace.k;
    Rat k_pow(1);
    for (std::size_t n = 0; n < xs.size(); ++n) {
        const Rat bound = k_pow * d1 / denom;
        if (n + 2 < xs.size() && step(n + 1) > trace.k * step(n)) {
            return "step inequality fails at n = " + std::to_string(n);
        }
        for (std::size_t m = n + 1; m < xs.size(); ++m) {
            if (space.distance(xs[n], xs[m]) > bound) {
                return "tail bound fails for (n, m) = (" + std::to_string(n) + ", " + std::to_string(m) + ")";
            }
        }
        k_pow *= trace.k;
    }
    return std::nullopt;
}

namespace {

std::optional<std::string> audit_instance(const FiniteSpace& space, const SelfMap& map, AuditSummary& summary)
{
    const auto fixed = brute_force_fixed_points(space, map);
    if (fixed.size() != 1) {
        return "brute-force fixed-point set has " + std::to_string(fixed.size()) + " elements";
    }
    const Index z = fixed.front();

    const auto module_k = check_contraction(ContractionKind::generalized_perp, space, map).minimal_k;
    const auto oracle_k = brute_force_generalized_k(space, map);
    if (module_k != oracle_k) {
        return "minimal generalized k mismatch: module " + (module_k ? module_k->to_string() : "none") + ", oracle "
               + (oracle_k ? oracle_k->to_string() : "none");
    }

    PicardOptions options;
    options.max_iter = space.size();
    for (Index w : weak_orthogonal_elements(space)) {
        PicardTrace trace;
        try {
            trace = picard_solve(space, map, w, options);
        } catch (const std::exception& e) {
            return "picard from " + std::to_string(w) + " raised: " + e.what();
        }
        ++summary.traces_checked;
        if (!trace.converged || trace.fixed_point != z) {
            return "picard from " + std::to_string(w) + " did not converge to " + std::to_string(z);
        }
        if (auto bad = audit_trace(space, trace)) {
            return "picard from " + std::to_string(w) + ": " + *bad;
        }
    }
    return std::nullopt;
}

} // namespace

AuditSummary theorem_audit(const GenParams& params)
{
    params.validate();
    AuditSummary summary;
    summary.params = params;
    const std::size_t max_draws = params.trials * params.draw_factor;
    for (std::size_t draw = 0; draw < max_draws && summary.hypotheses_satisfied < params.trials; ++draw) {
        const std::uint64_t stream = derive_seed(params.seed, draw);
        Rng rng(stream);
        const FiniteSpace space = generate_space(params, rng);
        ++summary.trials_run;
        const MapDraw candidate = generate_map(params, space, rng);
        summary.map_candidates += candidate.attempts;
        if (!candidate.map) {
            ++summary.rejected;
            continue;
        }
        ++summary.hypotheses_satisfied;
        const SelfMap& map = *candidate.map;

        if (auto discrepancy = audit_instance(space, map, summary)) {
            summary.failures.push_back({draw, stream, space, map, *discrepancy});
        } else {
            ++summary.conclusion_verified;
        }
        for (const auto& verdict : hierarchy_check(space, map)) {
            if (!verdict.passed) {
                summary.hierarchy_failures.push_back({draw, verdict.name, verdict.witness});
            }
        }
    }
    return summary;
}

} // namespace orthofix
