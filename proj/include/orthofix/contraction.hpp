#pragma once

#include "orthofix/space.hpp"

#include <concepts>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orthofix {

enum class ContractionKind { banach_perp, ciric, kannan, chatterjea, generalized_perp, unrestricted_lipschitz };

inline constexpr ContractionKind all_contraction_kinds[] = {
    ContractionKind::banach_perp, ContractionKind::ciric,           ContractionKind::kannan,
    ContractionKind::chatterjea,  ContractionKind::generalized_perp, ContractionKind::unrestricted_lipschitz,
};

std::string_view kind_name(ContractionKind kind);
/// Throws InputError for an unknown name.
ContractionKind parse_kind(std::string_view name);

/// Upper end of the admissible k-range: 1/2 for Kannan and Chatterjea, 1 otherwise.
Rat admissible_bound(ContractionKind kind);

/// What the contraction scan needs from a space/map pair: sample points,
/// the image of any value, distances between values, and the orthogonality
/// relation between sample points. Values may leave the sample (Tx of an
/// analytic map need not be a sample point).
template <class M>
concept ContractionModel = requires(const M& m, std::size_t i, const typename M::value_type& v) {
    typename M::scalar_type;
    { m.size() } -> std::convertible_to<std::size_t>;
    { m.point(i) } -> std::convertible_to<typename M::value_type>;
    { m.apply(v) } -> std::convertible_to<typename M::value_type>;
    { m.distance(v, v) } -> std::convertible_to<typename M::scalar_type>;
    { m.related(i, i) } -> std::convertible_to<bool>;
    { m.zero() } -> std::convertible_to<typename M::scalar_type>;
};

/// A finite space with an image-table map; values are point indices.
template <class Scalar>
class FiniteModel {
public:
    using scalar_type = Scalar;
    using value_type = Index;

    FiniteModel(const BasicFiniteSpace<Scalar>& space, const SelfMap& map) : space_(space), map_(map)
    {
        require_compatible(space, map);
    }

    [[nodiscard]] std::size_t size() const { return space_.size(); }
    [[nodiscard]] Index point(std::size_t i) const { return i; }
    [[nodiscard]] Index apply(Index x) const { return map_(x); }
    [[nodiscard]] const Scalar& distance(Index x, Index y) const { return space_.distance(x, y); }
    [[nodiscard]] bool related(std::size_t i, std::size_t j) const { return space_.relation().related(i, j); }
    [[nodiscard]] Scalar zero() const { return space_.distance(0, 0) * Rat(0); }

private:
    const BasicFiniteSpace<Scalar>& space_;
    const SelfMap& map_;
};

/// A finite sample of numbers on the real line with the usual distance, an
/// evaluator for the map and an orthogonality predicate on values.
template <class Scalar>
class SampledModel {
public:
    using scalar_type = Scalar;
    using value_type = Scalar;

    SampledModel(std::vector<Scalar> points, std::function<Scalar(const Scalar&)> map,
                 std::function<bool(const Scalar&, const Scalar&)> perp)
        : points_(std::move(points)), map_(std::move(map)), perp_(std::move(perp))
    {
        if (points_.empty()) {
            throw InputError("a sample needs at least one point");
        }
    }

    [[nodiscard]] std::size_t size() const { return points_.size(); }
    [[nodiscard]] const Scalar& point(std::size_t i) const { return points_[i]; }
    [[nodiscard]] Scalar apply(const Scalar& x) const { return map_(x); }
    [[nodiscard]] Scalar distance(const Scalar& x, const Scalar& y) const { return abs(x - y); }
    [[nodiscard]] bool related(std::size_t i, std::size_t j) const
    {
        return perp_(points_[i], points_[j]) || perp_(points_[j], points_[i]);
    }
    [[nodiscard]] Scalar zero() const { return points_.front() * Rat(0); }
    [[nodiscard]] const std::vector<Scalar>& points() const { return points_; }

private:
    std::vector<Scalar> points_;
    std::function<Scalar(const Scalar&)> map_;
    std::function<bool(const Scalar&, const Scalar&)> perp_;
};

template <class Scalar>
struct ContractionReport {
    ContractionKind kind = ContractionKind::generalized_perp;
    bool feasible = true;
    /// Exact supremum of d(Tx,Ty)/M(x,y) over scanned pairs with M > 0;
    /// zero when no such pair exists, none when infeasible.
    std::optional<Scalar> minimal_k;
    std::optional<IndexPair> witness_max;
    /// First scanned pair with M(x,y) = 0 < d(Tx,Ty).
    std::optional<IndexPair> infeasible_witness;
    bool admissible = false;
    std::size_t pairs_scanned = 0;
};

/// The comparison functional of `kind` at the values (x, y):
///   generalized_perp  max{d(x,y), d(x,Tx), d(y,Ty), [d(x,Ty)+d(Tx,y)]/2,
///                         [d(T²x,x)+d(T²x,Ty)]/2, d(T²x,Tx), d(T²x,y), d(T²x,Ty)}
///   ciric             max of the first four generalized terms
///   kannan            d(x,Tx) + d(y,Ty)
///   chatterjea        d(x,Ty) + d(y,Tx)
///   banach_perp, unrestricted_lipschitz   d(x,y)
template <ContractionModel Model>
typename Model::scalar_type comparison_value(ContractionKind kind, const Model& m,
                                             const typename Model::value_type& x,
                                             const typename Model::value_type& y)
{
    using S = typename Model::scalar_type;
    const auto tx = m.apply(x);
    const auto ty = m.apply(y);
    const Rat two(2);
    switch (kind) {
    case ContractionKind::banach_perp:
    case ContractionKind::unrestricted_lipschitz:
        return S(m.distance(x, y));
    case ContractionKind::kannan:
        return S(m.distance(x, tx)) + S(m.distance(y, ty));
    case ContractionKind::chatterjea:
        return S(m.distance(x, ty)) + S(m.distance(y, tx));
    case ContractionKind::ciric:
    case ContractionKind::generalized_perp:
        break;
    }
    std::vector<S> terms{
        S(m.distance(x, y)),
        S(m.distance(x, tx)),
        S(m.distance(y, ty)),
        (S(m.distance(x, ty)) + S(m.distance(tx, y))) / two,
    };
    if (kind == ContractionKind::generalized_perp) {
        const auto t2x = m.apply(tx);
        terms.push_back((S(m.distance(t2x, x)) + S(m.distance(t2x, ty))) / two);
        terms.push_back(S(m.distance(t2x, tx)));
        terms.push_back(S(m.distance(t2x, y)));
        terms.push_back(S(m.distance(t2x, ty)));
    }
    S best = terms.front();
    for (const auto& t : terms) {
        if (t > best) {
            best = t;
        }
    }
    return best;
}

/// Comparison functional at sample points (i, j); throws InputError out of range.
template <class Scalar>
Scalar m_value(ContractionKind kind, const BasicFiniteSpace<Scalar>& space, const SelfMap& map, Index x, Index y)
{
    space.require_index(x);
    space.require_index(y);
    return comparison_value(kind, FiniteModel<Scalar>(space, map), x, y);
}

/// Calls `visit(i, j)` for every scanned ordered pair of `kind`: orthogonally
/// related pairs (both orders, reflexive pairs included), or all pairs for
/// unrestricted_lipschitz. Lexicographic order.
template <ContractionModel Model, class Visit>
void for_each_scanned_pair(ContractionKind kind, const Model& m, Visit&& visit)
{
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (kind == ContractionKind::unrestricted_lipschitz || m.related(i, j)) {
                visit(i, j);
            }
        }
    }
}

template <ContractionModel Model>
ContractionReport<typename Model::scalar_type> check_contraction(ContractionKind kind, const Model& m)
{
    using S = typename Model::scalar_type;
    ContractionReport<S> report;
    report.kind = kind;
    std::optional<S> best;
    for_each_scanned_pair(kind, m, [&](std::size_t i, std::size_t j) {
        ++report.pairs_scanned;
        const auto x = m.point(i);
        const auto y = m.point(j);
        const S lhs = S(m.distance(m.apply(x), m.apply(y)));
        const S denom = comparison_value(kind, m, x, y);
        if (denom.sign() == 0) {
            if (lhs.sign() != 0 && !report.infeasible_witness) {
                report.infeasible_witness = IndexPair{i, j};
            }
            return;
        }
        S ratio = lhs / denom;
        if (!best || ratio > *best) {
            best = std::move(ratio);
            report.witness_max = IndexPair{i, j};
        }
    });
    report.feasible = !report.infeasible_witness.has_value();
    if (report.feasible) {
        report.minimal_k = best ? *best : m.zero();
        report.admissible = *report.minimal_k < lift(m.zero(), admissible_bound(kind));
    }
    return report;
}

struct ImplicationVerdict {
    ImplicationVerdict() = default;
    explicit ImplicationVerdict(std::string n) : name(std::move(n)) {}

    std::string name;
    bool applicable = true; ///< false when the antecedent does not hold
    bool passed = true;
    std::optional<IndexPair> witness;
    std::string detail;
};

/// Checks the contraction hierarchy on one space/map pair:
///  - per scanned pair: d(x,y) ≤ M_ciric, M_ciric ≤ M_generalized,
///    M_kannan ≤ 2·M_ciric, M_chatterjea ≤ 2·M_ciric;
///  - banach admissible(k) ⇒ ciric admissible(≤ k) ⇒ generalized admissible(≤ k);
///  - kannan/chatterjea admissible(k) ⇒ ciric admissible(≤ 2k);
///  - minimal_k(banach_perp) ≤ minimal_k(unrestricted_lipschitz).
template <ContractionModel Model>
std::vector<ImplicationVerdict> hierarchy_check(const Model& m)
{
    using S = typename Model::scalar_type;
    const Rat two(2);
    std::vector<ImplicationVerdict> out;

    ImplicationVerdict banach_in_ciric{"pairwise: d(x,y) <= M_ciric"};
    ImplicationVerdict ciric_in_generalized{"pairwise: M_ciric <= M_generalized"};
    ImplicationVerdict kannan_in_ciric{"pairwise: M_kannan <= 2 M_ciric"};
    ImplicationVerdict chatterjea_in_ciric{"pairwise: M_chatterjea <= 2 M_ciric"};
    auto record = [](ImplicationVerdict& v, bool ok, std::size_t i, std::size_t j) {
        if (!ok && v.passed) {
            v.passed = false;
            v.witness = IndexPair{i, j};
        }
    };
    for_each_scanned_pair(ContractionKind::generalized_perp, m, [&](std::size_t i, std::size_t j) {
        const auto x = m.point(i);
        const auto y = m.point(j);
        const S banach = comparison_value(ContractionKind::banach_perp, m, x, y);
        const S ciric = comparison_value(ContractionKind::ciric, m, x, y);
        const S generalized = comparison_value(ContractionKind::generalized_perp, m, x, y);
        const S kannan = comparison_value(ContractionKind::kannan, m, x, y);
        const S chatterjea = comparison_value(ContractionKind::chatterjea, m, x, y);
        record(banach_in_ciric, banach <= ciric, i, j);
        record(ciric_in_generalized, ciric <= generalized, i, j);
        record(kannan_in_ciric, kannan <= ciric * two, i, j);
        record(chatterjea_in_ciric, chatterjea <= ciric * two, i, j);
    });
    out.push_back(std::move(banach_in_ciric));
    out.push_back(std::move(ciric_in_generalized));
    out.push_back(std::move(kannan_in_ciric));
    out.push_back(std::move(chatterjea_in_ciric));

    const auto banach = check_contraction(ContractionKind::banach_perp, m);
    const auto ciric = check_contraction(ContractionKind::ciric, m);
    const auto kannan = check_contraction(ContractionKind::kannan, m);
    const auto chatterjea = check_contraction(ContractionKind::chatterjea, m);
    const auto generalized = check_contraction(ContractionKind::generalized_perp, m);
    const auto unrestricted = check_contraction(ContractionKind::unrestricted_lipschitz, m);

    // antecedent admissible with constant k ⇒ consequent admissible with constant ≤ factor·k
    auto implication = [&](std::string name, const ContractionReport<S>& from, const ContractionReport<S>& to,
                           const Rat& factor) {
        ImplicationVerdict v{std::move(name)};
        v.applicable = from.admissible;
        if (!v.applicable) {
            v.detail = "antecedent not admissible";
            return v;
        }
        const S bound = *from.minimal_k * factor;
        v.passed = to.admissible && *to.minimal_k <= bound;
        if (!v.passed) {
            v.witness = to.infeasible_witness ? to.infeasible_witness : to.witness_max;
            v.detail = to.minimal_k ? "consequent k = " + to.minimal_k->to_string() + " exceeds " + bound.to_string()
                                    : std::string("consequent infeasible");
        }
        return v;
    };
    out.push_back(implication("banach_perp => ciric (k)", banach, ciric, Rat(1)));
    out.push_back(implication("ciric => generalized_perp (k)", ciric, generalized, Rat(1)));
    out.push_back(implication("kannan => ciric (2k)", kannan, ciric, two));
    out.push_back(implication("chatterjea => ciric (2k)", chatterjea, ciric, two));

    ImplicationVerdict wider{"minimal k: banach_perp <= unrestricted_lipschitz"};
    wider.applicable = banach.feasible && unrestricted.feasible;
    if (wider.applicable && *banach.minimal_k > *unrestricted.minimal_k) {
        wider.passed = false;
        wider.witness = banach.witness_max;
    }
    out.push_back(std::move(wider));

    ImplicationVerdict monotone{"minimal k: generalized_perp <= ciric <= banach_perp"};
    monotone.applicable = banach.feasible && ciric.feasible && generalized.feasible;
    if (monotone.applicable) {
        if (*generalized.minimal_k > *ciric.minimal_k) {
            monotone.passed = false;
            monotone.witness = generalized.witness_max;
        } else if (*ciric.minimal_k > *banach.minimal_k) {
            monotone.passed = false;
            monotone.witness = ciric.witness_max;
        }
    }
    out.push_back(std::move(monotone));
    return out;
}

template <class Scalar>
ContractionReport<Scalar> check_contraction(ContractionKind kind, const BasicFiniteSpace<Scalar>& space,
                                            const SelfMap& map)
{
    return check_contraction(kind, FiniteModel<Scalar>(space, map));
}

template <class Scalar>
std::vector<ImplicationVerdict> hierarchy_check(const BasicFiniteSpace<Scalar>& space, const SelfMap& map)
{
    return hierarchy_check(FiniteModel<Scalar>(space, map));
}

} // namespace orthofix
