#include "orthofix/corpus.hpp"

#include "orthofix/metric.hpp"
#include "orthofix/oracle.hpp"
#include "orthofix/relational.hpp"
#include "orthofix/solver.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace orthofix {

namespace {

constexpr std::uint64_t plane_window = 1000;
constexpr std::size_t sequence_window = 1000;

class CaseBuilder {
public:
    CaseBuilder(std::string name, std::string summary) { report_ = {std::move(name), std::move(summary), {}}; }

    void check(std::string name, Source source, std::string expected, std::string actual)
    {
        const Outcome outcome = expected == actual ? Outcome::pass : Outcome::fail;
        report_.assertions.push_back({std::move(name), source, std::move(expected), std::move(actual), outcome});
    }

    void check(std::string name, Source source, bool holds)
    {
        check(std::move(name), source, "true", holds ? "true" : "false");
    }

    void annotate(std::string claim)
    {
        report_.assertions.push_back(
            {std::move(claim), Source::published, "analytic-only", "not machine-checked", Outcome::annotation});
    }

    CaseReport take() { return std::move(report_); }

private:
    CaseReport report_;
};

std::string label_set(const FiniteSpace& space, const std::vector<Index>& xs)
{
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i == 0 ? "" : ",") + space.label(xs[i]);
    }
    return out + "}";
}

std::string label_list(const FiniteSpace& space, const std::vector<Index>& xs)
{
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i == 0 ? "" : ",") + space.label(xs[i]);
    }
    return out + "]";
}

std::string orbit_text(const FiniteSpace& space, const OrbitInfo& info)
{
    return "prefix " + label_list(space, info.prefix) + " cycle " + label_list(space, info.cycle);
}

std::string pair_text(const IndexPair& p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }

template <class T>
std::string opt_text(const std::optional<T>& v)
{
    if (!v) {
        return "none";
    }
    if constexpr (std::is_same_v<T, IndexPair>) {
        return pair_text(*v);
    } else if constexpr (std::is_integral_v<T>) {
        return std::to_string(*v);
    } else {
        return v->to_string();
    }
}

FiniteSpace line_space(const std::vector<Rat>& values, const std::function<bool(const Rat&, const Rat&)>& perp)
{
    const std::size_t n = values.size();
    SquareMatrix<Rat> metric(n, Rat(0));
    std::vector<IndexPair> pairs;
    std::vector<std::string> labels;
    for (Index i = 0; i < n; ++i) {
        labels.push_back(values[i].to_string());
        for (Index j = 0; j < n; ++j) {
            metric(i, j) = abs(values[i] - values[j]);
            if (perp(values[i], values[j])) {
                pairs.emplace_back(i, j);
            }
        }
    }
    return FiniteSpace(std::move(labels), std::move(metric), Relation(n, std::move(pairs)));
}

CaseReport run_five_point()
{
    CaseBuilder c("five-point", "five-point weak orthogonal space with a generalized contraction");
    const FiniteSpace space = five_point_space();
    const SelfMap map = five_point_map();

    c.check("metric is valid", Source::definitional, validate_metric(space).ok);
    const auto cls = classify_orthogonality(space);
    c.check("classification", Source::published, "O_w-set-only", std::string(verdict_name(cls.verdict)));
    c.check("strong orthogonal elements", Source::published, "{}", label_set(space, cls.strong_elements));
    c.check("weak orthogonal elements", Source::published, "{0}", label_set(space, cls.weak_elements));

    const auto preservation = is_ow_preserving(space, map);
    c.check("map is O_w-preserving", Source::published, preservation.preserving);
    c.check("(T4,T0) = (2,0) is not in R but (0,2) is", Source::published,
            !space.relation().holds(map(4), map(0)) && space.relation().holds(map(0), map(4)));

    c.check("M(3,4)", Source::published, "4",
            m_value(ContractionKind::generalized_perp, space, map, 3, 4).to_string());
    c.check("M(0,4)", Source::closed_form, "4",
            m_value(ContractionKind::generalized_perp, space, map, 0, 4).to_string());

    const auto generalized = check_contraction(ContractionKind::generalized_perp, space, map);
    c.check("M(4,3)", Source::closed_form, "3",
            m_value(ContractionKind::generalized_perp, space, map, 4, 3).to_string());
    c.check("generalized minimal k", Source::closed_form, "2/3", opt_text(generalized.minimal_k));
    c.check("generalized witness", Source::closed_form, "(4,3)", opt_text(generalized.witness_max));
    c.check("generalized admissible", Source::published, generalized.admissible);
    c.check("generalized minimal k by brute-force oracle", Source::closed_form, "2/3",
            opt_text(brute_force_generalized_k(space, map)));

    const auto banach = check_contraction(ContractionKind::banach_perp, space, map);
    c.check("banach_perp minimal k", Source::closed_form, "2", opt_text(banach.minimal_k));
    c.check("banach_perp inadmissible", Source::published, !banach.admissible);
    c.check("banach_perp witness", Source::published, "(3,4)", opt_text(banach.witness_max));

    c.check("fixed points", Source::published, "{0}", label_set(space, brute_force_fixed_points(space, map)));
    c.check("T0 = 0 certifies a fixed point", Source::published, certify_fixed_point(space, map, 0));

    const char* orbits[] = {
        "prefix [] cycle [0]",      "prefix [1] cycle [0]",      "prefix [2,1] cycle [0]",
        "prefix [3] cycle [0]",     "prefix [4,2,1] cycle [0]",
    };
    for (Index x = 0; x < space.size(); ++x) {
        c.check("orbit of " + space.label(x), Source::published, orbits[x], orbit_text(space, orbit(space, map, x)));
    }

    const auto from_weak = picard_solve(space, map, 0);
    c.check("Picard from 0", Source::published, "[0] -> 0",
            label_list(space, from_weak.iterates) + " -> " + opt_text(from_weak.fixed_point));
    PicardOptions any_start;
    any_start.allow_any_start = true;
    const auto from_four = picard_solve(space, map, 4, any_start);
    c.check("Picard from 4", Source::published, "[4,2,1,0] -> 0 in 3 applications",
            label_list(space, from_four.iterates) + " -> " + opt_text(from_four.fixed_point) + " in "
                + std::to_string(from_four.applications()) + " applications");

    c.check("theorem hypotheses hold", Source::published, hypothesis_check(space, map).all_hold);
    c.check("condition (O1) holds", Source::closed_form, hypothesis_check(space, map, HypothesisMode::o1).all_hold);

    std::size_t hierarchy_failures = 0;
    for (const auto& v : hierarchy_check(space, map)) {
        hierarchy_failures += v.passed ? 0 : 1;
    }
    c.check("contraction hierarchy failures", Source::closed_form, "0", std::to_string(hierarchy_failures));
    return c.take();
}

CaseReport run_rational_product()
{
    CaseBuilder c("rational-product",
                  "x ⊥ y iff xy is rational, T = x/3 on rationals and 0 otherwise, sampled in Q(sqrt(11))");
    const auto points = rational_product_points();
    const auto model = rational_product_model();
    const Relation rel = rational_product_relation();

    c.check("0 is an orthogonal element of the sample", Source::published, "true",
            strong_orthogonal_elements(rel).front() == 0 ? "true" : "false");
    c.check("1 and 1 + 1/11*sqrt(11) are not orthogonally related", Source::closed_form, !rel.related(1, 5));
    c.check("sqrt(11) ⊥ sqrt(11)", Source::closed_form, rel.holds(4, 4));

    const auto banach = check_contraction(ContractionKind::banach_perp, model);
    c.check("banach_perp minimal k over related pairs", Source::published, "1/3", opt_text(banach.minimal_k));
    c.check("banach_perp admissible", Source::published, banach.admissible);

    const QuadExt& x = points[1];
    const QuadExt& y = points[5];
    const QuadExt image_gap = model.distance(model.apply(x), model.apply(y));
    c.check("d(T1, Ty) for y = 1 + 1/sqrt(11)", Source::published, "1/3", image_gap.to_string());
    c.check("d(1, y)", Source::closed_form, "1/11*sqrt(11)", model.distance(x, y).to_string());
    c.check("1/3 > (1/11)*sqrt(11) decided exactly", Source::closed_form, "greater",
            qext_compare(image_gap, model.distance(x, y)) == std::strong_ordering::greater ? "greater" : "not greater");

    const auto lipschitz = check_contraction(ContractionKind::unrestricted_lipschitz, model);
    c.check("unrestricted Lipschitz admissible", Source::published, "false", lipschitz.admissible ? "true" : "false");
    c.check("unrestricted Lipschitz witness", Source::published, "(1,5)", opt_text(lipschitz.witness_max));
    c.check("unrestricted Lipschitz minimal k", Source::closed_form, "1/3*sqrt(11)", opt_text(lipschitz.minimal_k));

    std::size_t hierarchy_failures = 0;
    for (const auto& v : hierarchy_check(model)) {
        hierarchy_failures += v.passed ? 0 : 1;
    }
    c.check("contraction hierarchy failures", Source::closed_form, "0", std::to_string(hierarchy_failures));

    c.annotate("banach_perp holds with some k in [0,1) over all of R");
    c.annotate("T is not O-continuous (partial sums of e)");
    return c.take();
}

CaseReport run_plane_counterexample()
{
    CaseBuilder c("r2-counterexample", "O-continuous but discontinuous plane map under x ⊥ y iff <x,y> = 0");

    bool inner_positive = true;
    bool first_coordinate = true;
    bool gap_formula = true;
    bool second_zero = true;
    bool shrinking = true;
    std::uint64_t first_bad = 0;
    for (std::uint64_t n = 1; n <= plane_window; ++n) {
        const Vec2 y = special_point(n);
        const Vec2 next = special_point(n + 1);
        const Rat nn(static_cast<std::int64_t>(n));
        const Rat q = Rat(2) * nn * nn + Rat(2) * nn + Rat(1);
        const Vec2 image = plane_map(y, plane_window);
        const bool ok_inner = inner(y, next).sign() > 0;
        const bool ok_first = image.x1 == nn * (nn + Rat(1)) / q;
        const bool ok_gap = abs(image.x1 - Rat(1, 2)) == Rat(1) / (Rat(2) * q);
        const bool ok_second = image.x2.is_zero();
        const bool ok_shrink = inner(y, y) <= Rat(2) / (nn * nn);
        if (!(ok_inner && ok_first && ok_gap && ok_second && ok_shrink) && first_bad == 0) {
            first_bad = n;
        }
        inner_positive = inner_positive && ok_inner;
        first_coordinate = first_coordinate && ok_first;
        gap_formula = gap_formula && ok_gap;
        second_zero = second_zero && ok_second;
        shrinking = shrinking && ok_shrink;
    }
    const std::string window = " for n = 1.." + std::to_string(plane_window);
    c.check("<y_n, y_n+1> > 0" + window + " (no orthogonal tail)", Source::published, inner_positive);
    c.check("F(y_n)_1 = n(n+1)/(2n^2+2n+1)" + window, Source::closed_form, first_coordinate);
    c.check("|F(y_n)_1 - 1/2| = 1/(2(2n^2+2n+1))" + window, Source::closed_form, gap_formula);
    c.check("F(y_n)_2 = 0" + window, Source::definitional, second_zero);
    c.check("|y_n|^2 <= 2/n^2" + window + " (y_n -> origin)", Source::closed_form, shrinking);
    if (first_bad != 0) {
        c.check("first failing n", Source::closed_form, "none", std::to_string(first_bad));
    }

    c.check("F(y_1)_1", Source::closed_form, "2/5", plane_map(special_point(1), plane_window).x1.to_string());
    c.check("F(y_2)_1", Source::closed_form, "6/13", plane_map(special_point(2), plane_window).x1.to_string());
    const Rat gap = abs(plane_map(special_point(plane_window), plane_window).x1 - Rat(1, 2));
    c.check("|F(y_1000) - (1/2,0)|", Source::closed_form, "1/4004002", gap.to_string());
    c.check("|F(y_1000) - (1/2,0)| < 10^-6", Source::closed_form, gap < Rat(1, 1000000));

    const Vec2 origin{Rat(0), Rat(0)};
    c.check("F(0,0)", Source::published, "(0,0)",
            "(" + plane_map(origin, plane_window).x1.to_string() + "," + plane_map(origin, plane_window).x2.to_string()
                + ")");
    c.check("F vanishes off the special points", Source::definitional,
            plane_map({Rat(1, 2), Rat(1, 2)}, plane_window) == origin
                && plane_map({Rat(1, 2), Rat(1, 4)}, plane_window) == origin);
    c.check("limit (1/2,0) differs from F(origin)", Source::published, Rat(1, 2) != plane_map(origin, plane_window).x1);

    c.annotate("no special point (1/k, 1/(k+1)) is the limit of an orthogonal sequence");
    c.annotate("F is O-continuous at every point of R^2");
    return c.take();
}

CaseReport run_leq_relation()
{
    CaseBuilder c("leq-relation", "x ⊥ y iff x <= y on the real line, sampled");
    std::vector<Rat> sample;
    for (std::int64_t v = -2; v <= 2; ++v) {
        sample.emplace_back(v);
    }
    const FiniteSpace space = leq_space(sample);
    c.check("weak orthogonal elements of {-2,...,2}", Source::published, "{-2,-1,0,1,2}",
            label_set(space, weak_orthogonal_elements(space)));
    c.check("orthogonal elements of the sample are its extrema", Source::definitional, "{-2,2}",
            label_set(space, strong_orthogonal_elements(space)));
    c.annotate("R itself is not an O-set (finite samples always have extrema)");

    std::vector<Rat> alternating;
    for (std::int64_t n = 1; n <= 6; ++n) {
        alternating.emplace_back(n % 2 == 0 ? 1 : -1, n);
    }
    const FiniteSpace seq_space = leq_space(alternating);
    std::vector<Index> seq(alternating.size());
    for (Index i = 0; i < seq.size(); ++i) {
        seq[i] = i;
    }
    c.check("x_n = (-1)^n/n, n = 1..6 is an O_w-sequence", Source::published,
            is_ow_sequence(seq_space, std::span<const Index>(seq)).ok);
    std::size_t forward_break = seq.size();
    for (std::size_t n = 0; n + 1 < seq.size() && forward_break == seq.size(); ++n) {
        if (!seq_space.relation().holds(seq[n], seq[n + 1])) {
            forward_break = n;
        }
    }
    c.check("first n with x_n ⊥ x_n+1 failing (not an O-sequence)", Source::published, "x_2 = 1/2, x_3 = -1/3",
            forward_break + 1 < seq.size() ? "x_" + std::to_string(forward_break + 1) + " = "
                                                 + seq_space.label(seq[forward_break]) + ", x_"
                                                 + std::to_string(forward_break + 2) + " = "
                                                 + seq_space.label(seq[forward_break + 1])
                                           : std::string("none"));

    std::vector<Rat> long_window;
    for (std::size_t n = 1; n <= sequence_window; ++n) {
        const auto nn = static_cast<std::int64_t>(n);
        long_window.emplace_back(n % 2 == 0 ? 1 : -1, nn);
    }
    const auto long_check = is_ow_sequence(std::span<const Rat>(long_window),
                                           [](const Rat& a, const Rat& b) { return a <= b; });
    c.check("x_n = (-1)^n/n, n = 1.." + std::to_string(sequence_window) + " is an O_w-sequence", Source::published,
            long_check.ok);
    return c.take();
}

CaseReport run_orbit_space()
{
    CaseBuilder c("orbit-space", "x ⊥ y iff xy <= x or xy <= y on (0,inf), sampled on {1/3, 1/2, 1, 2}");
    const FiniteSpace space = orbit_space();
    const SelfMap map = orbit_map();
    const Index third = 0;
    const Index half = 1;
    const Index one = 2;
    const Index two = 3;
    c.check("metric is valid", Source::definitional, validate_metric(space).ok);
    const auto strong = strong_orthogonal_elements(space);
    c.check("1 is an orthogonal element", Source::published,
            std::find(strong.begin(), strong.end(), one) != strong.end());
    c.check("orbit of 1/2", Source::published, "prefix [1/2] cycle [2,1/3]", orbit_text(space, orbit(space, map, half)));
    c.check("orbit of 2", Source::published, "prefix [] cycle [2,1/3]", orbit_text(space, orbit(space, map, two)));
    c.check("orbit of 1/3", Source::published, "prefix [] cycle [1/3,2]", orbit_text(space, orbit(space, map, third)));
    c.check("orbit of 1", Source::published, "prefix [] cycle [1]", orbit_text(space, orbit(space, map, one)));
    c.check("fixed points", Source::closed_form, "{1}", label_set(space, brute_force_fixed_points(space, map)));
    c.annotate("X is T-orbitally O-complete but not O-complete (x_n = 1/n)");
    c.annotate("T is orbitally O-continuous but not O-continuous (x_n = 1 - 1/(n+1))");
    return c.take();
}

struct Registered {
    const char* name;
    const char* summary;
    CaseReport (*run)();
};

const Registered registry[] = {
    {"five-point", "finite weak orthogonal space, generalized contraction, unique fixed point 0", run_five_point},
    {"rational-product", "x ⊥ y iff xy rational: Banach ⊥-contraction that is not a Banach contraction",
     run_rational_product},
    {"r2-counterexample", "plane map that is O-continuous but discontinuous at the origin", run_plane_counterexample},
    {"leq-relation", "x ⊥ y iff x <= y: weak orthogonal elements and O_w-sequences", run_leq_relation},
    {"orbit-space", "orbits of a two-cycle map under x ⊥ y iff xy <= x or xy <= y", run_orbit_space},
};

} // namespace

std::string_view source_name(Source s)
{
    switch (s) {
    case Source::published:
        return "published";
    case Source::closed_form:
        return "closed-form";
    case Source::definitional:
        return "definitional";
    }
    return "published";
}

std::string_view outcome_name(Outcome o)
{
    switch (o) {
    case Outcome::pass:
        return "pass";
    case Outcome::fail:
        return "FAIL";
    case Outcome::annotation:
        return "note";
    }
    return "FAIL";
}

std::size_t CaseReport::failed() const
{
    return static_cast<std::size_t>(std::count_if(assertions.begin(), assertions.end(),
                                                  [](const Assertion& a) { return a.outcome == Outcome::fail; }));
}

std::size_t CaseReport::annotations() const
{
    return static_cast<std::size_t>(std::count_if(assertions.begin(), assertions.end(),
                                                  [](const Assertion& a) { return a.outcome == Outcome::annotation; }));
}

std::vector<CaseInfo> list_cases()
{
    std::vector<CaseInfo> out;
    for (const auto& r : registry) {
        out.push_back({r.name, r.summary});
    }
    return out;
}

CaseReport run_case(std::string_view name)
{
    for (const auto& r : registry) {
        if (name == r.name) {
            return r.run();
        }
    }
    throw InputError("unknown corpus case '" + std::string(name) + "'");
}

std::string render_text(const CaseReport& report)
{
    std::ostringstream out;
    const std::size_t checks = report.assertions.size() - report.annotations();
    out << "case " << report.name << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << checks << " checks, "
        << report.failed() << " failed, " << report.annotations() << " annotations)\n";
    out << "  " << report.summary << "\n";
    for (const auto& a : report.assertions) {
        out << "  [" << outcome_name(a.outcome) << "] " << a.name;
        if (a.outcome == Outcome::annotation) {
            out << ": analytic-only, not machine-checked\n";
        } else {
            out << ": expected " << a.expected << ", actual " << a.actual << " (" << source_name(a.source) << ")\n";
        }
    }
    return out.str();
}

FiniteSpace five_point_space()
{
    std::vector<Rat> values;
    for (std::int64_t v = 0; v <= 4; ++v) {
        values.emplace_back(v);
    }
    const FiniteSpace base = line_space(values, [](const Rat&, const Rat&) { return false; });
    return base.with_relation(Relation(5, {{0, 0}, {1, 0}, {0, 2}, {3, 4}, {3, 0}, {4, 0}}));
}

SelfMap five_point_map() { return SelfMap({0, 0, 1, 0, 2}, 5); }

FiniteSpace orbit_space()
{
    return line_space({Rat(1, 3), Rat(1, 2), Rat(1), Rat(2)},
                      [](const Rat& x, const Rat& y) { return x * y <= x || x * y <= y; });
}

SelfMap orbit_map()
{
    // 1/3 -> 2, 1/2 -> 2, 1 -> 1, 2 -> 1/3
    return SelfMap({3, 3, 2, 0}, 4);
}

FiniteSpace leq_space(const std::vector<Rat>& values)
{
    return line_space(values, [](const Rat& x, const Rat& y) { return x <= y; });
}

std::vector<QuadExt> rational_product_points()
{
    constexpr auto d = rational_product_radicand;
    return {
        QuadExt::rational(Rat(0), d),
        QuadExt::rational(Rat(1), d),
        QuadExt::rational(Rat(2), d),
        QuadExt::rational(Rat(1, 2), d),
        QuadExt(Rat(0), Rat(1), d),
        QuadExt(Rat(1), Rat(1, 11), d),
    };
}

SampledModel<QuadExt> rational_product_model()
{
    return SampledModel<QuadExt>(
        rational_product_points(),
        [](const QuadExt& x) {
            return x.is_rational() ? x / Rat(3) : QuadExt::rational(Rat(0), x.radicand());
        },
        [](const QuadExt& x, const QuadExt& y) { return qext_is_rational(x * y); });
}

Relation rational_product_relation()
{
    const auto points = rational_product_points();
    std::vector<IndexPair> pairs;
    for (Index i = 0; i < points.size(); ++i) {
        for (Index j = 0; j < points.size(); ++j) {
            if (qext_is_rational(points[i] * points[j])) {
                pairs.emplace_back(i, j);
            }
        }
    }
    return Relation(points.size(), std::move(pairs));
}

Rat inner(const Vec2& a, const Vec2& b) { return a.x1 * b.x1 + a.x2 * b.x2; }

Vec2 special_point(std::uint64_t n)
{
    const auto nn = static_cast<std::int64_t>(n);
    return {Rat(1, nn), Rat(1, nn + 1)};
}

std::optional<std::uint64_t> special_index(const Vec2& p, std::uint64_t limit)
{
    if (p.x1.sign() <= 0 || p.x2.sign() <= 0) {
        return std::nullopt;
    }
    const Rat reciprocal = Rat(1) / p.x1;
    if (!reciprocal.is_integer() || reciprocal > Rat(static_cast<std::int64_t>(limit))) {
        return std::nullopt;
    }
    if (Rat(1) / p.x2 != reciprocal + Rat(1)) {
        return std::nullopt;
    }
    return reciprocal.numerator().convert_to<std::uint64_t>();
}

Vec2 plane_map(const Vec2& p, std::uint64_t limit)
{
    if (!special_index(p, limit)) {
        return {Rat(0), Rat(0)};
    }
    return {p.x1 * p.x2 / (p.x1 * p.x1 + p.x2 * p.x2), Rat(0)};
}

} // namespace orthofix
