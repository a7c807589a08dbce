#include "doctest.h"
#include "test_support.hpp"

#include "orthofix/oracle.hpp"
#include "orthofix/solver.hpp"

using namespace orthofix;

namespace {
// First generated instance with a certified orbit of at least `steps`
// nonzero moves from some weak element.
struct Found {
    FiniteSpace space;
    SelfMap map;
    Index start;
};

Found long_orbit(std::size_t steps)
{
    GenParams p;
    p.seed = 99;
    for (std::uint64_t draw = 0;; ++draw) {
        Rng rng(derive_seed(p.seed, draw));
        auto space = generate_space(p, rng);
        auto md = generate_map(p, space, rng);
        if (!md.map) {
            continue;
        }
        for (Index w : weak_orthogonal_elements(space)) {
            const auto tr = picard_solve(space, *md.map, w);
            if (tr.applications() >= steps) {
                return {space, *md.map, w};
            }
        }
    }
}
} // namespace

TEST_CASE("required iterations")
{
    CHECK(required_iterations(Rat(1, 2), Rat(1), Rat(1, 512)) == 10);
    CHECK(apriori_bound(Rat(1, 2), 10, Rat(1)) == Rat(1, 512));
    CHECK(apriori_bound(Rat(1, 2), 9, Rat(1)) > Rat(1, 512));
    CHECK(required_iterations(Rat(1, 3), Rat(0), Rat(1, 100)) == 0);
    CHECK(required_iterations(Rat(0), Rat(5), Rat(1)) == 1);
    CHECK(required_iterations(Rat(0), Rat(1, 2), Rat(1)) == 0);
    CHECK_THROWS_AS(required_iterations(Rat(1), Rat(1), Rat(1)), DomainError);
    CHECK_THROWS_AS(required_iterations(Rat(-1, 2), Rat(1), Rat(1)), DomainError);
    CHECK_THROWS_AS(required_iterations(Rat(1, 2), Rat(1), Rat(0)), DomainError);
    CHECK_THROWS_AS(required_iterations(Rat(1, 2), Rat(-1), Rat(1)), DomainError);

    test::Gen g(41);
    for (int trial = 0; trial < 200; ++trial) {
        const Rat k(g.range(0, 19), 20);
        const Rat d1(g.range(0, 40), g.range(1, 7));
        const Rat eps(1, g.range(1, 100000));
        const auto n = required_iterations(k, d1, eps);
        CHECK(apriori_bound(k, n, d1) <= eps);
        if (n > 0) {
            CHECK(apriori_bound(k, n - 1, d1) > eps);
        }
    }
}

TEST_CASE("Picard on the five-point space")
{
    const auto s = test::five_point();
    const auto t = test::five_point_t();

    const auto tr = picard_solve(s, t, 0);
    CHECK(tr.iterates == std::vector<Index>{0});
    CHECK(tr.converged);
    CHECK(tr.certified);
    CHECK(tr.fixed_point == std::optional<Index>(0));
    CHECK(tr.k == Rat(2, 3));
    CHECK(tr.stop == StopReason::fixed_point);
    CHECK(tr.applications() == 0);

    PicardOptions with_k;
    with_k.k = Rat(2, 3);
    with_k.eps = Rat(1, 1000);
    CHECK(picard_solve(s, t, 0, with_k).fixed_point == std::optional<Index>(0));

    PicardOptions too_small;
    too_small.k = Rat(1, 2);
    CHECK_THROWS_AS(picard_solve(s, t, 0, too_small), PreconditionError);
    too_small.trust_k = true;
    CHECK(picard_solve(s, t, 0, too_small).converged);

    CHECK_THROWS_AS(picard_solve(s, t, 4), PreconditionError);
    PicardOptions any;
    any.allow_any_start = true;
    const auto from4 = picard_solve(s, t, 4, any);
    CHECK(from4.iterates == std::vector<Index>{4, 2, 1, 0});
    CHECK(from4.applications() == 3);
    CHECK(from4.fixed_point == std::optional<Index>(0));
    CHECK_FALSE(from4.certified);
    // d(1,0) = 1 exceeds (2/3) d(2,1): the step inequality is not guaranteed off the weak elements
    CHECK(from4.step_distances[2] > from4.k * from4.step_distances[1]);

    any.max_iter = 1;
    const auto cut = picard_solve(s, t, 4, any);
    CHECK(cut.iterates == std::vector<Index>{4, 2});
    CHECK_FALSE(cut.converged);
    CHECK_FALSE(cut.fixed_point.has_value());
    CHECK(cut.stop == StopReason::max_iter);

    PicardOptions bad;
    bad.k = Rat(1);
    CHECK_THROWS_AS(picard_solve(s, t, 0, bad), DomainError);
    bad.k.reset();
    bad.eps = Rat(0);
    CHECK_THROWS_AS(picard_solve(s, t, 0, bad), DomainError);
    CHECK_THROWS_AS(picard_solve(s, t, 7), InputError);
}

TEST_CASE("identity map converges at once with a trusted constant")
{
    const auto s = test::line_space({0, 2, 5}, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 1}});
    const auto id = SelfMap::identity(3);
    CHECK_THROWS_AS(picard_solve(s, id, 0), PreconditionError);
    PicardOptions o;
    o.k = Rat(0);
    o.trust_k = true;
    for (Index z : weak_orthogonal_elements(s)) {
        const auto tr = picard_solve(s, id, z, o);
        CHECK(tr.iterates == std::vector<Index>{z});
        CHECK(tr.fixed_point == std::optional<Index>(z));
        CHECK(certify_fixed_point(s, id, z));
    }
}

TEST_CASE("fixed point certification")
{
    const auto s = test::five_point();
    CHECK(certify_fixed_point(s, test::five_point_t(), 0));
    CHECK_FALSE(certify_fixed_point(s, test::five_point_t(), 2));
}

TEST_CASE("tolerance stop and certificate failure")
{
    const auto f = long_orbit(3);
    const auto full = picard_solve(f.space, f.map, f.start);
    REQUIRE(full.applications() >= 3);

    PicardOptions o;
    o.eps = full.apriori_bounds[1];
    const auto early = picard_solve(f.space, f.map, f.start, o);
    CHECK(early.stop == StopReason::tolerance);
    CHECK_FALSE(early.converged);
    CHECK(early.iterates.size() <= 2);
    CHECK(early.apriori_bounds.back() <= *o.eps);

    PicardOptions wrong;
    wrong.k = Rat(0);
    wrong.trust_k = true;
    CHECK_THROWS_AS(picard_solve(f.space, f.map, f.start, wrong), CertificateError);
}

TEST_CASE("hypotheses")
{
    const auto s = test::five_point();
    const auto t = test::five_point_t();
    const auto h = hypothesis_check(s, t);
    CHECK(h.all_hold);
    CHECK(h.has_weak_element);
    CHECK(h.preserving);
    CHECK(h.contraction_admissible);
    CHECK(h.minimal_k == std::optional<Rat>(Rat(2, 3)));
    CHECK(h.orbital_completeness);
    CHECK(h.orbital_continuity);
    CHECK(hypothesis_check(s, t, HypothesisMode::o1).all_hold);

    const auto reduced = s.with_relation(s.relation().without_pair({3, 4}));
    const auto hr = hypothesis_check(reduced, t);
    CHECK(hr.weak_elements == std::vector<Index>{0});
    CHECK(hr.all_hold);
    CHECK(check_contraction(ContractionKind::generalized_perp, reduced, t).pairs_scanned == 9);

    const auto empty = s.with_relation(Relation::empty(5));
    const auto he = hypothesis_check(empty, t);
    CHECK_FALSE(he.has_weak_element);
    CHECK_FALSE(he.all_hold);

    CHECK(parse_mode("O1") == HypothesisMode::o1);
    CHECK(parse_mode("orbital-continuity") == HypothesisMode::orbital_continuity);
    CHECK_THROWS_AS(parse_mode("continuity"), InputError);
}

TEST_CASE("O1 fails when the limit is not related to itself")
{
    // 0 is weak, T = constant 1, and 1 is not related to 1. A weak element is
    // related to itself, so under preservation every iterate is too; the O1
    // failure therefore comes with a preservation failure.
    const auto s = test::line_space({0, 1}, {{0, 0}, {0, 1}});
    const auto t = SelfMap::constant(2, 1);
    const auto h = hypothesis_check(s, t, HypothesisMode::o1);
    CHECK_FALSE(h.o1_mode_holds);
    CHECK(h.o1_witness == std::optional<Index>(0));
    CHECK_FALSE(h.all_hold);
    CHECK_FALSE(hypothesis_check(s, t).preserving);
    CHECK(hypothesis_check(s, t).contraction_admissible);
}

TEST_CASE("trace invariants on random theorem instances")
{
    GenParams p;
    p.seed = 2024;
    std::size_t checked = 0;
    for (std::uint64_t draw = 0; draw < 300; ++draw) {
        Rng rng(derive_seed(p.seed, draw));
        const auto space = generate_space(p, rng);
        const auto md = generate_map(p, space, rng);
        if (!md.map) {
            continue;
        }
        const auto fixed = brute_force_fixed_points(space, *md.map);
        REQUIRE(fixed.size() == 1);
        CHECK(hypothesis_check(space, *md.map, HypothesisMode::o1).o1_mode_holds);
        for (Index w : weak_orthogonal_elements(space)) {
            const auto tr = picard_solve(space, *md.map, w);
            ++checked;
            CHECK(tr.certified);
            CHECK(tr.converged);
            CHECK(tr.fixed_point == std::optional<Index>(fixed.front()));
            const Rat& d1 = tr.step_distances.front();
            for (std::size_t n = 0; n < tr.iterates.size(); ++n) {
                CHECK(tr.iterates[n] == (n == 0 ? w : (*md.map)(tr.iterates[n - 1])));
                CHECK(tr.step_distances[n] == space.distance(tr.iterates[n], (*md.map)(tr.iterates[n])));
                if (n + 1 < tr.step_distances.size()) {
                    CHECK(tr.step_distances[n + 1] <= tr.k * tr.step_distances[n]);
                }
                CHECK(tr.step_distances[n] <= pow(tr.k, n) * d1);
                for (std::size_t m = n + 1; m < tr.iterates.size(); ++m) {
                    CHECK(space.distance(tr.iterates[n], tr.iterates[m]) <= pow(tr.k, n) / (Rat(1) - tr.k) * d1);
                }
                CHECK(space.distance(tr.iterates[n], *tr.fixed_point) <= tr.apriori_bounds[n]);
            }
            CHECK(!audit_trace(space, tr).has_value());
        }
    }
    CHECK(checked > 100);
}
