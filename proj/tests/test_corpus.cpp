#include "doctest.h"

#include "orthofix/corpus.hpp"
#include "orthofix/relational.hpp"

using namespace orthofix;

TEST_CASE("registry")
{
    const auto cases = list_cases();
    std::vector<std::string> names;
    for (const auto& c : cases) {
        names.push_back(c.name);
    }
    CHECK(names
          == std::vector<std::string>{"five-point", "rational-product", "r2-counterexample", "leq-relation",
                                      "orbit-space"});
    CHECK(list_cases().size() == cases.size());
    CHECK_THROWS_AS(run_case("nope"), InputError);
}

TEST_CASE("every case passes and is deterministic")
{
    for (const auto& info : list_cases()) {
        CAPTURE(info.name);
        const auto r = run_case(info.name);
        CHECK(r.passed());
        CHECK(r.name == info.name);
        CHECK_FALSE(r.assertions.empty());
        CHECK(render_text(r) == render_text(run_case(info.name)));
        for (const auto& a : r.assertions) {
            CAPTURE(a.name);
            if (a.outcome == Outcome::pass) {
                CHECK(a.expected == a.actual);
            }
        }
    }
}

TEST_CASE("analytic claims are annotations, not passes")
{
    CHECK(run_case("leq-relation").annotations() >= 1);
    CHECK(run_case("orbit-space").annotations() >= 1);
}

TEST_CASE("plane map near the origin")
{
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        const Vec2 p = special_point(n);
        const Vec2 q = special_point(n + 1);
        CHECK(inner(p, q) > Rat(0));
        const Rat nn(static_cast<std::int64_t>(n));
        const Rat expected = nn * (nn + Rat(1)) / (Rat(2) * nn * nn + Rat(2) * nn + Rat(1));
        const Vec2 f = plane_map(p, 1000);
        CHECK(f.x1 == expected);
        CHECK(f.x2 == Rat(0));
        CHECK(abs(f.x1 - Rat(1, 2)) == Rat(1) / (Rat(2) * (Rat(2) * nn * nn + Rat(2) * nn + Rat(1))));
    }
    CHECK(plane_map(special_point(1), 10).x1 == Rat(2, 5));
    CHECK(plane_map(special_point(2), 10).x1 == Rat(6, 13));
    CHECK(plane_map({Rat(0), Rat(0)}, 1000) == Vec2{Rat(0), Rat(0)});
    CHECK(plane_map({Rat(1, 2), Rat(1, 5)}, 1000) == Vec2{Rat(0), Rat(0)});
    CHECK(special_index(special_point(37), 1000) == std::optional<std::uint64_t>(37));
    CHECK_FALSE(special_index({Rat(1, 3), Rat(1, 5)}, 1000).has_value());
    CHECK_FALSE(special_index(special_point(1001), 1000).has_value());
}

TEST_CASE("rational-product relation")
{
    const auto rel = rational_product_relation();
    const auto pts = rational_product_points();
    REQUIRE(rel.universe_size() == pts.size());
    for (Index i = 0; i < pts.size(); ++i) {
        for (Index j = 0; j < pts.size(); ++j) {
            CHECK(rel.holds(i, j) == qext_is_rational(pts[i] * pts[j]));
        }
    }
    // zero is orthogonal to everything
    CHECK(strong_orthogonal_elements(rel) == std::vector<Index>{0});
}
