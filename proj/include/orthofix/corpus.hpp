#pragma once

#include "orthofix/contraction.hpp"
#include "orthofix/quad_ext.hpp"
#include "orthofix/space.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orthofix {

/// Where an expected value comes from.
enum class Source {
    published,    ///< stated in the worked example itself
    closed_form,  ///< computed independently in exact arithmetic
    definitional, ///< follows directly from a definition
};

enum class Outcome { pass, fail, annotation };

std::string_view source_name(Source s);
std::string_view outcome_name(Outcome o);

struct Assertion {
    std::string name;
    Source source = Source::published;
    std::string expected;
    std::string actual;
    Outcome outcome = Outcome::pass;
};

struct CaseReport {
    std::string name;
    std::string summary;
    std::vector<Assertion> assertions;

    [[nodiscard]] std::size_t failed() const;
    [[nodiscard]] std::size_t annotations() const;
    [[nodiscard]] bool passed() const { return failed() == 0; }
};

struct CaseInfo {
    std::string name;
    std::string summary;
};

/// Registry in stable order.
std::vector<CaseInfo> list_cases();

/// Throws InputError for an unknown case name.
CaseReport run_case(std::string_view name);

std::string render_text(const CaseReport& report);

// --- five-point space: X = {0,1,2,3,4}, usual distance,
//     R = {(0,0),(1,0),(0,2),(3,4),(3,0),(4,0)}, T = [0,0,1,0,2]
FiniteSpace five_point_space();
SelfMap five_point_map();

// --- orbit space: {1/3, 1/2, 1, 2} with x ⊥ y iff (xy <= x) or (xy <= y),
//     T = 2 on (0,1), 1 at 1, 1/3 otherwise
FiniteSpace orbit_space();
SelfMap orbit_map();

/// Points of the real line (labelled by their values) with the usual
/// distance and x ⊥ y iff x <= y.
FiniteSpace leq_space(const std::vector<Rat>& values);

// --- rational-product sample in Q(sqrt(11)): x ⊥ y iff xy is rational,
//     T x = x/3 on rationals and 0 on irrationals
inline constexpr std::int64_t rational_product_radicand = 11;
std::vector<QuadExt> rational_product_points();
SampledModel<QuadExt> rational_product_model();
/// The product relation on the sample as a finite relation.
Relation rational_product_relation();

// --- the plane map with a discontinuity at the origin
struct Vec2 {
    Rat x1;
    Rat x2;
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

Rat inner(const Vec2& a, const Vec2& b);
/// (1/n, 1/(n+1)), n >= 1.
Vec2 special_point(std::uint64_t n);
/// n if p = (1/n, 1/(n+1)) for some 1 <= n <= limit, decided by exact reciprocals.
std::optional<std::uint64_t> special_index(const Vec2& p, std::uint64_t limit);
/// F(p) = (x1 x2 / (x1² + x2²), 0) at special points (n <= limit), (0,0) elsewhere.
Vec2 plane_map(const Vec2& p, std::uint64_t limit);

} // namespace orthofix
