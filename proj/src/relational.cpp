#include "orthofix/relational.hpp"

namespace orthofix {

std::string_view verdict_name(OrthoVerdict v)
{
    switch (v) {
    case OrthoVerdict::o_set:
        return "O-set";
    case OrthoVerdict::ow_set_only:
        return "O_w-set-only";
    case OrthoVerdict::neither:
        return "neither";
    }
    return "neither";
}

std::vector<Index> strong_orthogonal_elements(const Relation& rel)
{
    const std::size_t n = rel.universe_size();
    std::vector<Index> out;
    for (Index x = 0; x < n; ++x) {
        bool left_all = true;
        bool right_all = true;
        for (Index y = 0; y < n && (left_all || right_all); ++y) {
            left_all = left_all && rel.holds(x, y);
            right_all = right_all && rel.holds(y, x);
        }
        if (left_all || right_all) {
            out.push_back(x);
        }
    }
    return out;
}

std::vector<Index> weak_orthogonal_elements(const Relation& rel)
{
    const std::size_t n = rel.universe_size();
    std::vector<Index> out;
    for (Index x = 0; x < n; ++x) {
        bool all = true;
        for (Index y = 0; y < n && all; ++y) {
            all = rel.related(x, y);
        }
        if (all) {
            out.push_back(x);
        }
    }
    return out;
}

OrthoClassification classify_orthogonality(const Relation& rel)
{
    OrthoClassification c;
    c.strong_elements = strong_orthogonal_elements(rel);
    c.weak_elements = weak_orthogonal_elements(rel);
    if (!c.strong_elements.empty()) {
        c.verdict = OrthoVerdict::o_set;
    } else if (!c.weak_elements.empty()) {
        c.verdict = OrthoVerdict::ow_set_only;
    }
    return c;
}

SequenceCheck is_ow_sequence(const Relation& rel, std::span<const Index> seq)
{
    for (Index i : seq) {
        if (i >= rel.universe_size()) {
            throw InputError("sequence index " + std::to_string(i) + " out of range");
        }
    }
    return is_ow_sequence(seq, [&rel](Index a, Index b) { return rel.holds(a, b); });
}

PreservationReport is_ow_preserving(const Relation& rel, const SelfMap& map)
{
    PreservationReport report;
    // The symmetric-closure premise is covered by the stored pairs because
    // the conclusion is symmetric in (i, j).
    for (const auto& [i, j] : rel.pairs()) {
        if (!rel.related(map(i), map(j))) {
            report.violations.emplace_back(i, j);
        }
    }
    report.preserving = report.violations.empty();
    return report;
}

OrbitInfo orbit(const SelfMap& map, Index start)
{
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> first_seen(map.size(), unseen);
    std::vector<Index> seq;
    Index x = start;
    while (first_seen[x] == unseen) {
        first_seen[x] = seq.size();
        seq.push_back(x);
        x = map(x);
    }
    OrbitInfo info;
    const auto split = static_cast<std::ptrdiff_t>(first_seen[x]);
    info.prefix.assign(seq.begin(), seq.begin() + split);
    info.cycle.assign(seq.begin() + split, seq.end());
    info.enters_fixed_point = info.cycle.size() == 1;
    return info;
}

Index OrbitInfo::at(std::size_t n) const
{
    if (n < prefix.size()) {
        return prefix[n];
    }
    return cycle[(n - prefix.size()) % cycle.size()];
}

} // namespace orthofix
