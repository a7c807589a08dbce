#pragma once

#include "orthofix/space.hpp"

#include <string>
#include <vector>

namespace orthofix {

struct MetricViolation {
    std::string axiom;            ///< "zero-diagonal", "symmetry", "positivity" or "triangle"
    std::vector<Index> witness;   ///< (i), (i,j) or (i,j,k) with d(i,j) > d(i,k) + d(k,j)
    std::vector<std::string> values;
};

struct ValidationReport {
    bool ok = true;
    std::vector<MetricViolation> violations;
};

/// Checks every metric axiom exhaustively and lists each violation with its
/// witness. Throws InputError if the matrix does not match the point count.
template <class Scalar>
ValidationReport validate_metric(const SquareMatrix<Scalar>& d, std::size_t point_count)
{
    const std::size_t n = d.size();
    if (n != point_count) {
        throw InputError("metric dimension " + std::to_string(n) + " does not match point count "
                         + std::to_string(point_count));
    }
    ValidationReport report;
    auto add = [&report](std::string axiom, std::vector<Index> witness, std::vector<std::string> values) {
        report.violations.push_back({std::move(axiom), std::move(witness), std::move(values)});
    };

    for (Index i = 0; i < n; ++i) {
        if (d(i, i).sign() != 0) {
            add("zero-diagonal", {i}, {d(i, i).to_string()});
        }
    }
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            if (!(d(i, j) == d(j, i))) {
                add("symmetry", {i, j}, {d(i, j).to_string(), d(j, i).to_string()});
            }
        }
    }
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            if (i != j && d(i, j).sign() <= 0) {
                add("positivity", {i, j}, {d(i, j).to_string()});
            }
        }
    }
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            for (Index k = 0; k < n; ++k) {
                if (k == i || k == j) {
                    continue;
                }
                const Scalar via = d(i, k) + d(k, j);
                if (d(i, j) > via) {
                    add("triangle", {i, j, k}, {d(i, j).to_string(), via.to_string()});
                }
            }
        }
    }
    report.ok = report.violations.empty();
    return report;
}

template <class Scalar>
ValidationReport validate_metric(const BasicFiniteSpace<Scalar>& space)
{
    return validate_metric(space.metric(), space.size());
}

} // namespace orthofix
