#pragma once

#include "orthofix/errors.hpp"
#include "orthofix/rat.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orthofix {

using Index = std::size_t;
using IndexPair = std::pair<Index, Index>;

/// Dense row-major n x n matrix.
template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    SquareMatrix(std::size_t n, const T& fill) : n_(n), data_(n * n, fill) {}

    /// Throws InputError if `rows` is ragged or not square.
    static SquareMatrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        SquareMatrix m;
        m.n_ = rows.size();
        m.data_.reserve(m.n_ * m.n_);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.n_) {
                throw InputError("metric row " + std::to_string(i) + " has " + std::to_string(rows[i].size())
                                 + " entries, expected " + std::to_string(m.n_));
            }
            m.data_.insert(m.data_.end(), rows[i].begin(), rows[i].end());
        }
        return m;
    }

    [[nodiscard]] std::size_t size() const { return n_; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

/// A directed binary relation on {0, ..., n-1}, stored as its ordered pairs.
///
/// Nothing is assumed about reflexivity, symmetry or transitivity.
/// `holds(i, j)` is the directed relation i ⊥ j; `related(i, j)` is the
/// symmetric closure evaluated at query time.
class Relation {
public:
    Relation() = default;
    /// Throws InputError for any pair with an index >= n. Duplicates are merged.
    Relation(std::size_t n, std::vector<IndexPair> pairs);

    static Relation full(std::size_t n);
    static Relation empty(std::size_t n) { return Relation(n, {}); }

    [[nodiscard]] std::size_t universe_size() const { return n_; }
    /// Sorted, duplicate-free ordered pairs.
    [[nodiscard]] const std::vector<IndexPair>& pairs() const { return pairs_; }

    [[nodiscard]] bool holds(Index i, Index j) const { return directed_[i * n_ + j] != 0; }
    [[nodiscard]] bool related(Index i, Index j) const { return holds(i, j) || holds(j, i); }

    [[nodiscard]] Relation with_pair(IndexPair p) const;
    [[nodiscard]] Relation without_pair(IndexPair p) const;

    friend bool operator==(const Relation& a, const Relation& b) { return a.n_ == b.n_ && a.pairs_ == b.pairs_; }

private:
    std::size_t n_ = 0;
    std::vector<IndexPair> pairs_;
    std::vector<unsigned char> directed_;
};

/// A finite metric space with an orthogonality relation.
///
/// Construction checks shape only (square metric matching the label count,
/// relation indices in range, unique labels). Whether the matrix is a metric
/// is reported by validate_metric().
template <class Scalar>
class BasicFiniteSpace {
public:
    using scalar_type = Scalar;

    BasicFiniteSpace(std::vector<std::string> labels, SquareMatrix<Scalar> metric, Relation relation)
        : labels_(std::move(labels)), metric_(std::move(metric)), relation_(std::move(relation))
    {
        if (metric_.size() != labels_.size()) {
            throw InputError("metric is " + std::to_string(metric_.size()) + "x" + std::to_string(metric_.size())
                             + " but there are " + std::to_string(labels_.size()) + " points");
        }
        if (relation_.universe_size() != labels_.size()) {
            throw InputError("relation universe does not match point count");
        }
        if (labels_.empty()) {
            throw InputError("a space needs at least one point");
        }
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (labels_[i] == labels_[j]) {
                    throw InputError("duplicate point label '" + labels_[i] + "'");
                }
            }
        }
    }

    [[nodiscard]] std::size_t size() const { return labels_.size(); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const std::string& label(Index i) const { return labels_.at(i); }
    [[nodiscard]] const SquareMatrix<Scalar>& metric() const { return metric_; }
    [[nodiscard]] const Relation& relation() const { return relation_; }
    [[nodiscard]] const Scalar& distance(Index i, Index j) const { return metric_(i, j); }

    [[nodiscard]] std::optional<Index> index_of(const std::string& label) const
    {
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i] == label) {
                return i;
            }
        }
        return std::nullopt;
    }

    [[nodiscard]] BasicFiniteSpace with_relation(Relation relation) const
    {
        return BasicFiniteSpace(labels_, metric_, std::move(relation));
    }

    void require_index(Index i) const
    {
        if (i >= size()) {
            throw InputError("index " + std::to_string(i) + " out of range for a " + std::to_string(size())
                             + "-point space");
        }
    }

private:
    std::vector<std::string> labels_;
    SquareMatrix<Scalar> metric_;
    Relation relation_;
};

using FiniteSpace = BasicFiniteSpace<Rat>;

/// A total self map of a finite space, as an image table.
class SelfMap {
public:
    SelfMap() = default;
    /// Throws InputError if any image is outside {0, ..., n-1}.
    SelfMap(std::vector<Index> images, std::size_t n);

    static SelfMap identity(std::size_t n);
    static SelfMap constant(std::size_t n, Index target);

    [[nodiscard]] std::size_t size() const { return images_.size(); }
    [[nodiscard]] Index operator()(Index x) const { return images_[x]; }
    [[nodiscard]] const std::vector<Index>& images() const { return images_; }

    friend bool operator==(const SelfMap&, const SelfMap&) = default;

private:
    std::vector<Index> images_;
};

/// Throws InputError unless `map` is a total self map of `space`.
template <class Scalar>
void require_compatible(const BasicFiniteSpace<Scalar>& space, const SelfMap& map)
{
    if (map.size() != space.size()) {
        throw InputError("map has " + std::to_string(map.size()) + " images for a " + std::to_string(space.size())
                         + "-point space");
    }
}

/// Orthogonally related: i ⊥ j or j ⊥ i. Throws InputError for out-of-range indices.
template <class Scalar>
bool related(const BasicFiniteSpace<Scalar>& space, Index i, Index j)
{
    space.require_index(i);
    space.require_index(j);
    return space.relation().related(i, j);
}

} // namespace orthofix
