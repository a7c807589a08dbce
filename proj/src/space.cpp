#include "orthofix/space.hpp"

#include <algorithm>

namespace orthofix {

Relation::Relation(std::size_t n, std::vector<IndexPair> pairs)
    : n_(n), pairs_(std::move(pairs)), directed_(n * n, 0)
{
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    for (const auto& [i, j] : pairs_) {
        if (i >= n || j >= n) {
            throw InputError("relation pair (" + std::to_string(i) + "," + std::to_string(j)
                             + ") index out of range for " + std::to_string(n) + " points");
        }
        directed_[i * n + j] = 1;
    }
}

Relation Relation::full(std::size_t n)
{
    std::vector<IndexPair> pairs;
    pairs.reserve(n * n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    return Relation(n, std::move(pairs));
}

Relation Relation::with_pair(IndexPair p) const
{
    auto pairs = pairs_;
    pairs.push_back(p);
    return Relation(n_, std::move(pairs));
}

Relation Relation::without_pair(IndexPair p) const
{
    auto pairs = pairs_;
    std::erase(pairs, p);
    return Relation(n_, std::move(pairs));
}

SelfMap::SelfMap(std::vector<Index> images, std::size_t n) : images_(std::move(images))
{
    if (images_.size() != n) {
        throw InputError("map has " + std::to_string(images_.size()) + " images for a " + std::to_string(n)
                         + "-point space");
    }
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] >= n) {
            throw InputError("map image of point " + std::to_string(i) + " is " + std::to_string(images_[i])
                             + ": index out of range");
        }
    }
}

SelfMap SelfMap::identity(std::size_t n)
{
    std::vector<Index> images(n);
    for (Index i = 0; i < n; ++i) {
        images[i] = i;
    }
    return SelfMap(std::move(images), n);
}

SelfMap SelfMap::constant(std::size_t n, Index target) { return SelfMap(std::vector<Index>(n, target), n); }

} // namespace orthofix
