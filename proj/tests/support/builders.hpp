#pragma once

#include "qaf/family.hpp"

#include <initializer_list>
#include <vector>

namespace qaf::testing {

inline SetFamily fam(std::initializer_list<std::initializer_list<Point>> sets, std::size_t universe = 0)
{
    std::vector<PointSet> v;
    for (auto s : sets) v.emplace_back(s);
    if (universe == 0) return SetFamily::from_sets(std::move(v));
    return SetFamily(std::move(v), universe);
}

/// All k-subsets of {0..n-1}.
SetFamily all_subsets(std::size_t n, std::size_t k);

/// `count` sets through `centre`, each with one private tail point.
SetFamily pencil(Point centre, std::size_t count);

}  // namespace qaf::testing
