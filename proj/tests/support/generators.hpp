#pragma once

#include "qaf/family.hpp"

#include <cstdint>
#include <random>

namespace qaf::testing {

using Rng = std::mt19937_64;

/// Distinct nonempty random sets over {0..points-1}; 1..max_sets members
/// of size 1..max_size. The universe is `points`.
SetFamily random_family(Rng& rng, std::size_t points, std::size_t max_sets, std::size_t max_size);

/// Random family with at least two members that has the t-property.
SetFamily random_t_family(Rng& rng, std::size_t points, std::size_t max_sets, std::size_t max_size, std::size_t t);

/// Linear family made of `pencils` pencils (sets through a shared centre
/// with pairwise disjoint tails) plus `extras` further sets, sized at
/// least `min_size`. Every two members share at most one point.
SetFamily linear_pencil_family(Rng& rng, std::size_t pencils, std::size_t extras, std::size_t min_size);

}  // namespace qaf::testing
