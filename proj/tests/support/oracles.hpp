#pragma once

// Deliberately naive reference implementations over plain integer vectors.
// They share no code with the library beyond the family container.

#include "qaf/family.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace qaf::testing {

using Set = std::vector<std::uint32_t>;  // ascending

std::vector<Set> as_sets(const SetFamily& f);

/// k-fold pairwise intersection, empty results dropped, duplicates merged.
std::set<Set> naive_level(const SetFamily& f, std::size_t k);

bool naive_bracket(const SetFamily& f, std::size_t d, std::size_t m);
bool naive_brace(const SetFamily& f, std::size_t d, std::size_t m);
bool naive_pq(const SetFamily& f, std::size_t p, std::size_t q);

/// Smallest hitting set size by enumerating point subsets in size order.
std::size_t naive_tau(const SetFamily& f);

/// Some set of at most t points outside `avoid` meeting every set listed.
bool naive_hit(const std::vector<Set>& sets, const Set& avoid, std::size_t t, std::size_t universe);

bool naive_t_property(const SetFamily& f, std::size_t t);

/// Codimension from the definition: the minimal proper set containing w,
/// found by intersecting every nonempty subfamily, then the deepest level
/// holding it. Needs |F| <= 16.
std::size_t naive_codim(const SetFamily& f, const Set& w);

/// Every nonempty intersection of a nonempty subfamily. Needs |F| <= 16.
std::set<Set> naive_proper_sets(const SetFamily& f);

/// Largest family of subsets of {0..n-1} of size <= smax with the
/// [d,m]-property and the t-property, over all subfamilies of candidates.
/// Feasible for at most about 16 candidate sets.
std::size_t naive_max_b(std::size_t d, std::size_t m, std::size_t t, std::size_t n, std::size_t smax);

}  // namespace qaf::testing
