#pragma once

#include "qaf/family.hpp"

#include <cstdint>
#include <optional>
#include <span>

namespace qaf {

/// Point set hitting every member of the family it was verified against.
struct Transversal {
    PointSet points;
    /// Fingerprint of the family it was verified against.
    std::uint64_t verified_against = 0;

    [[nodiscard]] std::size_t size() const { return points.size(); }
};

struct TauResult {
    std::size_t tau = 0;
    Transversal witness;
    std::uint64_t nodes_explored = 0;
};

/// Order-sensitive fingerprint of a list of sets.
std::uint64_t fingerprint(std::span<const PointSet> sets);
inline std::uint64_t fingerprint(const SetFamily& f) { return fingerprint(f.sets()); }

/// True when `points` meets every set.
bool hits_all(std::span<const PointSet> sets, const PointSet& points);
inline bool hits_all(const SetFamily& f, const PointSet& points) { return hits_all(f.sets(), points); }

/// Minimum transversal by branch and bound. Throws InvalidArgument on an
/// empty list or when a member is empty ("unhittable member").
TauResult tau_exact(std::span<const PointSet> sets);
inline TauResult tau_exact(const SetFamily& f) { return tau_exact(f.sets()); }

/// A minimum transversal when one of size <= t exists. An empty list is
/// hit by the empty set. Throws on an empty member.
std::optional<Transversal> has_t_transversal(std::span<const PointSet> sets, std::size_t t);
inline std::optional<Transversal> has_t_transversal(const SetFamily& f, std::size_t t)
{
    return has_t_transversal(f.sets(), t);
}

/// Greedy transversal: repeatedly the point meeting most unhit members,
/// lowest id on ties.
Transversal tau_greedy(std::span<const PointSet> sets);
inline Transversal tau_greedy(const SetFamily& f) { return tau_greedy(f.sets()); }

/// Exhaustive oracle: smallest size in 1..cap of a hitting point subset,
/// trying subsets of the covered points in lexicographic order. Test use.
std::optional<std::size_t> brute_force_tau(std::span<const PointSet> sets, std::size_t cap);
inline std::optional<std::size_t> brute_force_tau(const SetFamily& f, std::size_t cap)
{
    return brute_force_tau(f.sets(), cap);
}

/// Transversal of size <= t using no forbidden point. Absent when a member
/// lies inside `forbidden`.
std::optional<Transversal> min_hitting_avoiding(std::span<const PointSet> sets, const PointSet& forbidden,
                                                std::size_t t);
inline std::optional<Transversal> min_hitting_avoiding(const SetFamily& f, const PointSet& forbidden, std::size_t t)
{
    return min_hitting_avoiding(f.sets(), forbidden, t);
}

}  // namespace qaf
