#pragma once

#include "qaf/point_set.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qaf {

/// How to treat repeated sets when building a family from raw input.
enum class DuplicatePolicy { Reject, Merge };

/// Ordered collection of distinct nonempty point sets over the universe
/// {0..universe-1}. The position of a set is its stable member index.
class SetFamily {
public:
    SetFamily() = default;

    /// Validates the invariants; throws InvalidArgument on an empty member,
    /// a point outside the universe, or (under Reject) a repeated set.
    /// Under Merge, later copies are dropped and their input positions are
    /// appended to `merged` when given.
    SetFamily(std::vector<PointSet> sets, std::size_t universe,
              DuplicatePolicy policy = DuplicatePolicy::Reject,
              std::vector<std::size_t>* merged = nullptr);

    /// Universe inferred as 1 + the largest point id.
    static SetFamily from_sets(std::vector<PointSet> sets);

    [[nodiscard]] std::size_t size() const { return sets_.size(); }
    [[nodiscard]] bool empty() const { return sets_.empty(); }
    [[nodiscard]] std::size_t universe() const { return universe_; }
    [[nodiscard]] const PointSet& operator[](std::size_t i) const { return sets_[i]; }
    [[nodiscard]] std::span<const PointSet> sets() const { return sets_; }
    [[nodiscard]] auto begin() const { return sets_.begin(); }
    [[nodiscard]] auto end() const { return sets_.end(); }

    /// Union of all members.
    [[nodiscard]] PointSet covered_points() const;
    /// Index of `s` among the members, or size() when absent.
    [[nodiscard]] std::size_t index_of(const PointSet& s) const;
    [[nodiscard]] bool contains(const PointSet& s) const { return index_of(s) != size(); }

    /// Family without member `index`; universe is kept.
    [[nodiscard]] SetFamily without(std::size_t index) const;
    /// Members at the given indices, in the given order.
    [[nodiscard]] SetFamily select(std::span<const std::size_t> indices) const;
    /// True when both families hold the same sets, in any order.
    [[nodiscard]] bool same_members(const SetFamily& other) const;

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    std::vector<PointSet> sets_;
    std::size_t universe_ = 0;
};

std::ostream& operator<<(std::ostream& os, const SetFamily& f);

/// Subset of a family's members, by index. The parent family is passed
/// alongside wherever the members themselves are needed.
struct Subfamily {
    std::vector<std::size_t> indices;  // ascending

    [[nodiscard]] std::size_t size() const { return indices.size(); }
    [[nodiscard]] bool empty() const { return indices.empty(); }
    friend bool operator==(const Subfamily&, const Subfamily&) = default;
};

/// Intersection of the subfamily's members; empty for an empty subfamily.
PointSet common_points(const SetFamily& f, const Subfamily& g);

/// Nonempty intersection of a nonempty subfamily, with one witness.
struct ProperSet {
    PointSet points;
    Subfamily witness;
};

/// One step of iterated intersection: all distinct nonempty A_i ∩ A_j over
/// distinct members i < j, in order of first appearance.
SetFamily intersect_step(const SetFamily& f);

/// F^k: intersect_step applied k times (F^0 = F).
SetFamily iterate(const SetFamily& f, std::size_t k);

/// F^0, F^1, ... up to and including the first empty level.
std::vector<SetFamily> intersection_levels(const SetFamily& f);

/// Members containing `w` (the pencil G_W). Throws on empty `w`.
Subfamily g_sets(const SetFamily& f, const PointSet& w);

/// Members of F^k containing `w` (G_W^k). Throws on empty `w`.
SetFamily g_sets_k(const SetFamily& f, std::size_t k, const PointSet& w);

/// All proper sets, computed as the intersection closure of the members.
/// Members come first in index order, then new sets in discovery order.
std::vector<ProperSet> proper_sets(const SetFamily& f);

/// Depth of the minimal proper set containing `w` in the iterated
/// intersection hierarchy: the largest k with B ∈ F^{k-1}. Zero when no
/// member contains `w`. Throws on empty `w`.
std::size_t codim(const SetFamily& f, const PointSet& w);

/// Length of the longest strictly increasing chain of proper sets starting
/// at `b`. Throws when `b` is not a proper set of `f`.
std::size_t codim_chain(const SetFamily& f, const PointSet& b);

}  // namespace qaf
