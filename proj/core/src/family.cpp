#include "qaf/family.hpp"

#include "qaf/errors.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

namespace qaf {

SetFamily::SetFamily(std::vector<PointSet> sets, std::size_t universe, DuplicatePolicy policy,
                     std::vector<std::size_t>* merged)
    : universe_(universe)
{
    if (universe > PointSet::kCapacity)
        throw InvalidArgument("universe " + std::to_string(universe) + " exceeds capacity " +
                              std::to_string(PointSet::kCapacity));
    std::unordered_set<PointSet> seen;
    sets_.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto& s = sets[i];
        if (s.empty()) throw InvalidArgument("member " + std::to_string(i) + " is empty");
        if (s.max() >= universe)
            throw InvalidArgument("member " + std::to_string(i) + " has point " + std::to_string(s.max()) +
                                  " outside universe " + std::to_string(universe));
        if (!seen.insert(s).second) {
            if (policy == DuplicatePolicy::Reject)
                throw InvalidArgument("member " + std::to_string(i) + " duplicates an earlier set {" + s.to_string() +
                                      "}");
            if (merged != nullptr) merged->push_back(i);
            continue;
        }
        sets_.push_back(s);
    }
}

SetFamily SetFamily::from_sets(std::vector<PointSet> sets)
{
    std::size_t universe = 0;
    for (const auto& s : sets)
        if (!s.empty()) universe = std::max<std::size_t>(universe, std::size_t{s.max()} + 1);
    return SetFamily(std::move(sets), universe);
}

PointSet SetFamily::covered_points() const
{
    PointSet u;
    for (const auto& s : sets_) u |= s;
    return u;
}

std::size_t SetFamily::index_of(const PointSet& s) const
{
    auto it = std::find(sets_.begin(), sets_.end(), s);
    return static_cast<std::size_t>(it - sets_.begin());
}

SetFamily SetFamily::without(std::size_t index) const
{
    SetFamily out;
    out.universe_ = universe_;
    out.sets_.reserve(sets_.size());
    for (std::size_t i = 0; i < sets_.size(); ++i)
        if (i != index) out.sets_.push_back(sets_[i]);
    return out;
}

SetFamily SetFamily::select(std::span<const std::size_t> indices) const
{
    SetFamily out;
    out.universe_ = universe_;
    out.sets_.reserve(indices.size());
    for (auto i : indices) out.sets_.push_back(sets_.at(i));
    return out;
}

bool SetFamily::same_members(const SetFamily& other) const
{
    if (size() != other.size()) return false;
    auto a = sets_;
    auto b = other.sets_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::ostream& operator<<(std::ostream& os, const SetFamily& f)
{
    os << '{';
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i > 0) os << ',';
        os << f[i];
    }
    return os << '}';
}

PointSet common_points(const SetFamily& f, const Subfamily& g)
{
    if (g.empty()) return {};
    PointSet acc = f[g.indices.front()];
    for (auto i : g.indices) acc &= f[i];
    return acc;
}

SetFamily intersect_step(const SetFamily& f)
{
    std::vector<PointSet> out;
    std::unordered_set<PointSet> seen;
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            PointSet b = f[i] & f[j];
            if (b.empty() || !seen.insert(b).second) continue;
            out.push_back(b);
        }
    }
    return SetFamily(std::move(out), f.universe());
}

SetFamily iterate(const SetFamily& f, std::size_t k)
{
    SetFamily cur = f;
    for (std::size_t i = 0; i < k && !cur.empty(); ++i) cur = intersect_step(cur);
    return cur;
}

std::vector<SetFamily> intersection_levels(const SetFamily& f)
{
    // The largest members of a level never survive into the next one, so
    // this terminates after at most (max member size + 1) steps.
    std::vector<SetFamily> levels{f};
    while (!levels.back().empty()) levels.push_back(intersect_step(levels.back()));
    return levels;
}

Subfamily g_sets(const SetFamily& f, const PointSet& w)
{
    if (w.empty()) throw InvalidArgument("g_sets: W must be nonempty");
    Subfamily g;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (w.is_subset_of(f[i])) g.indices.push_back(i);
    return g;
}

SetFamily g_sets_k(const SetFamily& f, std::size_t k, const PointSet& w)
{
    auto level = iterate(f, k);
    return level.select(g_sets(level, w).indices);
}

std::vector<ProperSet> proper_sets(const SetFamily& f)
{
    std::vector<ProperSet> out;
    std::unordered_map<PointSet, std::size_t> index;
    for (std::size_t i = 0; i < f.size(); ++i) {
        index.emplace(f[i], out.size());
        out.push_back({f[i], Subfamily{{i}}});
    }
    for (std::size_t cursor = 0; cursor < out.size(); ++cursor) {
        for (std::size_t a = 0; a < f.size(); ++a) {
            PointSet b = out[cursor].points & f[a];
            if (b.empty() || index.contains(b)) continue;
            Subfamily w = out[cursor].witness;
            w.indices.insert(std::upper_bound(w.indices.begin(), w.indices.end(), a), a);
            index.emplace(b, out.size());
            out.push_back({b, std::move(w)});
        }
    }
    return out;
}

std::size_t codim(const SetFamily& f, const PointSet& w)
{
    auto pencil = g_sets(f, w);
    if (pencil.empty()) return 0;
    PointSet minimal = common_points(f, pencil);
    auto levels = intersection_levels(f);
    for (std::size_t j = levels.size(); j-- > 0;)
        if (levels[j].contains(minimal)) return j + 1;
    throw InconsistencyError("codim: proper set {" + minimal.to_string() + "} is absent from every level");
}

std::size_t codim_chain(const SetFamily& f, const PointSet& b)
{
    auto closure = proper_sets(f);
    std::vector<PointSet> sets;
    sets.reserve(closure.size());
    for (auto& p : closure) sets.push_back(p.points);
    if (std::find(sets.begin(), sets.end(), b) == sets.end())
        throw InvalidArgument("codim_chain: {" + b.to_string() + "} is not a proper set");

    // Longest chain upward; larger sets are resolved first.
    std::sort(sets.begin(), sets.end(),
              [](const PointSet& x, const PointSet& y) { return x.size() > y.size(); });
    std::vector<std::size_t> depth(sets.size(), 1);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (sets[j].size() > sets[i].size() && sets[i].is_subset_of(sets[j]))
                depth[i] = std::max(depth[i], depth[j] + 1);
    auto it = std::find(sets.begin(), sets.end(), b);
    return depth[static_cast<std::size_t>(it - sets.begin())];
}

}  // namespace qaf
