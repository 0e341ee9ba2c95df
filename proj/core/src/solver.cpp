#include "qaf/solver.hpp"

#include "qaf/errors.hpp"

#include <algorithm>
#include <vector>

namespace qaf {
namespace {

void require_nonempty_members(std::span<const PointSet> sets)
{
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (sets[i].empty()) throw InvalidArgument("unhittable member " + std::to_string(i) + " (empty set)");
}

/// Depth-first branch and bound over "which point hits the most
/// constrained unhit member". Branch k of a member excludes the points
/// tried in branches 0..k-1, so no transversal is enumerated twice.
class HittingSetSearch {
public:
    HittingSetSearch(std::span<const PointSet> sets, std::size_t bound_size, std::optional<PointSet> incumbent)
        : sets_(sets), best_size_(bound_size), best_(std::move(incumbent))
    {
    }

    void run()
    {
        std::vector<std::size_t> unhit(sets_.size());
        for (std::size_t i = 0; i < unhit.size(); ++i) unhit[i] = i;
        search(PointSet{}, unhit, PointSet{});
    }

    [[nodiscard]] const std::optional<PointSet>& best() const { return best_; }
    [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

private:
    // Greedy packing of unhit members whose remaining candidates are
    // pairwise disjoint; each needs its own point.
    std::size_t packing_bound(const std::vector<std::size_t>& unhit, const PointSet& excluded) const
    {
        PointSet used;
        std::size_t count = 0;
        for (auto i : unhit) {
            PointSet cand = sets_[i] - excluded;
            if (!cand.intersects(used)) {
                used |= cand;
                ++count;
            }
        }
        return count;
    }

    void search(const PointSet& chosen, const std::vector<std::size_t>& unhit, PointSet excluded)
    {
        ++nodes_;
        std::size_t size = chosen.size();
        if (unhit.empty()) {
            if (size < best_size_) {
                best_size_ = size;
                best_ = chosen;
            }
            return;
        }
        if (size + 1 >= best_size_) return;
        if (size + packing_bound(unhit, excluded) >= best_size_) return;

        std::size_t pick = unhit.front();
        std::size_t fewest = PointSet::kCapacity + 1;
        for (auto i : unhit) {
            std::size_t c = (sets_[i] - excluded).size();
            if (c < fewest) {
                fewest = c;
                pick = i;
            }
        }
        if (fewest == 0) return;

        std::vector<std::size_t> next;
        next.reserve(unhit.size());
        for (Point p : sets_[pick] - excluded) {
            PointSet with = chosen;
            with.insert(p);
            next.clear();
            for (auto i : unhit)
                if (!sets_[i].contains(p)) next.push_back(i);
            search(with, next, excluded);
            excluded.insert(p);
            if (size + 1 >= best_size_) return;
        }
    }

    std::span<const PointSet> sets_;
    std::size_t best_size_;
    std::optional<PointSet> best_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

std::uint64_t fingerprint(std::span<const PointSet> sets)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& s : sets) {
        h ^= static_cast<std::uint64_t>(s.hash());
        h *= 1099511628211ULL;
    }
    return h;
}

bool hits_all(std::span<const PointSet> sets, const PointSet& points)
{
    return std::all_of(sets.begin(), sets.end(), [&](const PointSet& s) { return s.intersects(points); });
}

Transversal tau_greedy(std::span<const PointSet> sets)
{
    require_nonempty_members(sets);
    std::vector<std::size_t> unhit(sets.size());
    for (std::size_t i = 0; i < unhit.size(); ++i) unhit[i] = i;
    PointSet chosen;
    while (!unhit.empty()) {
        PointSet candidates;
        for (auto i : unhit) candidates |= sets[i];
        Point best = candidates.min();
        std::size_t best_count = 0;
        for (Point p : candidates) {
            std::size_t c = 0;
            for (auto i : unhit) c += sets[i].contains(p) ? 1 : 0;
            if (c > best_count) {
                best_count = c;
                best = p;
            }
        }
        chosen.insert(best);
        std::erase_if(unhit, [&](std::size_t i) { return sets[i].contains(best); });
    }
    return {chosen, fingerprint(sets)};
}

TauResult tau_exact(std::span<const PointSet> sets)
{
    if (sets.empty()) throw InvalidArgument("tau_exact: family must be nonempty");
    require_nonempty_members(sets);
    auto greedy = tau_greedy(sets);
    HittingSetSearch search(sets, greedy.size(), greedy.points);
    search.run();
    const PointSet& best = *search.best();
    if (!hits_all(sets, best)) throw InconsistencyError("tau_exact: witness does not hit the family");
    return {best.size(), {best, fingerprint(sets)}, search.nodes()};
}

std::optional<Transversal> has_t_transversal(std::span<const PointSet> sets, std::size_t t)
{
    require_nonempty_members(sets);
    if (sets.empty()) return Transversal{{}, fingerprint(sets)};
    HittingSetSearch search(sets, t + 1, std::nullopt);
    search.run();
    if (!search.best()) return std::nullopt;
    if (!hits_all(sets, *search.best())) throw InconsistencyError("has_t_transversal: witness does not hit the family");
    return Transversal{*search.best(), fingerprint(sets)};
}

std::optional<std::size_t> brute_force_tau(std::span<const PointSet> sets, std::size_t cap)
{
    if (sets.empty()) return 1;
    PointSet covered;
    for (const auto& s : sets) covered |= s;
    std::vector<Point> pts = covered.to_vector();
    std::size_t n = pts.size();
    for (std::size_t k = 1; k <= std::min(cap, n); ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            PointSet cand;
            for (auto i : idx) cand.insert(pts[i]);
            bool ok = true;
            for (const auto& s : sets) {
                if (!s.intersects(cand)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return k;
            std::size_t pos = k;
            while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return std::nullopt;
}

std::optional<Transversal> min_hitting_avoiding(std::span<const PointSet> sets, const PointSet& forbidden,
                                                std::size_t t)
{
    std::vector<PointSet> reduced;
    reduced.reserve(sets.size());
    for (const auto& s : sets) {
        PointSet r = s - forbidden;
        if (r.empty()) return std::nullopt;
        reduced.push_back(r);
    }
    auto found = has_t_transversal(reduced, t);
    if (!found) return std::nullopt;
    return Transversal{found->points, fingerprint(sets)};
}

}  // namespace qaf
