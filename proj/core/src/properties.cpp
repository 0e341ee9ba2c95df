#include "qaf/properties.hpp"

#include "qaf/errors.hpp"
#include "qaf/solver.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <unordered_set>

namespace qaf {
namespace {

PropertyReport fail(Witness w, std::string detail)
{
    return {Verdict::Fails, std::move(w), std::move(detail)};
}

PropertyReport pass(std::string detail)
{
    return {Verdict::Holds, std::monostate{}, std::move(detail)};
}

std::string indices_text(const Subfamily& g)
{
    std::string s;
    for (auto i : g.indices) {
        if (!s.empty()) s += ' ';
        s += std::to_string(i);
    }
    return s;
}

class BraceSearch {
public:
    BraceSearch(const SetFamily& f, std::size_t d, std::size_t m) : f_(f), d_(d), m_(m) {}

    std::optional<Subfamily> run()
    {
        chosen_.clear();
        if (dfs(0, PointSet{}, true)) return Subfamily{chosen_};
        return std::nullopt;
    }

private:
    bool dfs(std::size_t start, const PointSet& acc, bool first)
    {
        if (chosen_.size() == m_) return acc.size() > d_;
        // Intersections only shrink: once at most d points remain no
        // completion can violate the bound.
        if (!first && acc.size() <= d_) return false;
        std::size_t need = m_ - chosen_.size();
        for (std::size_t i = start; i + need <= f_.size(); ++i) {
            chosen_.push_back(i);
            if (dfs(i + 1, first ? f_[i] : (acc & f_[i]), false)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    const SetFamily& f_;
    std::size_t d_;
    std::size_t m_;
    std::vector<std::size_t> chosen_;
};

/// Backtracking for p members in which no point has multiplicity q.
/// saturated[k] holds the points lying in at least k+1 chosen members.
class IndependentSearch {
public:
    IndependentSearch(const SetFamily& f, std::size_t p, std::size_t q) : f_(f), p_(p), q_(q) {}

    std::optional<Subfamily> run()
    {
        std::vector<PointSet> levels(q_ - 1);
        if (dfs(0, levels)) return Subfamily{chosen_};
        return std::nullopt;
    }

private:
    bool dfs(std::size_t start, const std::vector<PointSet>& levels)
    {
        if (chosen_.size() == p_) return true;
        const PointSet& full = levels.back();
        std::vector<std::size_t> allowed;
        for (std::size_t i = start; i < f_.size(); ++i)
            if (!f_[i].intersects(full)) allowed.push_back(i);
        if (chosen_.size() + allowed.size() < p_) return false;
        std::vector<PointSet> next(levels.size());
        for (std::size_t j = 0; j < allowed.size(); ++j) {
            if (chosen_.size() + (allowed.size() - j) < p_) break;
            const PointSet& b = f_[allowed[j]];
            for (std::size_t k = levels.size(); k-- > 1;) next[k] = levels[k] | (levels[k - 1] & b);
            next[0] = levels[0] | b;
            chosen_.push_back(allowed[j]);
            if (dfs(allowed[j] + 1, next)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    const SetFamily& f_;
    std::size_t p_;
    std::size_t q_;
    std::vector<std::size_t> chosen_;
};

std::optional<PointSet> representation_for(const SetFamily& f, std::size_t member, std::size_t t)
{
    auto rest = f.without(member);
    auto x = min_hitting_avoiding(rest, f[member], t);
    if (!x) return std::nullopt;
    return x->points;
}

}  // namespace

PropertyReport check_bracket(const SetFamily& f, std::size_t d, std::size_t m)
{
    auto level = iterate(f, m);
    for (const auto& b : level) {
        if (b.size() > d)
            return fail(b, "member {" + b.to_string() + "} of F^" + std::to_string(m) + " has " +
                               std::to_string(b.size()) + " > " + std::to_string(d) + " points");
    }
    return pass("all " + std::to_string(level.size()) + " members of F^" + std::to_string(m) + " have at most " +
                std::to_string(d) + " points");
}

PropertyReport check_brace(const SetFamily& f, std::size_t d, std::size_t m)
{
    if (m == 0) throw InvalidArgument("check_brace: m must be positive");
    if (m > f.size())
        return pass("vacuous: m = " + std::to_string(m) + " exceeds |F| = " + std::to_string(f.size()));
    if (auto g = BraceSearch(f, d, m).run()) {
        auto common = common_points(f, *g);
        return fail(*g, "members {" + indices_text(*g) + "} share " + std::to_string(common.size()) + " > " +
                            std::to_string(d) + " points");
    }
    return pass("every " + std::to_string(m) + " members share at most " + std::to_string(d) + " points");
}

std::optional<Subfamily> find_q_independent(const SetFamily& f, std::size_t p, std::size_t q)
{
    if (q < 2) throw InvalidArgument("q must be at least 2");
    if (p > f.size()) return std::nullopt;
    return IndependentSearch(f, p, q).run();
}

bool is_q_independent(const SetFamily& f, const Subfamily& g, std::size_t q)
{
    std::array<std::size_t, PointSet::kCapacity> count{};
    for (auto i : g.indices)
        for (Point x : f[i])
            if (++count[x] >= q) return false;
    return true;
}

PropertyReport check_pq(const SetFamily& f, std::size_t p, std::size_t q)
{
    if (q < 2 || p < q)
        throw InvalidArgument("check_pq: need p >= q >= 2 (got p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                              ")");
    if (f.size() < p)
        throw InvalidArgument("check_pq: family has " + std::to_string(f.size()) + " < p = " + std::to_string(p) +
                              " members");
    if (auto g = find_q_independent(f, p, q))
        return fail(*g, "members {" + indices_text(*g) + "} have no point common to " + std::to_string(q) + " of them");
    return pass("among every " + std::to_string(p) + " members some " + std::to_string(q) + " share a point");
}

RepresentationSearch find_representations(const SetFamily& f, std::size_t t, unsigned threads)
{
    if (f.size() < 2) throw InvalidArgument("find_representations: need at least 2 members");
    if (t == 0) throw InvalidArgument("find_representations: t must be positive");

    std::vector<std::optional<PointSet>> found(f.size());
    if (threads <= 1) {
        for (std::size_t a = 0; a < f.size(); ++a) {
            found[a] = representation_for(f, a, t);
            if (!found[a]) break;
        }
    } else {
        std::vector<std::future<void>> jobs;
        for (unsigned w = 0; w < threads; ++w) {
            jobs.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t a = w; a < f.size(); a += threads) found[a] = representation_for(f, a, t);
            }));
        }
        for (auto& j : jobs) j.get();
    }

    RepresentationMap map{t, {}};
    for (std::size_t a = 0; a < f.size(); ++a) {
        if (!found[a])
            return {fail(a, "member " + std::to_string(a) + " {" + f[a].to_string() + "} has no " + std::to_string(t) +
                                "-representation"),
                    std::nullopt};
        map.entries.push_back(*found[a]);
    }
    if (auto problem = verify_representations(f, map))
        throw InconsistencyError("computed representation map is invalid: " + *problem);
    return {pass("every member has a " + std::to_string(t) + "-representation"), std::move(map)};
}

std::optional<std::string> verify_representations(const SetFamily& f, const RepresentationMap& reps)
{
    if (reps.size() != f.size()) return "map has " + std::to_string(reps.size()) + " entries for " +
                                        std::to_string(f.size()) + " members";
    std::unordered_set<PointSet> seen;
    for (std::size_t a = 0; a < f.size(); ++a) {
        const auto& x = reps[a];
        std::string who = "X(" + std::to_string(a) + ")";
        if (x.size() > reps.t) return who + " has more than t = " + std::to_string(reps.t) + " points";
        if (x.intersects(f[a])) return who + " meets its own member";
        for (std::size_t b = 0; b < f.size(); ++b)
            if (b != a && !x.intersects(f[b])) return who + " misses member " + std::to_string(b);
        if (!seen.insert(x).second) return who + " repeats another member's representation";
    }
    return std::nullopt;
}

PropertyReport is_t_critical(const SetFamily& f, std::size_t t)
{
    if (f.empty()) throw InvalidArgument("is_t_critical: empty family");
    if (auto x = has_t_transversal(f, t))
        return fail(x->points, "F itself has the " + std::to_string(t) + "-transversal {" + x->points.to_string() + "}");
    for (std::size_t a = 0; a < f.size(); ++a)
        if (!has_t_transversal(f.without(a), t))
            return fail(a, "F without member " + std::to_string(a) + " still has no " + std::to_string(t) +
                               "-transversal");
    return pass("no " + std::to_string(t) + "-transversal, but every F \\ {A} has one");
}

}  // namespace qaf
