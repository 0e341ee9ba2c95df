#include "qaf/piercing.hpp"

#include "qaf/combinatorics.hpp"
#include "qaf/errors.hpp"
#include "qaf/extremal.hpp"
#include "qaf/properties.hpp"

#include <algorithm>

namespace qaf {

std::string_view to_string(PierceAction a)
{
    switch (a) {
    case PierceAction::Descend: return "descend";
    case PierceAction::Pencil: return "pencil";
    case PierceAction::CommonPoint: return "common-point";
    case PierceAction::TriplePoint: return "triple-point";
    case PierceAction::OnePerMember: return "one-per-member";
    case PierceAction::Fallback: return "fallback";
    }
    return "?";
}

std::optional<Subfamily> witness_q_free(const SetFamily& f, std::size_t p)
{
    if (p < 3) throw InvalidArgument("witness_q_free: p must be at least 3");
    if (f.size() < p) return std::nullopt;
    return find_q_independent(f, p, 3);
}

PointSet w_of_q(const SetFamily& f, const Subfamily& q)
{
    PointSet w;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j) {
            auto meet = f[q.indices[i]] & f[q.indices[j]];
            if (meet.size() > 1)
                throw InvalidArgument("w_of_q: members " + std::to_string(q.indices[i]) + " and " +
                                      std::to_string(q.indices[j]) + " share more than one point");
            w |= meet;
        }
    return w;
}

namespace {

class Piercer {
public:
    Piercer(const SetFamily& f, PierceTrace& trace) : f_(f), trace_(trace) {}

    PointSet solve(std::vector<std::size_t> rem, std::size_t level, std::size_t budget)
    {
        PointSet chosen;
        while (true) {
            auto step = start(level, budget, rem);
            if (rem.size() <= budget) {
                step.action = PierceAction::OnePerMember;
                for (auto i : rem) {
                    if (f_[i].intersects(chosen)) continue;
                    chosen.insert(f_[i].min());
                    step.points.push_back(f_[i].min());
                }
                trace_.steps.push_back(std::move(step));
                return chosen;
            }
            auto sub = family_of(rem);
            if (level > 3 && !witness_q_free(sub, level - 1)) {
                step.action = PierceAction::Descend;
                trace_.steps.push_back(std::move(step));
                --level;
                continue;
            }
            if (level == 3) {
                PointSet common = sub[0];
                for (const auto& s : sub) common &= s;
                if (common.empty() || budget == 0) return chosen | fallback(std::move(step), rem, budget);
                step.action = PierceAction::CommonPoint;
                step.points.push_back(common.min());
                trace_.steps.push_back(std::move(step));
                chosen.insert(common.min());
                return chosen;
            }
            if (level == 4) {
                auto pts = triple_point(sub);
                if (!pts || pts->size() > budget) return chosen | fallback(std::move(step), rem, budget);
                step.action = PierceAction::TriplePoint;
                for (Point x : *pts) step.points.push_back(x);
                trace_.steps.push_back(std::move(step));
                return chosen | *pts;
            }

            // level >= 5: a 3-free witness of size level-1 exists.
            auto q = *witness_q_free(sub, level - 1);
            auto w = w_of_q(sub, q);
            step.witness.indices.reserve(q.size());
            for (auto i : q.indices) step.witness.indices.push_back(rem[i]);
            step.w_size = w.size();
            step.guarantee = binomial(level - 2, 2) + 2;
            step.proof_threshold = binomial(level - 1, 2) * (binomial(level - 2, 2) - 1) + level;
            if (w.empty() || budget == 0) return chosen | fallback(std::move(step), rem, budget);

            Point best = w.min();
            std::size_t best_size = 0;
            for (Point x : w) {
                std::size_t size = 0;
                for (const auto& s : sub) size += s.contains(x) ? 1 : 0;
                if (size > best_size) {
                    best = x;
                    best_size = size;
                }
            }
            std::vector<std::size_t> next;
            for (auto i : rem)
                if (!f_[i].contains(best)) next.push_back(i);
            step.points.push_back(best);
            step.pencil_size = best_size;
            step.guarantee_met = best_size >= step.guarantee;

            // The remainder must keep the (level-2,3)-property unless it is
            // small enough to take point by point.
            std::size_t next_level = level - 2;
            if (next.size() > budget - 1 && next_level >= 3 && witness_q_free(family_of(next), next_level))
                return chosen | fallback(std::move(step), rem, budget);
            step.action = PierceAction::Pencil;
            trace_.steps.push_back(std::move(step));
            chosen.insert(best);
            rem = std::move(next);
            level = std::max<std::size_t>(next_level, 3);
            --budget;
        }
    }

private:
    PierceStep start(std::size_t level, std::size_t budget, const std::vector<std::size_t>& rem) const
    {
        PierceStep step;
        step.level = level;
        step.budget = budget;
        step.remaining = rem.size();
        step.size_threshold = thm4_threshold(level, 3);
        return step;
    }

    SetFamily family_of(const std::vector<std::size_t>& rem) const { return f_.select(rem); }

    // A point x lying in three members, together with a point of the only
    // member missing x when there is one.
    static std::optional<PointSet> triple_point(const SetFamily& sub)
    {
        for (std::size_t a = 0; a < sub.size(); ++a)
            for (std::size_t b = a + 1; b < sub.size(); ++b) {
                auto ab = sub[a] & sub[b];
                if (ab.empty()) continue;
                for (std::size_t c = b + 1; c < sub.size(); ++c) {
                    auto abc = ab & sub[c];
                    if (abc.empty()) continue;
                    Point x = abc.min();
                    PointSet out{x};
                    std::size_t outsiders = 0;
                    for (const auto& s : sub)
                        if (!s.contains(x)) {
                            if (++outsiders > 1) return std::nullopt;
                            out.insert(s.min());
                        }
                    return out;
                }
            }
        return std::nullopt;
    }

    PointSet fallback(PierceStep step, const std::vector<std::size_t>& rem, std::size_t budget)
    {
        step.action = PierceAction::Fallback;
        step.points.clear();
        ++trace_.fallbacks;
        auto sub = family_of(rem);
        auto x = has_t_transversal(sub, budget);
        if (!x)
            throw InconsistencyError("pierce_pq: " + std::to_string(rem.size()) + " remaining members at level " +
                                     std::to_string(step.level) + " have no transversal of size " +
                                     std::to_string(budget));
        for (Point p : x->points) step.points.push_back(p);
        trace_.steps.push_back(std::move(step));
        return x->points;
    }

    const SetFamily& f_;
    PierceTrace& trace_;
};

}  // namespace

PierceTrace pierce_pq(const SetFamily& f, std::size_t p, std::size_t q)
{
    if (q < 3 || p < q) throw InvalidArgument("pierce_pq: needs p >= q >= 3");
    if (f.size() < p) throw InvalidArgument("pierce_pq: family has fewer than p members");
    auto threshold = thm4_threshold(p, q);
    if (f.size() < threshold)
        throw InvalidArgument("pierce_pq: family has " + std::to_string(f.size()) + " members, needs " +
                              std::to_string(threshold));
    auto linear = check_bracket(f, 1, 1);
    if (!linear.holds()) throw InvalidArgument("pierce_pq: family lacks the [1,1]-property: " + linear.detail);
    auto pq = check_pq(f, p, q);
    if (!pq.holds()) throw InvalidArgument("pierce_pq: family lacks the (p,q)-property: " + pq.detail);

    PierceTrace trace;
    trace.p = p;
    trace.q = q;
    trace.reduced_level = p - q + 3;
    std::vector<std::size_t> all(f.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    auto points = Piercer(f, trace).solve(std::move(all), trace.reduced_level, p - q + 1);

    if (points.size() > p - q + 1 || !hits_all(f, points))
        throw InconsistencyError("pierce_pq: produced {" + points.to_string() + "}, which is not a transversal of size <= " +
                                 std::to_string(p - q + 1));
    trace.result = Transversal{points, fingerprint(f)};
    return trace;
}

}  // namespace qaf
