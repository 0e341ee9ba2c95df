#include "qaf/analysis.hpp"

#include "qaf/combinatorics.hpp"
#include "qaf/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qaf {

std::vector<Subfamily> pencils(const SetFamily& f)
{
    std::vector<Subfamily> g(f.universe());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (Point x : f[i]) g[x].indices.push_back(i);
    return g;
}

std::vector<Subfamily> representation_holders(const SetFamily& f, const RepresentationMap& reps)
{
    std::vector<Subfamily> h(f.universe());
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (Point x : reps[a]) {
            if (x >= h.size()) h.resize(x + 1);
            h[x].indices.push_back(a);
        }
    return h;
}

std::uint64_t triples_total(const SetFamily& f)
{
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) total += f[i].intersection_size(f[j]);
    return total;
}

std::uint64_t triples_covered(const SetFamily& f, const RepresentationMap& reps)
{
    PointSet used;
    for (const auto& x : reps.entries) used |= x;
    std::uint64_t covered = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) covered += (f[i] & f[j] & used).size();
    return covered;
}

TripleCount count_triples(const SetFamily& f, const RepresentationMap& reps)
{
    return {triples_total(f), triples_covered(f, reps)};
}

Rational price(const SetFamily& f, const RepresentationMap& reps, std::size_t member)
{
    if (member >= reps.size()) throw InvalidArgument("price: member index out of range");
    auto g = pencils(f);
    auto h = representation_holders(f, reps);
    Rational sum = 0;
    for (Point x : reps[member]) {
        std::uint64_t deg = x < g.size() ? g[x].size() : 0;
        sum += Rational(binomial(deg, 2), h[x].size());
    }
    return sum;
}

RepOrdering rep_ordering(const SetFamily& f, const RepresentationMap& reps, std::size_t member, std::size_t t)
{
    if (member >= reps.size()) throw InvalidArgument("rep_ordering: member index out of range");
    auto g = pencils(f);
    RepOrdering out;
    std::vector<bool> covered(f.size(), false);
    auto remaining = reps[member].to_vector();
    while (!remaining.empty()) {
        std::size_t best_pos = 0;
        std::size_t best_gain = 0;
        for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
            Point x = remaining[pos];
            std::size_t gain = 0;
            if (x < g.size())
                for (auto i : g[x].indices) gain += covered[i] ? 0 : 1;
            // remaining is ascending, so strict > keeps the lowest id on ties
            if (pos == 0 || gain > best_gain) {
                best_gain = gain;
                best_pos = pos;
            }
        }
        Point x = remaining[best_pos];
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best_pos));
        Subfamily block;
        if (x < g.size())
            for (auto i : g[x].indices)
                if (!covered[i]) {
                    covered[i] = true;
                    block.indices.push_back(i);
                }
        out.order.push_back(x);
        out.k.push_back(block.size());
        out.blocks.push_back(std::move(block));
    }
    for (std::size_t i = 0; i < out.k.size(); ++i)
        if (out.k[i] == t) out.s = i + 1;
    return out;
}

std::string_view to_string(AuditStatus s)
{
    switch (s) {
    case AuditStatus::Pass: return "pass";
    case AuditStatus::Fail: return "fail";
    case AuditStatus::Skipped: return "skipped";
    }
    return "?";
}

std::size_t AuditReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const AuditEntry& e) {
        return e.status == AuditStatus::Fail && !e.informational;
    }));
}

const AuditEntry* AuditReport::find(std::string_view name) const
{
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

namespace {

// Bound 1 + t + ... + t^e standing in for an extremal value at exponent e.
std::uint64_t surrogate(std::size_t e, std::size_t t)
{
    return geometric_sum(t, e);
}

std::string set_str(const PointSet& s)
{
    return "{" + s.to_string() + "}";
}

class Auditor {
public:
    Auditor(const SetFamily& f, std::size_t d, std::size_t m, std::size_t t, const RepresentationMap& reps)
        : f_(f), d_(d), m_(m), t_(t), reps_(reps), g_(pencils(f)), h_(representation_holders(f, reps))
    {
        h_.resize(std::max(h_.size(), g_.size()));
        linear_ = check_bracket(f, 1, 1).holds();
    }

    AuditReport run()
    {
        pencil_size_bound();
        subfamily_bound();
        codim_pencil_bound();
        size_bound();
        representation_multiplicity();
        full_pencil_forces_point();
        equal_pencil_triples();
        equal_pencil_pairs();
        price_identity();
        triple_ceiling();
        ordering_checks();
        return std::move(report_);
    }

private:
    void add(std::string name, AuditStatus status, std::string detail, bool informational = false)
    {
        report_.entries.push_back({std::move(name), status, std::move(detail), informational});
    }
    void skip(std::string name, std::string why) { add(std::move(name), AuditStatus::Skipped, std::move(why)); }
    void verdict(std::string name, const std::optional<std::string>& violation, std::string ok,
                 bool informational = false)
    {
        if (violation)
            add(std::move(name), AuditStatus::Fail, *violation, informational);
        else
            add(std::move(name), AuditStatus::Pass, std::move(ok), informational);
    }

    std::size_t deg(Point x) const { return x < g_.size() ? g_[x].size() : 0; }

    void pencil_size_bound()
    {
        const char* name = "pencil_size_bound";
        if (d_ + m_ == 0) return skip(name, "d + m = 0");
        auto bound = surrogate(d_ + m_ - 1, t_);
        std::optional<std::string> bad;
        for (Point x = 0; x < g_.size() && !bad; ++x)
            if (deg(x) > bound)
                bad = "|G_" + std::to_string(x) + "| = " + std::to_string(deg(x)) + " exceeds " + std::to_string(bound);
        verdict(name, bad, "every |G_x| <= " + std::to_string(bound));
    }

    // Each proper set W with |W| <= d is the common part of G_W, so
    // |G_W| is bounded by the value at d - |W|.
    void subfamily_bound()
    {
        const char* name = "subfamily_bound";
        if (d_ == 0) return skip(name, "d = 0 leaves no admissible common part");
        std::size_t checked = 0;
        std::optional<std::string> bad;
        for (const auto& p : proper_sets(f_)) {
            if (p.points.size() > d_) continue;
            ++checked;
            auto size = g_sets(f_, p.points).size();
            auto bound = surrogate(d_ - p.points.size() + m_, t_);
            if (size > bound && !bad)
                bad = "|G_W| = " + std::to_string(size) + " for W = " + set_str(p.points) + " exceeds " +
                      std::to_string(bound);
        }
        if (checked == 0) return verdict(name, std::nullopt, "vacuous: no proper set has at most d points");
        verdict(name, bad, std::to_string(checked) + " proper sets within bound");
    }

    void codim_pencil_bound()
    {
        const char* name = "codim_pencil_bound";
        if (d_ != 0) return skip(name, "needs d = 0");
        std::vector<PointSet> targets;
        for (const auto& p : proper_sets(f_)) targets.push_back(p.points);
        for (Point x : f_.covered_points()) targets.push_back(PointSet{x});
        std::optional<std::string> bad;
        for (const auto& w : targets) {
            auto k = codim(f_, w);
            auto size = g_sets(f_, w).size();
            std::uint64_t bound = k == 0 ? 0 : surrogate(k - 1, t_);
            if (size > bound && !bad)
                bad = "|G_W| = " + std::to_string(size) + " for W = " + set_str(w) + " with codim " +
                      std::to_string(k) + " exceeds " + std::to_string(bound);
        }
        verdict(name, bad, std::to_string(targets.size()) + " sets within their codimension bound");
    }

    void size_bound()
    {
        auto bound = surrogate(d_ + m_, t_);
        std::optional<std::string> bad;
        if (f_.size() > bound) bad = "|F| = " + std::to_string(f_.size()) + " exceeds " + std::to_string(bound);
        verdict("size_bound", bad, "|F| <= " + std::to_string(bound));
    }

    void representation_multiplicity()
    {
        const char* name = "representation_multiplicity";
        if (m_ != 1 || t_ != 2 || d_ == 0) return skip(name, "needs m = 1, t = 2, d >= 1");
        auto need = surrogate(d_, 2) + d_ + 3;
        if (f_.size() < need) return skip(name, "needs |F| >= " + std::to_string(need));
        std::optional<std::string> bad;
        for (Point x = 0; x < h_.size() && !bad; ++x) {
            auto hx = h_[x].size();
            if (hx > d_) {
                bad = "|H_" + std::to_string(x) + "| = " + std::to_string(hx) + " exceeds d";
                break;
            }
            auto rest = f_.size() - deg(x) - hx;
            auto bound = surrogate(d_ - hx + 1, 2);
            if (rest > bound)
                bad = "|F \\ (G_" + std::to_string(x) + " ∪ H_" + std::to_string(x) + ")| = " + std::to_string(rest) +
                      " exceeds " + std::to_string(bound);
        }
        verdict(name, bad, "every |H_x| <= d with the remainder bounded");
    }

    void full_pencil_forces_point()
    {
        const char* name = "full_pencil_forces_point";
        if (!linear_) return skip(name, "needs the [1,1]-property");
        std::size_t found = 0;
        std::optional<std::string> bad;
        for (Point x = 0; x < g_.size(); ++x) {
            if (deg(x) != t_ + 1) continue;
            ++found;
            for (std::size_t a = 0; a < f_.size() && !bad; ++a)
                if (!f_[a].contains(x) && !reps_[a].contains(x))
                    bad = "X(" + std::to_string(a) + ") omits " + std::to_string(x) + " although |G_x| = t + 1";
        }
        if (found == 0) return verdict(name, std::nullopt, "vacuous: no pencil of size t + 1");
        verdict(name, bad, std::to_string(found) + " full pencils respected");
    }

    bool disjoint_pencils(std::initializer_list<Point> pts) const
    {
        std::vector<bool> seen(f_.size(), false);
        for (Point x : pts)
            for (auto i : g_[x].indices) {
                if (seen[i]) return false;
                seen[i] = true;
            }
        return true;
    }

    std::vector<Point> size_t_pencils() const
    {
        std::vector<Point> out;
        for (Point x = 0; x < g_.size(); ++x)
            if (deg(x) == t_) out.push_back(x);
        return out;
    }

    void equal_pencil_triples()
    {
        const char* name = "equal_pencil_triples";
        if (!linear_) return skip(name, "needs the [1,1]-property");
        auto pts = size_t_pencils();
        std::size_t found = 0;
        std::optional<std::string> bad;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                for (std::size_t l = j + 1; l < pts.size(); ++l) {
                    Point x = pts[i], y = pts[j], z = pts[l];
                    if (!disjoint_pencils({x, y, z})) continue;
                    ++found;
                    for (std::size_t a = 0; a < f_.size() && !bad; ++a) {
                        int in = reps_[a].contains(x) + reps_[a].contains(y) + reps_[a].contains(z);
                        if (in != 0 && in != 3)
                            bad = "X(" + std::to_string(a) + ") splits " + set_str(PointSet{x, y, z});
                    }
                }
        if (found == 0) return verdict(name, std::nullopt, "vacuous: no three disjoint pencils of size t");
        verdict(name, bad, std::to_string(found) + " triples respected");
    }

    void equal_pencil_pairs()
    {
        const char* name = "equal_pencil_pairs";
        if (!linear_) return skip(name, "needs the [1,1]-property");
        auto pts = size_t_pencils();
        std::size_t found = 0;
        std::optional<std::string> bad;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                Point x = pts[i], y = pts[j];
                if (!disjoint_pencils({x, y})) continue;
                ++found;
                for (std::size_t a = 0; a < f_.size() && !bad; ++a) {
                    if (f_[a].contains(x) || f_[a].contains(y)) continue;
                    if (reps_[a].contains(x) != reps_[a].contains(y))
                        bad = "X(" + std::to_string(a) + ") splits " + set_str(PointSet{x, y});
                }
            }
        if (found == 0) return verdict(name, std::nullopt, "vacuous: no two disjoint pencils of size t");
        verdict(name, bad, std::to_string(found) + " pairs respected");
    }

    void price_identity()
    {
        Rational sum = 0;
        for (std::size_t a = 0; a < f_.size(); ++a) sum += price(f_, reps_, a);
        auto covered = triples_covered(f_, reps_);
        std::optional<std::string> bad;
        if (sum != Rational(covered)) {
            std::ostringstream os;
            os << "total price " << sum << " differs from " << covered << " covered triples";
            bad = os.str();
        }
        verdict("price_identity", bad, "total price equals " + std::to_string(covered) + " covered triples");
    }

    void triple_ceiling()
    {
        auto c = count_triples(f_, reps_);
        std::optional<std::string> bad;
        if (c.covered > c.total)
            bad = std::to_string(c.covered) + " covered triples exceed " + std::to_string(c.total);
        verdict("triple_ceiling", bad, std::to_string(c.covered) + " of " + std::to_string(c.total) + " triples covered");
    }

    void ordering_checks()
    {
        const char* weak = "ordering_plateau";
        const char* strong = "ordering_plateau_strong";
        const char* disjoint = "disjoint_representations";
        std::string why;
        if (!linear_)
            why = "needs the [1,1]-property";
        else if (f_.size() + t_ < t_ * t_ + 4)
            why = "needs |F| >= t^2 - t + 4";
        else
            for (Point x = 0; x < g_.size(); ++x)
                if (deg(x) > t_) {
                    why = "|G_" + std::to_string(x) + "| exceeds t";
                    break;
                }
        if (!why.empty()) {
            skip(weak, why);
            skip(strong, why);
            skip(disjoint, why);
            return;
        }

        std::optional<std::string> bad_weak;
        std::optional<std::string> bad_strong;
        for (std::size_t a = 0; a < f_.size(); ++a) {
            auto ord = rep_ordering(f_, reps_, a, t_);
            std::vector<std::size_t> k = ord.k;
            k.resize(t_, 0);
            std::size_t sum = 0;
            std::size_t deficit = 0;
            for (auto v : k) {
                sum += v;
                deficit += t_ - v;
            }
            std::string who = "member " + std::to_string(a) + ": ";
            if (!bad_weak) {
                if (sum + 1 != f_.size())
                    bad_weak = who + "k sums to " + std::to_string(sum);
                else if (ord.s < 3)
                    bad_weak = who + "s = " + std::to_string(ord.s) + " is below 3";
                else if (deficit + 3 > t_)
                    bad_weak = who + "total deficit " + std::to_string(deficit) + " exceeds t - 3";
                else
                    for (auto v : k)
                        if (v + ord.s < t_) {
                            bad_weak = who + "k_i = " + std::to_string(v) + " is below t - s";
                            break;
                        }
            }
            if (!bad_strong)
                for (auto v : k)
                    if (v + ord.s < t_ + 2) {
                        bad_strong = who + "k_i = " + std::to_string(v) + " is below t - s + 2";
                        break;
                    }
        }
        verdict(weak, bad_weak, "k sums to |F| - 1, s >= 3 and every k_i >= t - s");
        verdict(strong, bad_strong, "every k_i >= t - s + 2", true);

        std::optional<std::string> bad;
        for (std::size_t a = 0; a < f_.size() && !bad; ++a)
            for (std::size_t b = a + 1; b < f_.size() && !bad; ++b)
                if (reps_[a].intersects(reps_[b]))
                    bad = "X(" + std::to_string(a) + ") meets X(" + std::to_string(b) + ")";
        verdict(disjoint, bad, "representations are pairwise disjoint");
    }

    const SetFamily& f_;
    std::size_t d_, m_, t_;
    const RepresentationMap& reps_;
    std::vector<Subfamily> g_;
    std::vector<Subfamily> h_;
    bool linear_ = false;
    AuditReport report_;
};

}  // namespace

AuditReport audit_lemmas(const SetFamily& f, std::size_t d, std::size_t m, std::size_t t,
                         const RepresentationMap& reps)
{
    if (t == 0) throw InvalidArgument("audit: t must be positive");
    if (reps.t != t) throw InvalidArgument("audit: representation map is for t = " + std::to_string(reps.t));
    if (auto problem = verify_representations(f, reps)) throw InvalidArgument("audit: " + *problem);
    auto bracket = check_bracket(f, d, m);
    if (!bracket.holds()) throw InvalidArgument("audit: family lacks the [d,m]-property: " + bracket.detail);
    return Auditor(f, d, m, t, reps).run();
}

}  // namespace qaf
