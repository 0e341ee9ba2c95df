#include "qaf/combinatorics.hpp"
#include "qaf/errors.hpp"
#include "qaf/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace qaf {
namespace {

constexpr std::size_t kMaxSearchPoints = 16;
constexpr std::size_t kMaxCandidates = 1u << 14;
constexpr std::size_t kMaxTransversalBits = 1u << 16;
constexpr std::size_t kFullGroupMaxPoints = 8;

/// Fixed-length bit vector over the small transversals of the scope.
struct Bits {
    std::vector<std::uint64_t> w;
};

/// Orderly generation of families of candidate sets.
///
/// Candidates are ordered by size (descending) and then lexicographically;
/// families are grown by strictly increasing candidate index. Both
/// properties are closed under taking subfamilies, so a candidate that
/// breaks either one is dropped for the whole subtree, and a node whose
/// size plus surviving candidates cannot beat the incumbent is cut.
///
/// The t-property is tracked as bit vectors over all point sets of size
/// <= t: rep[A] holds every such set disjoint from A that meets every
/// other chosen member, and hit_all every set meeting all chosen members.
class ExtremalSearch {
public:
    explicit ExtremalSearch(const SearchParams& p) : p_(p)
    {
        build_candidates();
        build_transversals();
        build_group();
    }

    SearchCertificate run()
    {
        SearchCertificate cert;
        cert.params = p_;
        cert.candidates = cands_.size();

        std::vector<std::size_t> all(cands_.size());
        std::iota(all.begin(), all.end(), 0);
        hit_all_stack_.assign(1, Bits{std::vector<std::uint64_t>(words_, ~std::uint64_t{0})});
        mask_tail(hit_all_stack_[0]);
        rep_stack_.assign(1, {});
        dfs(all);

        cert.exhaustive = !aborted_;
        cert.nodes = nodes_;
        std::vector<PointSet> sets;
        for (auto c : best_) sets.push_back(cands_[c]);
        cert.best = SetFamily(std::move(sets), p_.n);
        cert.best_size = best_.size();
        return cert;
    }

private:
    void build_candidates()
    {
        auto n = static_cast<std::uint32_t>(p_.n);
        std::size_t top = std::min(p_.s_max, p_.n);
        if (p_.m == 0) top = std::min(top, p_.d);
        for (std::size_t k = top; k >= 1; --k) {
            auto combos = combinations(n, static_cast<std::uint32_t>(k));
            if (cands_.size() + combos.size() > kMaxCandidates)
                throw InvalidArgument("search scope has more than " + std::to_string(kMaxCandidates) + " candidate sets");
            for (const auto& c : combos) cands_.emplace_back(std::span<const Point>(c));
        }
        for (std::size_t i = 0; i < cands_.size(); ++i) cand_index_.emplace(cands_[i], i);
    }

    void build_transversals()
    {
        auto n = static_cast<std::uint32_t>(p_.n);
        std::vector<PointSet> ts;
        for (std::uint32_t k = 0; k <= std::min<std::size_t>(p_.t, p_.n); ++k) {
            auto combos = combinations(n, k);
            if (ts.size() + combos.size() > kMaxTransversalBits)
                throw InvalidArgument("search scope has too many candidate representations");
            for (const auto& c : combos) ts.emplace_back(std::span<const Point>(c));
        }
        n_bits_ = ts.size();
        words_ = (n_bits_ + 63) / 64;
        hits_.resize(cands_.size());
        avoids_.resize(cands_.size());
        for (std::size_t c = 0; c < cands_.size(); ++c) {
            hits_[c].w.assign(words_, 0);
            avoids_[c].w.assign(words_, 0);
            for (std::size_t i = 0; i < ts.size(); ++i) {
                auto& target = ts[i].intersects(cands_[c]) ? hits_[c] : avoids_[c];
                target.w[i >> 6] |= std::uint64_t{1} << (i & 63);
            }
        }
    }

    void mask_tail(Bits& b) const
    {
        if (n_bits_ % 64 != 0) b.w.back() &= (std::uint64_t{1} << (n_bits_ % 64)) - 1;
    }

    // Relabellings used for orbit-leader tests: the full symmetric group on
    // small scopes, adjacent transpositions otherwise. Any subset is sound;
    // a larger one prunes more.
    void build_group()
    {
        std::vector<std::vector<Point>> perms;
        if (p_.n <= kFullGroupMaxPoints) {
            std::vector<Point> perm(p_.n);
            std::iota(perm.begin(), perm.end(), 0);
            while (std::next_permutation(perm.begin(), perm.end())) perms.push_back(perm);
        } else {
            for (std::size_t i = 0; i + 1 < p_.n; ++i) {
                std::vector<Point> perm(p_.n);
                std::iota(perm.begin(), perm.end(), 0);
                std::swap(perm[i], perm[i + 1]);
                perms.push_back(perm);
            }
        }
        images_.assign(perms.size() * cands_.size(), 0);
        for (std::size_t g = 0; g < perms.size(); ++g) {
            for (std::size_t c = 0; c < cands_.size(); ++c) {
                PointSet img;
                for (Point x : cands_[c]) img.insert(perms[g][x]);
                images_[g * cands_.size() + c] = static_cast<std::uint32_t>(cand_index_.at(img));
            }
        }
        group_size_ = perms.size();
    }

    static bool any(const Bits& a, const Bits& b)
    {
        for (std::size_t i = 0; i < a.w.size(); ++i)
            if ((a.w[i] & b.w[i]) != 0) return true;
        return false;
    }

    bool bracket_ok(std::size_t c) const
    {
        if (p_.m == 0) return cands_[c].size() <= p_.d;
        if (p_.m == 1) {
            for (auto b : chosen_)
                if (cands_[c].intersection_size(cands_[b]) > p_.d) return false;
            return true;
        }
        std::vector<PointSet> sets;
        for (auto b : chosen_) sets.push_back(cands_[b]);
        sets.push_back(cands_[c]);
        return check_bracket(SetFamily(std::move(sets), p_.n), p_.d, p_.m).holds();
    }

    bool compatible(std::size_t c) const
    {
        std::size_t depth = chosen_.size();
        if (!any(avoids_[c], hit_all_stack_[depth])) return false;
        const auto& reps = rep_stack_[depth];
        for (const auto& r : reps)
            if (!any(r, hits_[c])) return false;
        return bracket_ok(c);
    }

    // True unless some relabelling maps the chosen family to one whose
    // sorted candidate indices are lexicographically smaller.
    bool is_orbit_leader()
    {
        std::size_t k = chosen_.size();
        scratch_.resize(k);
        for (std::size_t g = 0; g < group_size_; ++g) {
            const std::uint32_t* img = &images_[g * cands_.size()];
            for (std::size_t i = 0; i < k; ++i) scratch_[i] = img[chosen_[i]];
            std::sort(scratch_.begin(), scratch_.end());
            for (std::size_t i = 0; i < k; ++i) {
                if (scratch_[i] < chosen_[i]) return false;
                if (scratch_[i] > chosen_[i]) break;
            }
        }
        return true;
    }

    void push(std::size_t c)
    {
        std::size_t depth = chosen_.size();
        if (hit_all_stack_.size() <= depth + 1) {
            hit_all_stack_.resize(depth + 2);
            rep_stack_.resize(depth + 2);
        }
        const Bits& hit_all = hit_all_stack_[depth];
        Bits& next_hit = hit_all_stack_[depth + 1];
        next_hit.w.resize(words_);
        for (std::size_t i = 0; i < words_; ++i) next_hit.w[i] = hit_all.w[i] & hits_[c].w[i];

        const auto& reps = rep_stack_[depth];
        auto& next_reps = rep_stack_[depth + 1];
        next_reps.resize(depth + 1);
        for (std::size_t a = 0; a < depth; ++a) {
            next_reps[a].w.resize(words_);
            for (std::size_t i = 0; i < words_; ++i) next_reps[a].w[i] = reps[a].w[i] & hits_[c].w[i];
        }
        next_reps[depth].w.resize(words_);
        for (std::size_t i = 0; i < words_; ++i) next_reps[depth].w[i] = avoids_[c].w[i] & hit_all.w[i];
        chosen_.push_back(c);
    }

    void dfs(const std::vector<std::size_t>& pool)
    {
        if (aborted_) return;
        if (++nodes_ > p_.budget) {
            aborted_ = true;
            return;
        }
        std::size_t depth = chosen_.size();
        if (depth > best_.size()) best_ = chosen_;

        std::vector<std::size_t> open;
        open.reserve(pool.size());
        for (auto c : pool)
            if (compatible(c)) open.push_back(c);
        if (depth + open.size() <= best_.size()) return;

        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < open.size(); ++j) {
            if (depth + (open.size() - j) <= best_.size()) break;
            push(open[j]);
            if (depth + 1 > p_.symmetry_depth || is_orbit_leader()) {
                rest.assign(open.begin() + static_cast<std::ptrdiff_t>(j) + 1, open.end());
                dfs(rest);
            }
            chosen_.pop_back();
            if (aborted_) return;
        }
    }

    SearchParams p_;
    std::vector<PointSet> cands_;
    std::unordered_map<PointSet, std::size_t> cand_index_;
    std::size_t n_bits_ = 0;
    std::size_t words_ = 0;
    std::vector<Bits> hits_;
    std::vector<Bits> avoids_;
    std::vector<std::uint32_t> images_;
    std::size_t group_size_ = 0;

    std::vector<std::size_t> chosen_;
    std::vector<Bits> hit_all_stack_;
    std::vector<std::vector<Bits>> rep_stack_;
    std::vector<std::size_t> best_;
    std::vector<std::uint32_t> scratch_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace

SearchCertificate search_max_b(const SearchParams& params)
{
    if (params.n == 0) throw InvalidArgument("search_max_b: n must be at least 1");
    if (params.s_max == 0) throw InvalidArgument("search_max_b: s_max must be at least 1");
    if (params.t == 0) throw InvalidArgument("search_max_b: t must be at least 1");
    if (params.n > kMaxSearchPoints)
        throw InvalidArgument("search_max_b: n is limited to " + std::to_string(kMaxSearchPoints));

    ExtremalSearch search(params);
    auto cert = search.run();

    // Re-verify the winner through the independent property checkers.
    if (!cert.best.empty() && !check_bracket(cert.best, params.d, params.m).holds())
        throw InconsistencyError("search_max_b: best family fails the bracket property");
    if (cert.best.size() >= 2) {
        auto reps = find_representations(cert.best, params.t);
        if (!reps.map) throw InconsistencyError("search_max_b: best family lacks the t-property");
        cert.representations = std::move(reps.map);
    }
    return cert;
}

}  // namespace qaf
