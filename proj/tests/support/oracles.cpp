#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace qaf::testing {

namespace {

Set meet(const Set& a, const Set& b)
{
    Set out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool meets(const Set& a, const Set& b)
{
    return !meet(a, b).empty();
}

bool contains(const Set& a, std::uint32_t x)
{
    return std::binary_search(a.begin(), a.end(), x);
}

std::set<Set> step(const std::vector<Set>& sets)
{
    std::set<Set> out;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            auto c = meet(sets[i], sets[j]);
            if (!c.empty()) out.insert(c);
        }
    return out;
}

// Calls fn on every k-subset of {0..n-1}; stops when fn returns true.
template <class Fn>
bool any_subset(std::size_t n, std::size_t k, Fn fn)
{
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (fn(idx)) return true;
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) return false;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

}  // namespace

std::vector<Set> as_sets(const SetFamily& f)
{
    std::vector<Set> out;
    for (const auto& s : f) out.push_back(s.to_vector());
    return out;
}

std::set<Set> naive_level(const SetFamily& f, std::size_t k)
{
    auto v = as_sets(f);
    std::set<Set> cur(v.begin(), v.end());
    for (std::size_t i = 0; i < k; ++i) cur = step(std::vector<Set>(cur.begin(), cur.end()));
    return cur;
}

bool naive_bracket(const SetFamily& f, std::size_t d, std::size_t m)
{
    for (const auto& s : naive_level(f, m))
        if (s.size() > d) return false;
    return true;
}

bool naive_brace(const SetFamily& f, std::size_t d, std::size_t m)
{
    auto v = as_sets(f);
    return !any_subset(v.size(), m, [&](const std::vector<std::size_t>& idx) {
        Set acc = v[idx[0]];
        for (auto i : idx) acc = meet(acc, v[i]);
        return acc.size() > d;
    });
}

bool naive_pq(const SetFamily& f, std::size_t p, std::size_t q)
{
    auto v = as_sets(f);
    return !any_subset(v.size(), p, [&](const std::vector<std::size_t>& idx) {
        for (std::uint32_t x = 0; x < f.universe(); ++x) {
            std::size_t c = 0;
            for (auto i : idx) c += contains(v[i], x);
            if (c >= q) return false;
        }
        return true;  // a bad p-subfamily
    });
}

bool naive_hit(const std::vector<Set>& sets, const Set& avoid, std::size_t t, std::size_t universe)
{
    std::vector<std::uint32_t> pts;
    for (std::uint32_t x = 0; x < universe; ++x)
        if (!contains(avoid, x)) pts.push_back(x);
    for (std::size_t k = 0; k <= std::min(t, pts.size()); ++k)
        if (any_subset(pts.size(), k, [&](const std::vector<std::size_t>& idx) {
                Set h;
                for (auto i : idx) h.push_back(pts[i]);
                for (const auto& s : sets)
                    if (!meets(s, h)) return false;
                return true;
            }))
            return true;
    return false;
}

std::size_t naive_tau(const SetFamily& f)
{
    auto v = as_sets(f);
    for (std::size_t k = 0;; ++k)
        if (naive_hit(v, {}, k, f.universe())) return k;
}

bool naive_t_property(const SetFamily& f, std::size_t t)
{
    auto v = as_sets(f);
    for (std::size_t a = 0; a < v.size(); ++a) {
        std::vector<Set> others;
        for (std::size_t b = 0; b < v.size(); ++b)
            if (b != a) others.push_back(v[b]);
        if (!naive_hit(others, v[a], t, f.universe())) return false;
    }
    return true;
}

std::set<Set> naive_proper_sets(const SetFamily& f)
{
    if (f.size() > 16) throw std::invalid_argument("naive_proper_sets: family too large");
    auto v = as_sets(f);
    std::set<Set> out;
    for (std::uint32_t mask = 1; mask < (1u << v.size()); ++mask) {
        std::optional<Set> acc;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (mask >> i & 1) acc = acc ? meet(*acc, v[i]) : v[i];
        if (!acc->empty()) out.insert(*acc);
    }
    return out;
}

std::size_t naive_codim(const SetFamily& f, const Set& w)
{
    std::optional<Set> minimal;
    for (const auto& b : naive_proper_sets(f))
        if (std::includes(b.begin(), b.end(), w.begin(), w.end()) && (!minimal || b.size() < minimal->size()))
            minimal = b;
    if (!minimal) return 0;
    std::size_t best = 0;
    for (std::size_t k = 0;; ++k) {
        auto level = naive_level(f, k);
        if (level.empty()) break;
        if (level.count(*minimal)) best = k + 1;
    }
    return best;
}

std::size_t naive_max_b(std::size_t d, std::size_t m, std::size_t t, std::size_t n, std::size_t smax)
{
    std::vector<PointSet> cands;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) > smax) continue;
        PointSet s;
        for (std::uint32_t x = 0; x < n; ++x)
            if (mask >> x & 1) s.insert(x);
        cands.push_back(s);
    }
    if (cands.size() > 20) throw std::invalid_argument("naive_max_b: scope too large");
    std::size_t best = 0;
    for (std::uint32_t pick = 1; pick < (1u << cands.size()); ++pick) {
        auto size = static_cast<std::size_t>(__builtin_popcount(pick));
        if (size <= best) continue;
        std::vector<PointSet> sets;
        for (std::size_t i = 0; i < cands.size(); ++i)
            if (pick >> i & 1) sets.push_back(cands[i]);
        SetFamily f(std::move(sets), n);
        if (!naive_bracket(f, d, m)) continue;
        if (size >= 2 && !naive_t_property(f, t)) continue;
        best = size;
    }
    return best;
}

}  // namespace qaf::testing
