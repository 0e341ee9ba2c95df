#include "qaf/extremal.hpp"

#include "qaf/combinatorics.hpp"
#include "qaf/errors.hpp"

#include <algorithm>

namespace qaf {

SetFamily construct_prop2(std::size_t d, std::size_t m, std::size_t t)
{
    if (d + m == 0) throw InvalidArgument("construct_prop2: d + m must be positive");
    if (t == 0) throw InvalidArgument("construct_prop2: t must be positive");
    auto k = static_cast<std::uint32_t>(d + m);
    auto n = static_cast<std::uint32_t>(d + m + t);
    if (n > PointSet::kCapacity) throw InvalidArgument("construct_prop2: ground set too large");
    std::vector<PointSet> sets;
    for (const auto& c : combinations(n, k)) sets.emplace_back(std::span<const Point>(c));
    return SetFamily(std::move(sets), n);
}

Bounds hg_bounds_thm1(std::size_t d, std::size_t m, std::size_t t)
{
    if (t == 0) throw InvalidArgument("t must be positive");
    return {binomial(d + m + t, d + m), geometric_sum(t, d + m)};
}

Bounds bounds_thm2(std::size_t d)
{
    if (d == 0) throw InvalidArgument("d must be at least 1");
    std::uint64_t lower = binomial(d + 3, 2);
    std::uint64_t quad = checked_add(checked_mul(2, checked_mul(d, d)), 3);
    return {lower, std::max(quad, lower)};
}

Bounds bounds_thm3(std::size_t t)
{
    if (t == 0) throw InvalidArgument("t must be at least 1");
    std::uint64_t lower = binomial(t + 2, 2);
    std::uint64_t quad = checked_add(checked_mul(t, t) - t, 3);
    return {lower, std::max(quad, lower)};
}

std::uint64_t thm4_threshold(std::size_t p, std::size_t q)
{
    if (q < 3 || p < q) throw InvalidArgument("threshold needs p >= q >= 3");
    std::uint64_t r = p - q;
    return checked_add(checked_mul(binomial(r + 3, 2), binomial(r + 2, 2) - 1), r + 4);
}

std::uint64_t b_upper_formula(std::size_t d, std::size_t m, std::size_t t)
{
    return geometric_sum(t, d + m);
}

std::optional<KnownB> known_b(std::size_t d, std::size_t m, std::size_t t)
{
    if (m != 1 || t == 0) return std::nullopt;
    if (d == 0) return KnownB{t + 1, "pairwise disjoint members: each deleted family needs one point per set"};
    if (t == 1) return KnownB{d + 2, "single-point representations pile d+1 points into two members"};
    if (t == 2) {
        switch (d) {
        case 1: return KnownB{6, "linear families, pencil decomposition"};
        case 2: return KnownB{10, "price counting against the triple ceiling"};
        case 3: return KnownB{15, "price counting against the triple ceiling"};
        default: break;
        }
    }
    if (d == 1 && t == 3) return KnownB{10, "linear families, pencil decomposition"};
    if (d == 1 && t == 4) return KnownB{15, "disjoint full pencils and price counting"};
    return std::nullopt;
}

}  // namespace qaf
