#include "builders.hpp"

#include "qaf/combinatorics.hpp"

namespace qaf::testing {

SetFamily all_subsets(std::size_t n, std::size_t k)
{
    std::vector<PointSet> v;
    for (const auto& c : combinations(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k)))
        v.emplace_back(std::span<const Point>(c));
    return SetFamily(std::move(v), n);
}

SetFamily pencil(Point centre, std::size_t count)
{
    std::vector<PointSet> v;
    Point next = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (next == centre) ++next;
        v.push_back(PointSet{centre, next++});
    }
    return SetFamily::from_sets(std::move(v));
}

}  // namespace qaf::testing
