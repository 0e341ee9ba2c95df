#include "qaf/point_set.hpp"

#include "qaf/errors.hpp"

#include <ostream>
#include <sstream>

namespace qaf {

PointSet::PointSet(std::initializer_list<Point> points)
{
    for (auto p : points) insert(p);
}

PointSet::PointSet(std::span<const Point> points)
{
    for (auto p : points) insert(p);
}

PointSet PointSet::prefix(std::size_t count)
{
    if (count > kCapacity) throw InvalidArgument("point set prefix exceeds capacity");
    PointSet s;
    for (std::size_t i = 0; i < count; ++i) s.insert(static_cast<Point>(i));
    return s;
}

void PointSet::insert(Point p)
{
    if (p >= kCapacity)
        throw InvalidArgument("point id " + std::to_string(p) + " exceeds capacity " + std::to_string(kCapacity));
    words_[p >> 6] |= std::uint64_t{1} << (p & 63);
}

Point PointSet::max() const
{
    for (std::size_t i = kWords; i-- > 0;)
        if (words_[i] != 0) return static_cast<Point>(i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[i])));
    return static_cast<Point>(kCapacity);
}

std::size_t PointSet::next_from(std::size_t pos) const
{
    while (pos < kCapacity) {
        std::size_t w = pos >> 6;
        std::uint64_t bits = words_[w] >> (pos & 63);
        if (bits != 0) return pos + static_cast<std::size_t>(std::countr_zero(bits));
        pos = (w + 1) * 64;
    }
    return kCapacity;
}

std::vector<Point> PointSet::to_vector() const
{
    std::vector<Point> out;
    out.reserve(size());
    for (auto p : *this) out.push_back(p);
    return out;
}

std::string PointSet::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (auto p : *this) {
        if (!first) os << ' ';
        os << p;
        first = false;
    }
    return os.str();
}

std::strong_ordering operator<=>(const PointSet& a, const PointSet& b)
{
    // First point where the sets differ decides, unless the set lacking it
    // has nothing beyond it (then it is a proper prefix and sorts first).
    for (std::size_t i = 0; i < PointSet::kWords; ++i) {
        std::uint64_t diff = a.words_[i] ^ b.words_[i];
        if (diff == 0) continue;
        std::size_t pos = i * 64 + static_cast<std::size_t>(std::countr_zero(diff));
        bool in_a = a.contains(static_cast<Point>(pos));
        const PointSet& lacking = in_a ? b : a;
        bool lacking_has_more = lacking.next_from(pos + 1) < PointSet::kCapacity;
        if (in_a) return lacking_has_more ? std::strong_ordering::less : std::strong_ordering::greater;
        return lacking_has_more ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::size_t PointSet::hash() const
{
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

std::ostream& operator<<(std::ostream& os, const PointSet& s)
{
    os << '{';
    bool first = true;
    for (auto p : s) {
        if (!first) os << ',';
        os << p;
        first = false;
    }
    return os << '}';
}

}  // namespace qaf
