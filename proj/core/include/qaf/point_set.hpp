#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qaf {

/// Point identifier. Points of a family with universe n are 0..n-1.
using Point = std::uint32_t;

/// Finite set of points backed by a fixed-width bitset.
///
/// Iteration is ascending by id. The ordering operators compare the
/// ascending member sequences lexicographically, so {0,1} < {0,1,2} < {0,2}.
class PointSet {
public:
    static constexpr std::size_t kCapacity = 256;
    static constexpr std::size_t kWords = kCapacity / 64;

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Point;
        using difference_type = std::ptrdiff_t;
        using pointer = const Point*;
        using reference = Point;

        const_iterator() = default;
        Point operator*() const { return static_cast<Point>(pos_); }
        const_iterator& operator++()
        {
            pos_ = set_->next_from(pos_ + 1);
            return *this;
        }
        const_iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.pos_ == b.pos_; }

    private:
        friend class PointSet;
        const_iterator(const PointSet* s, std::size_t pos) : set_(s), pos_(pos) {}
        const PointSet* set_ = nullptr;
        std::size_t pos_ = kCapacity;
    };

    PointSet() = default;
    PointSet(std::initializer_list<Point> points);
    explicit PointSet(std::span<const Point> points);

    /// {0, 1, ..., count-1}.
    static PointSet prefix(std::size_t count);

    [[nodiscard]] bool contains(Point p) const
    {
        return p < kCapacity && ((words_[p >> 6] >> (p & 63)) & 1U) != 0;
    }
    void insert(Point p);
    void erase(Point p)
    {
        if (p < kCapacity) words_[p >> 6] &= ~(std::uint64_t{1} << (p & 63));
    }

    [[nodiscard]] std::size_t size() const
    {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    [[nodiscard]] bool empty() const
    {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    /// Smallest member; the set must be nonempty.
    [[nodiscard]] Point min() const { return static_cast<Point>(next_from(0)); }
    /// Largest member; the set must be nonempty.
    [[nodiscard]] Point max() const;

    [[nodiscard]] bool intersects(const PointSet& o) const
    {
        for (std::size_t i = 0; i < kWords; ++i)
            if ((words_[i] & o.words_[i]) != 0) return true;
        return false;
    }
    [[nodiscard]] std::size_t intersection_size(const PointSet& o) const
    {
        std::size_t n = 0;
        for (std::size_t i = 0; i < kWords; ++i) n += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return n;
    }
    [[nodiscard]] bool is_subset_of(const PointSet& o) const
    {
        for (std::size_t i = 0; i < kWords; ++i)
            if ((words_[i] & ~o.words_[i]) != 0) return false;
        return true;
    }

    PointSet& operator&=(const PointSet& o)
    {
        for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
        return *this;
    }
    PointSet& operator|=(const PointSet& o)
    {
        for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    PointSet& operator-=(const PointSet& o)
    {
        for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
    friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
    friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

    [[nodiscard]] const_iterator begin() const { return {this, next_from(0)}; }
    [[nodiscard]] const_iterator end() const { return {this, kCapacity}; }

    [[nodiscard]] std::vector<Point> to_vector() const;
    /// Space-separated ascending ids, e.g. "0 2 5".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PointSet&, const PointSet&) = default;
    friend std::strong_ordering operator<=>(const PointSet& a, const PointSet& b);

    [[nodiscard]] std::size_t hash() const;

private:
    [[nodiscard]] std::size_t next_from(std::size_t pos) const;

    std::array<std::uint64_t, kWords> words_{};
};

std::ostream& operator<<(std::ostream& os, const PointSet& s);

}  // namespace qaf

template <>
struct std::hash<qaf::PointSet> {
    std::size_t operator()(const qaf::PointSet& s) const noexcept { return s.hash(); }
};
