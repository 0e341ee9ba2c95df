#pragma once

#include "qaf/family.hpp"
#include "qaf/properties.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace qaf {

struct Bounds {
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// All (d+m)-subsets of {0..d+m+t-1}: a family with the [d,m]-property and
/// the t-property but no t-transversal, of size C(d+m+t, t).
SetFamily construct_prop2(std::size_t d, std::size_t m, std::size_t t);

/// Helly–Gallai bounds for [d,m] families: (C(d+m+t, d+m), sum_{i<=d+m} t^i).
Bounds hg_bounds_thm1(std::size_t d, std::size_t m, std::size_t t);

/// t = 2, m = 1: (C(d+3,2), max(2d^2+3, C(d+3,2))). Requires d >= 1.
Bounds bounds_thm2(std::size_t d);

/// Linear families: (C(t+2,2), max(t^2-t+3, C(t+2,2))). Requires t >= 1.
Bounds bounds_thm3(std::size_t t);

/// Minimum size of a linear (p,q) family for which at most p-q+1 points
/// are guaranteed to pierce it. Requires p >= q >= 3.
std::uint64_t thm4_threshold(std::size_t p, std::size_t q);

/// Upper bound on b(d,m;t) used wherever an exact value is unknown:
/// 1 + t + ... + t^{d+m}.
std::uint64_t b_upper_formula(std::size_t d, std::size_t m, std::size_t t);

struct KnownB {
    std::uint64_t value = 0;
    std::string_view basis;
};

/// Exactly known values of b(d,m;t).
std::optional<KnownB> known_b(std::size_t d, std::size_t m, std::size_t t);

struct SearchParams {
    std::size_t d = 0;
    std::size_t m = 1;
    std::size_t t = 1;
    std::size_t n = 1;       // universe size
    std::size_t s_max = 1;   // largest allowed set size
    std::uint64_t budget = 100'000'000;  // node limit
    /// Deepest level at which partial families are tested for being the
    /// lexicographic leader of their orbit under point relabelling.
    std::size_t symmetry_depth = 4;
};

struct SearchCertificate {
    SearchParams params;
    SetFamily best;
    std::size_t best_size = 0;
    bool exhaustive = false;
    std::uint64_t nodes = 0;
    std::size_t candidates = 0;
    /// Representations of `best`, when it has at least two members.
    std::optional<RepresentationMap> representations;
};

/// Largest family of distinct subsets of {0..n-1}, each of size <= s_max,
/// with the [d,m]-property and the t-property. Exhaustive iff the search
/// finished within the node budget. The result depends only on `params`.
SearchCertificate search_max_b(const SearchParams& params);

}  // namespace qaf
