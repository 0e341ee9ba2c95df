#pragma once

#include <cstdint>
#include <vector>

namespace qaf {

/// n choose k; throws std::overflow_error past 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// 1 + t + t^2 + ... + t^e; throws std::overflow_error past 64 bits.
std::uint64_t geometric_sum(std::uint64_t t, std::uint64_t e);

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

/// All k-subsets of {0..n-1} as ascending index vectors, lexicographic.
std::vector<std::vector<std::uint32_t>> combinations(std::uint32_t n, std::uint32_t k);

}  // namespace qaf
