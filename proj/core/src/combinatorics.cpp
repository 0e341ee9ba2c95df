#include "qaf/combinatorics.hpp"

#include <stdexcept>

namespace qaf {

__extension__ using Wide = unsigned __int128;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in multiplication");
    return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in addition");
    return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Wide r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t geometric_sum(std::uint64_t t, std::uint64_t e)
{
    std::uint64_t sum = 0;
    std::uint64_t term = 1;
    for (std::uint64_t i = 0; i <= e; ++i) {
        sum = checked_add(sum, term);
        if (i < e) term = checked_mul(term, t);
    }
    return sum;
}

std::vector<std::vector<std::uint32_t>> combinations(std::uint32_t n, std::uint32_t k)
{
    std::vector<std::vector<std::uint32_t>> out;
    if (k > n) return out;
    std::vector<std::uint32_t> idx(k);
    for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::uint32_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::uint32_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

}  // namespace qaf
