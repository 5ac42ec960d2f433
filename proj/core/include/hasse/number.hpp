#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hasse {

bool is_prime(std::uint64_t n) noexcept;

/// Prime factorization in increasing prime order: {(p1, k1), (p2, k2), ...}.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// base^exp; throws std::overflow_error when the result does not fit in int64.
std::int64_t ipow(std::int64_t base, unsigned exp);

/// True iff n = p^k for some k >= 0.
bool is_power_of(std::uint64_t n, std::uint64_t p) noexcept;

/// Largest k with p^k dividing n (p >= 2, n >= 1).
unsigned valuation(std::uint64_t n, std::uint64_t p) noexcept;

}  // namespace hasse
