#pragma once

// Brute-force ground truth. Enumerates every element of Z_{f1} x ... x Z_{fr}
// and tallies orders directly; shares nothing with the counting formulas
// beyond gcd/lcm.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ordlat/arith.hpp"
#include "ordlat/spectra.hpp"

namespace ordlat::oracle {

using Residue = std::uint64_t;

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000;

// Order of (x1, ..., xr): lcm over i of f_i / gcd(f_i, x_i).
std::uint64_t element_order(std::span<const Residue> x, std::span<const std::uint64_t> factors);
Natural element_order(const std::vector<Natural>& x, const std::vector<Natural>& factors);

// Every residue tuple, row-major (last coordinate fastest). Factors may be
// unordered and need not form a divisibility chain; an empty list is the
// trivial group.
OrderSpectrum enumerate_spectrum(const std::vector<Natural>& factors,
                                 std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace ordlat::oracle
