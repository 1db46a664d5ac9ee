#pragma once

// Independent reference computations for tests. Nothing here calls the
// formulas under test; only the Natural type is shared.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "ordlat/arith.hpp"

namespace ordlat::testing {

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> naive_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    std::uint64_t e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::uint64_t euler_phi_by_count(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

inline std::vector<std::uint64_t> naive_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// Partitions as non-decreasing lists, including weight 0 as the empty list.
inline void naive_partitions(std::uint64_t remaining, std::uint64_t min_part,
                             std::vector<std::uint64_t>& prefix,
                             std::vector<std::vector<std::uint64_t>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::uint64_t part = min_part; part <= remaining; ++part) {
    prefix.push_back(part);
    naive_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<std::uint64_t>> naive_partitions(std::uint64_t weight) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> prefix;
  naive_partitions(weight, 1, prefix, out);
  return out;
}

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Every abelian group of order n as a list of prime-power cyclic factors,
// shuffled so callers do not depend on any canonical ordering.
inline std::vector<std::vector<std::uint64_t>> raw_groups_of_order(std::uint64_t n, std::mt19937_64& rng) {
  std::vector<std::vector<std::uint64_t>> groups{{}};
  for (auto [p, e] : naive_factor(n)) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& g : groups) {
      for (const auto& part : naive_partitions(e)) {
        auto h = g;
        for (auto a : part) h.push_back(ipow(p, a));
        next.push_back(std::move(h));
      }
    }
    groups = std::move(next);
  }
  for (auto& g : groups) std::shuffle(g.begin(), g.end(), rng);
  return groups;
}

inline std::vector<Natural> to_naturals(const std::vector<std::uint64_t>& xs) {
  std::vector<Natural> out;
  for (auto x : xs) out.emplace_back(static_cast<unsigned long>(x));
  return out;
}

// Counts of elements of order p^0..p^top by the recurrence
//   f_{m+1}(a) = p^a g_m(a) - p^(a-1) g_m(a-1),  g_m(a) = sum_{b <= a} f_m(b),
// folding the cyclic factors in one at a time (partition ascending). g is a
// running sum of the previous row, never the closed form.
inline std::vector<Natural> recurrence_counts(std::uint64_t p, const std::vector<std::uint64_t>& partition) {
  const std::uint64_t top = partition.back();
  auto ppow = [p](std::uint64_t e) {
    Natural r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r *= static_cast<unsigned long>(p);
    return r;
  };
  std::vector<Natural> f(top + 1, Natural(0));
  f[0] = 1;
  for (std::uint64_t a = 1; a <= partition[0]; ++a) f[a] = ppow(a) - ppow(a - 1);
  for (std::size_t m = 1; m < partition.size(); ++m) {
    std::vector<Natural> g(top + 1);
    Natural running = 0;
    for (std::uint64_t a = 0; a <= top; ++a) {
      running += f[a];
      g[a] = running;
    }
    std::vector<Natural> next(top + 1, Natural(0));
    next[0] = 1;
    for (std::uint64_t a = 1; a <= partition[m]; ++a) next[a] = ppow(a) * g[a] - ppow(a - 1) * g[a - 1];
    f = std::move(next);
  }
  return f;
}

// Brute-force order isomorphism between the divisor posets of a and b.
inline bool divisor_posets_isomorphic(std::uint64_t a, std::uint64_t b) {
  const auto da = naive_divisors(a);
  const auto db = naive_divisors(b);
  if (da.size() != db.size()) return false;
  const std::size_t n = da.size();
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = (da[i] % da[j] == 0) == (db[t] % db[image[j]] == 0) &&
             (da[j] % da[i] == 0) == (db[image[j]] % db[t] == 0);
      }
      if (!ok) continue;
      used[t] = true;
      image[i] = t;
      if (self(self, i + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace ordlat::testing
