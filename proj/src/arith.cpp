#include "ordlat/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <cstdint>

#include "ordlat/error.hpp"

namespace ordlat {

namespace {

bool fits_u64(const Natural& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

// GMP >= 6.2 runs Baillie-PSW first, which is exact below 2^64.
bool bpsw_probable_prime(const Natural& n) { return mpz_probab_prime_p(n.get_mpz_t(), 25) > 0; }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ typedef unsigned __int128 u128;
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

// Brent's cycle-finding variant of Pollard rho; n odd composite. Seeds are
// fixed so the result is deterministic.
std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_u64(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(Natural(static_cast<unsigned long>(n)).get_mpz_t(), 25) > 0) {
    primes.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  split_u64(d, primes);
  split_u64(n / d, primes);
}

Exponent strip(Natural& rest, unsigned long d) {
  Exponent e = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
    ++e;
  }
  return e;
}

}  // namespace

Natural parse_natural(const std::string& decimal) {
  if (decimal.empty() || !std::all_of(decimal.begin(), decimal.end(),
                                      [](char c) { return c >= '0' && c <= '9'; })) {
    throw InvalidArgument("not a decimal natural number: '" + decimal + "'");
  }
  return Natural(decimal, 10);
}

std::string to_decimal(const Natural& n) { return n.get_str(10); }

Natural pow(const Natural& base, Exponent e) {
  Natural out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

bool is_prime(const Natural& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return bpsw_probable_prime(n);
  Natural rest = n;
  if (strip(rest, 2) > 0 || strip(rest, 3) > 0) return false;
  for (unsigned long d = 5; d <= kTrialDivisionBound; d += 6) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0 || mpz_divisible_ui_p(n.get_mpz_t(), d + 2) != 0) {
      return false;
    }
  }
  throw SizeError("cannot certify primality of " + to_decimal(n) + " (beyond 2^64)");
}

Natural Factorization::value() const {
  Natural v = 1;
  for (const auto& pp : entries_) v *= pow(pp.prime, pp.exponent);
  return v;
}

Exponent Factorization::exponent_of(const Natural& p) const {
  for (const auto& pp : entries_) {
    if (pp.prime == p) return pp.exponent;
  }
  return 0;
}

Factorization Factorization::from_prime_powers(std::vector<PrimePower> entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].exponent == 0) throw InvalidArgument("zero exponent in factorization");
    if (i > 0 && entries[i - 1].prime >= entries[i].prime) {
      throw InvalidArgument("factorization primes must be strictly ascending");
    }
    if (!is_prime(entries[i].prime)) {
      throw InvalidArgument(to_decimal(entries[i].prime) + " is not prime");
    }
  }
  return Factorization(std::move(entries));
}

Factorization factorize(const Natural& n) {
  if (n <= 0) throw InvalidArgument("cannot factorize 0");
  std::vector<PrimePower> out;
  Natural rest = n;
  auto take = [&](unsigned long d) {
    if (Exponent e = strip(rest, d); e > 0) out.push_back({Natural(d), e});
    return rest == 1;
  };
  auto accept_rest_if_prime = [&]() {
    if (rest > 1 && fits_u64(rest) && bpsw_probable_prime(rest)) {
      out.push_back({rest, 1});
      rest = 1;
    }
    return rest == 1;
  };

  if (take(2) || take(3) || accept_rest_if_prime()) return Factorization(std::move(out));

  // Once the cofactor fits in 64 bits, trial division gives way to
  // Pollard-Brent past kRhoThreshold.
  constexpr unsigned long kRhoThreshold = 1ul << 16;
  unsigned long d = 5;
  for (; d <= kTrialDivisionBound; d += 6) {
    if (fits_u64(rest)) {
      const std::uint64_t r = rest.get_ui();
      if (d > kRhoThreshold || static_cast<std::uint64_t>(d) * d > r) break;
    }
    const std::size_t found = out.size();
    if (take(d) || take(d + 2)) break;
    if (out.size() != found && accept_rest_if_prime()) break;
  }
  if (rest > 1) {
    if (Natural(d) * d > rest || (fits_u64(rest) && bpsw_probable_prime(rest))) {
      out.push_back({rest, 1});
    } else if (fits_u64(rest)) {
      std::vector<std::uint64_t> primes;
      split_u64(rest.get_ui(), primes);
      std::sort(primes.begin(), primes.end());
      for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        out.push_back({Natural(static_cast<unsigned long>(primes[i])), j - i});
        i = j;
      }
    } else {
      throw SizeError("cofactor " + to_decimal(rest) + " of " + to_decimal(n) +
                      " is beyond the trial-division bound");
    }
  }
  return Factorization(std::move(out));
}

std::optional<std::size_t> divisor_count(const Factorization& f, std::size_t cap) {
  std::size_t count = 1;
  for (const auto& pp : f.entries()) {
    if (pp.exponent >= cap) return std::nullopt;
    std::size_t width = static_cast<std::size_t>(pp.exponent) + 1;
    if (count > cap / width) return std::nullopt;
    count *= width;
  }
  if (count > cap) return std::nullopt;
  return count;
}

DivisorLattice divisor_lattice(const Natural& n, std::size_t cap) {
  if (n <= 0) throw InvalidArgument("divisor lattice of 0 is undefined");
  return divisor_lattice(factorize(n), cap);
}

DivisorLattice divisor_lattice(const Factorization& base, std::size_t cap) {
  auto count = divisor_count(base, cap);
  if (!count) {
    throw SizeError("divisor count of " + to_decimal(base.value()) + " exceeds cap " +
                    std::to_string(cap));
  }
  const std::size_t k = base.size();
  const auto& pps = base.entries();

  DivisorLattice lat;
  lat.base_ = base;
  lat.radix_.resize(k);
  std::size_t place = 1;
  for (std::size_t j = 0; j < k; ++j) {
    lat.radix_[j] = place;
    place *= static_cast<std::size_t>(pps[j].exponent) + 1;
  }

  // Values in mixed-radix code order; digit 0 varies fastest.
  std::vector<Natural> by_code(*count);
  by_code[0] = 1;
  for (std::size_t c = 1; c < *count; ++c) {
    std::size_t j = 0;
    while ((c / lat.radix_[j]) % (pps[j].exponent + 1) == 0) ++j;
    by_code[c] = by_code[c - lat.radix_[j]] * pps[j].prime;
  }

  std::vector<std::size_t> order(*count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return by_code[a] < by_code[b]; });

  lat.values_.resize(*count);
  lat.exps_.resize(*count * k);
  lat.radix_to_index_.resize(*count);
  for (std::size_t i = 0; i < *count; ++i) {
    const std::size_t c = order[i];
    lat.values_[i] = by_code[c];
    lat.radix_to_index_[c] = i;
    for (std::size_t j = 0; j < k; ++j) {
      lat.exps_[i * k + j] = (c / lat.radix_[j]) % (pps[j].exponent + 1);
    }
  }
  return lat;
}

std::span<const Exponent> DivisorLattice::exponents(Index i) const {
  const std::size_t k = base_.size();
  if (i >= size()) throw InvalidArgument("divisor index out of range");
  return std::span<const Exponent>(exps_).subspan(i * k, k);
}

std::size_t DivisorLattice::code_of(std::span<const Exponent> exps) const {
  std::size_t code = 0;
  for (std::size_t j = 0; j < exps.size(); ++j) code += exps[j] * radix_[j];
  return code;
}

DivisorLattice::Index DivisorLattice::index_of_exponents(std::span<const Exponent> exps) const {
  if (exps.size() != base_.size()) throw InvalidArgument("exponent vector has wrong length");
  for (std::size_t j = 0; j < exps.size(); ++j) {
    if (exps[j] > base_.entries()[j].exponent) {
      throw InvalidArgument("exponent vector is not a divisor of the base");
    }
  }
  return radix_to_index_[code_of(exps)];
}

std::optional<DivisorLattice::Index> DivisorLattice::index_of(const Natural& d) const {
  if (d <= 0) return std::nullopt;
  Natural rest = d;
  std::size_t code = 0;
  for (std::size_t j = 0; j < base_.size(); ++j) {
    const auto& pp = base_.entries()[j];
    Exponent e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), pp.prime.get_mpz_t());
    if (e > pp.exponent) return std::nullopt;
    code += e * radix_[j];
  }
  if (rest != 1) return std::nullopt;
  return radix_to_index_[code];
}

DivisorLattice::Index DivisorLattice::meet(Index a, Index b) const {
  auto ea = exponents(a);
  auto eb = exponents(b);
  std::size_t code = 0;
  for (std::size_t j = 0; j < ea.size(); ++j) code += std::min(ea[j], eb[j]) * radix_[j];
  return radix_to_index_[code];
}

DivisorLattice::Index DivisorLattice::join(Index a, Index b) const {
  auto ea = exponents(a);
  auto eb = exponents(b);
  std::size_t code = 0;
  for (std::size_t j = 0; j < ea.size(); ++j) code += std::max(ea[j], eb[j]) * radix_[j];
  return radix_to_index_[code];
}

bool DivisorLattice::leq(Index a, Index b) const {
  auto ea = exponents(a);
  auto eb = exponents(b);
  for (std::size_t j = 0; j < ea.size(); ++j) {
    if (ea[j] > eb[j]) return false;
  }
  return true;
}

std::vector<std::pair<DivisorLattice::Index, DivisorLattice::Index>>
DivisorLattice::covering_edges() const {
  std::vector<std::pair<Index, Index>> edges;
  const std::size_t k = base_.size();
  for (Index i = 0; i < size(); ++i) {
    auto e = exponents(i);
    std::size_t code = code_of(e);
    for (std::size_t j = 0; j < k; ++j) {
      if (e[j] < base_.entries()[j].exponent) {
        edges.emplace_back(i, radix_to_index_[code + radix_[j]]);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<Exponent> lattice_shape(const DivisorLattice& lattice) {
  std::vector<Exponent> shape;
  for (const auto& pp : lattice.base().entries()) shape.push_back(pp.exponent);
  std::sort(shape.begin(), shape.end(), std::greater<>());
  return shape;
}

}  // namespace ordlat
