#pragma once

// Exact integer arithmetic, prime factorization and divisor lattices.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ordlat {

// Arbitrary-precision non-negative integer. Element counts grow like p^(m*a),
// so nothing that holds a count or an order is allowed to be fixed-width.
using Natural = mpz_class;
using Exponent = std::uint64_t;

Natural parse_natural(const std::string& decimal);
std::string to_decimal(const Natural& n);
Natural pow(const Natural& base, Exponent e);

// Deterministic primality for the magnitudes factorize() accepts.
bool is_prime(const Natural& n);

struct PrimePower {
  Natural prime;
  Exponent exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization with strictly ascending primes and positive exponents.
class Factorization {
 public:
  Factorization() = default;

  // Validates primality, ordering and exponents.
  static Factorization from_prime_powers(std::vector<PrimePower> entries);

  const std::vector<PrimePower>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Natural value() const;
  // Exponent of `p` in the factored value; 0 if absent.
  Exponent exponent_of(const Natural& p) const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  explicit Factorization(std::vector<PrimePower> entries) : entries_(std::move(entries)) {}
  friend Factorization factorize(const Natural& n);

  std::vector<PrimePower> entries_;
};

// Trial division by 2, 3 and a 6k+-1 wheel up to kTrialDivisionBound (up to
// 2^16 once the cofactor fits in 64 bits). A leftover cofactor is prime if it
// is below the square of the last divisor tried or passes BPSW below 2^64 (no
// counterexamples exist there); a composite cofactor below 2^64 is split by
// Pollard-Brent. A composite cofactor of 2^64 or more throws
// SizeError: this is not a general-purpose factorizer.
inline constexpr std::uint64_t kTrialDivisionBound = 10'000'000;
Factorization factorize(const Natural& n);

inline constexpr std::size_t kDefaultDivisorCap = 1'000'000;

// Lattice of all divisors of a base value under divisibility. Elements are
// stored as exponent vectors over the base primes, sorted by numeric value,
// so index 0 is the bottom (1) and the last index is the top (the base).
class DivisorLattice {
 public:
  using Index = std::size_t;

  const Factorization& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return values_.size(); }
  Index bottom() const noexcept { return 0; }
  Index top() const noexcept { return values_.size() - 1; }

  const Natural& value(Index i) const { return values_.at(i); }
  std::span<const Exponent> exponents(Index i) const;
  const std::vector<Natural>& values() const noexcept { return values_; }

  std::optional<Index> index_of(const Natural& d) const;
  // Index of the divisor with the given exponent vector (one entry per base prime).
  Index index_of_exponents(std::span<const Exponent> exps) const;

  Index meet(Index a, Index b) const;  // gcd
  Index join(Index a, Index b) const;  // lcm
  bool leq(Index a, Index b) const;    // a | b

  // Covering pairs (lower, upper) of the Hasse diagram, sorted.
  std::vector<std::pair<Index, Index>> covering_edges() const;

 private:
  friend DivisorLattice divisor_lattice(const Factorization& base, std::size_t cap);

  Factorization base_;
  std::vector<Natural> values_;
  std::vector<Exponent> exps_;        // row-major, size() x base_.size()
  std::vector<Index> radix_to_index_; // mixed-radix code -> sorted position
  std::vector<std::size_t> radix_;    // place values of the mixed-radix code

  std::size_t code_of(std::span<const Exponent> exps) const;
};

DivisorLattice divisor_lattice(const Natural& n, std::size_t cap = kDefaultDivisorCap);
DivisorLattice divisor_lattice(const Factorization& base, std::size_t cap = kDefaultDivisorCap);

// Number of divisors, or nullopt if it exceeds `cap`.
std::optional<std::size_t> divisor_count(const Factorization& f, std::size_t cap);

// Multiset of chain lengths (the exponents of the base), sorted descending.
// Two divisor lattices are isomorphic iff their shapes are equal.
std::vector<Exponent> lattice_shape(const DivisorLattice& lattice);

}  // namespace ordlat
