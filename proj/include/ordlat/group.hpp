#pragma once

// Canonical finite abelian groups: primary decomposition as the working form,
// invariant factors derived from it.

#include <string>
#include <vector>

#include "ordlat/arith.hpp"

namespace ordlat {

// The p-part Z_{p^a1} x ... x Z_{p^am} with 1 <= a1 <= ... <= am.
class PrimaryComponent {
 public:
  PrimaryComponent(Natural prime, std::vector<Exponent> partition);

  const Natural& prime() const noexcept { return prime_; }
  const std::vector<Exponent>& partition() const noexcept { return partition_; }
  // Number of cyclic factors m.
  std::size_t rank() const noexcept { return partition_.size(); }
  Exponent largest_part() const noexcept { return partition_.back(); }
  Exponent weight() const noexcept;

  friend bool operator==(const PrimaryComponent&, const PrimaryComponent&) = default;

 private:
  Natural prime_;
  std::vector<Exponent> partition_;
};

class AbelianGroup {
 public:
  // The trivial group.
  AbelianGroup() { derive(); }
  // Components must have strictly ascending primes.
  explicit AbelianGroup(std::vector<PrimaryComponent> components);

  const std::vector<PrimaryComponent>& components() const noexcept { return components_; }
  // nullptr if `p` does not divide the order.
  const PrimaryComponent* component(const Natural& p) const;

  const std::vector<Natural>& invariant_factors() const noexcept { return invariant_factors_; }
  const Natural& order() const noexcept { return order_; }
  const Natural& exponent() const noexcept { return exponent_; }
  bool is_trivial() const noexcept { return components_.empty(); }
  // Factorization of the exponent; its primes are exactly the component primes.
  Factorization exponent_factorization() const;

  // "Z4 x Z16" style over invariant factors; "trivial" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.components_ == b.components_;
  }

 private:
  void derive();

  std::vector<PrimaryComponent> components_;
  std::vector<Natural> invariant_factors_;
  Natural order_;
  Natural exponent_;
};

// Canonical group of Z_{f1} x ... x Z_{fr}; factors in any order, each >= 2.
AbelianGroup from_cyclic_factors(const std::vector<Natural>& factors);

inline std::vector<Natural> invariant_factors(const AbelianGroup& g) { return g.invariant_factors(); }
inline Natural order(const AbelianGroup& g) { return g.order(); }
inline Natural exponent(const AbelianGroup& g) { return g.exponent(); }

// All partitions of `weight` as non-decreasing part lists, in lexicographic order.
std::vector<std::vector<Exponent>> partitions(Exponent weight);

// Every abelian group of order n up to isomorphism, in a deterministic order.
std::vector<AbelianGroup> abelian_groups_of_order(const Natural& n);

}  // namespace ordlat
