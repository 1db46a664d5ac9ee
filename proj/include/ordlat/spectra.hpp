#pragma once

// Exact element-order counting in finite abelian groups.
//
// For a p-group with partition a1 <= ... <= am, the number of elements of
// order dividing p^a is g(a) = p^(sum_i min(a, a_i)); the number of order
// exactly p^a is g(a) - g(a-1). Counts for a general order multiply across
// the primary components.

#include <map>
#include <optional>
#include <string>

#include "ordlat/arith.hpp"
#include "ordlat/group.hpp"

namespace ordlat {

// Map from element order to the number of elements of that order. Produced
// either by formula (spectrum) or by enumeration (oracle); `group` is the
// canonical spec string when known.
struct OrderSpectrum {
  std::optional<std::string> group;
  Natural exponent = 1;
  std::map<Natural, Natural> entries;

  // Count at `order`, 0 if absent.
  Natural count(const Natural& order) const;
  Natural total() const;

  friend bool operator==(const OrderSpectrum& a, const OrderSpectrum& b) {
    return a.exponent == b.exponent && a.entries == b.entries;
  }
};

// g(a): elements whose order divides p^a.
Natural cumulative_g(const PrimaryComponent& c, Exponent alpha);
// f(a): elements of order exactly p^a.
Natural count_p_power(const PrimaryComponent& c, Exponent alpha);

// Elements of order exactly d; 0 when d does not divide the exponent.
Natural count_order(const AbelianGroup& g, const Natural& d);

// p^m - 1 where m is the rank of the p-component; 0 if p does not divide |G|.
Natural count_prime_order(const AbelianGroup& g, const Natural& p);

OrderSpectrum spectrum(const AbelianGroup& g, std::size_t divisor_cap = kDefaultDivisorCap);

}  // namespace ordlat
