#pragma once

// Recover a finite abelian group from its order spectrum.
//
// Per prime p, the cumulative counts g(a) = #{x : ord(x) | p^a} must equal
// p^s(a) with s(a) = sum_i min(a, a_i). The increments c(a) = s(a) - s(a-1)
// count the parts a_i >= a, i.e. c is the conjugate of the partition.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ordlat/arith.hpp"
#include "ordlat/group.hpp"
#include "ordlat/spectra.hpp"

namespace ordlat {

// Claimed (order, count) pairs as read from outside; nothing validated yet.
struct SpectrumCandidate {
  std::optional<std::string> group;
  std::vector<std::pair<Natural, Natural>> entries;
};

SpectrumCandidate to_candidate(const OrderSpectrum& s);

// counts[a] is the claimed number of elements of order p^a, a = 0..A.
// Throws NotRealizable when no finite abelian p-group has these counts.
PrimaryComponent reconstruct_p_component(const Natural& p, std::span<const Natural> counts);

// Throws NotRealizable unless the candidate is exactly the spectrum of the
// returned group.
AbelianGroup reconstruct(const SpectrumCandidate& candidate);

}  // namespace ordlat
