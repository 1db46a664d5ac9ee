#include "ordlat/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ordlat/error.hpp"

namespace ordlat {

const char* reason_code(NotRealizableReason reason) noexcept {
  switch (reason) {
    case NotRealizableReason::kMalformedEntry: return "malformed_entry";
    case NotRealizableReason::kBadIdentity: return "bad_identity";
    case NotRealizableReason::kNonPowerCumulative: return "non_power_cumulative";
    case NotRealizableReason::kNonMonotoneConjugate: return "non_monotone_conjugate";
    case NotRealizableReason::kMissingPrimePower: return "missing_prime_power";
    case NotRealizableReason::kSpectrumMismatch: return "spectrum_mismatch";
  }
  return "unknown";
}

SpectrumCandidate to_candidate(const OrderSpectrum& s) {
  SpectrumCandidate c;
  c.group = s.group;
  c.entries.assign(s.entries.begin(), s.entries.end());
  return c;
}

PrimaryComponent reconstruct_p_component(const Natural& p, std::span<const Natural> counts) {
  using R = NotRealizableReason;
  if (!is_prime(p)) throw InvalidArgument(to_decimal(p) + " is not prime");
  if (counts.empty() || counts[0] != 1) {
    throw NotRealizable(R::kBadIdentity, "exactly one element of order 1 is required");
  }
  for (const auto& n : counts) {
    if (n < 0) throw NotRealizable(R::kMalformedEntry, "negative count");
  }
  const std::size_t top = counts.size() - 1;
  if (top == 0) {
    throw NotRealizable(R::kMissingPrimePower,
                        "no element of order a positive power of " + to_decimal(p));
  }
  if (counts[top] == 0) throw NotRealizable(R::kMalformedEntry, "trailing zero count");

  // conjugate[a-1] = #{i : a_i >= a}
  std::vector<Exponent> conjugate;
  Natural cumulative = 0;
  Exponent previous_log = 0;
  for (std::size_t a = 0; a <= top; ++a) {
    cumulative += counts[a];
    Natural rest = cumulative;
    const Exponent log = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    if (rest != 1) {
      throw NotRealizable(R::kNonPowerCumulative,
                          "elements of order dividing " + to_decimal(p) + "^" + std::to_string(a) +
                              " number " + to_decimal(cumulative) + ", not a power of " +
                              to_decimal(p));
    }
    if (a > 0) {
      const Exponent step = log - previous_log;
      if (!conjugate.empty() && step > conjugate.back()) {
        throw NotRealizable(R::kNonMonotoneConjugate,
                            "number of cyclic factors of order at least " + to_decimal(p) + "^" +
                                std::to_string(a) + " would exceed that at " + std::to_string(a - 1));
      }
      if (a == 1 && step == 0) {
        throw NotRealizable(R::kNonMonotoneConjugate, "no element of order " + to_decimal(p));
      }
      conjugate.push_back(step);
    }
    previous_log = log;
  }

  // Transpose: the j-th largest part is #{a : conjugate(a) >= j}.
  std::vector<Exponent> parts;
  for (Exponent j = 1; j <= conjugate.front(); ++j) {
    parts.push_back(static_cast<Exponent>(
        std::count_if(conjugate.begin(), conjugate.end(), [j](Exponent c) { return c >= j; })));
  }
  std::sort(parts.begin(), parts.end());
  return PrimaryComponent(p, std::move(parts));
}

AbelianGroup reconstruct(const SpectrumCandidate& candidate) {
  using R = NotRealizableReason;
  std::map<Natural, Natural> claimed;
  for (const auto& [order, count] : candidate.entries) {
    if (order < 1) throw NotRealizable(R::kMalformedEntry, "order must be at least 1");
    if (count < 1) {
      throw NotRealizable(R::kMalformedEntry, "order " + to_decimal(order) + " has count " +
                                                  to_decimal(count) + "; list realized orders only");
    }
    if (!claimed.emplace(order, count).second) {
      throw NotRealizable(R::kMalformedEntry, "order " + to_decimal(order) + " listed twice");
    }
  }
  if (claimed.count(1) == 0 || claimed.at(1) != 1) {
    throw NotRealizable(R::kBadIdentity, "exactly one element of order 1 is required");
  }

  // Prime-power sub-spectra; mixed orders only contribute their primes.
  std::map<Natural, std::map<Exponent, Natural>> by_prime;
  for (const auto& [order, count] : claimed) {
    const auto f = factorize(order);
    for (const auto& pp : f.entries()) by_prime[pp.prime];
    if (f.size() == 1) by_prime[f.entries()[0].prime][f.entries()[0].exponent] = count;
  }

  std::vector<PrimaryComponent> components;
  for (const auto& [p, sub] : by_prime) {
    if (sub.empty()) {
      throw NotRealizable(R::kMissingPrimePower,
                          to_decimal(p) + " divides a listed order but no power of it is listed");
    }
    std::vector<Natural> counts(sub.rbegin()->first + 1, Natural(0));
    counts[0] = 1;
    for (const auto& [a, n] : sub) counts[a] = n;
    components.push_back(reconstruct_p_component(p, counts));
  }
  AbelianGroup g(std::move(components));

  const auto expected_keys = divisor_count(g.exponent_factorization(), claimed.size());
  if (!expected_keys || *expected_keys != claimed.size()) {
    throw NotRealizable(R::kSpectrumMismatch,
                        "the orders listed are not exactly the divisors of " + to_decimal(g.exponent()));
  }
  const auto forward = spectrum(g);
  for (const auto& [order, count] : forward.entries) {
    auto it = claimed.find(order);
    if (it == claimed.end()) {
      throw NotRealizable(R::kSpectrumMismatch, "order " + to_decimal(order) + " missing");
    }
    if (it->second != count) {
      throw NotRealizable(R::kSpectrumMismatch,
                          "order " + to_decimal(order) + " has " + to_decimal(it->second) +
                              " elements, but " + g.to_string() + " has " + to_decimal(count));
    }
  }
  return g;
}

}  // namespace ordlat
