#include "ordlat/spectra.hpp"

#include <algorithm>
#include <vector>

#include "ordlat/error.hpp"

namespace ordlat {

Natural OrderSpectrum::count(const Natural& order) const {
  auto it = entries.find(order);
  return it == entries.end() ? Natural(0) : it->second;
}

Natural OrderSpectrum::total() const {
  Natural sum = 0;
  for (const auto& [order, n] : entries) sum += n;
  return sum;
}

Natural cumulative_g(const PrimaryComponent& c, Exponent alpha) {
  Exponent s = 0;
  for (Exponent part : c.partition()) s += std::min(alpha, part);
  return pow(c.prime(), s);
}

Natural count_p_power(const PrimaryComponent& c, Exponent alpha) {
  if (alpha == 0) return 1;
  if (alpha > c.largest_part()) return 0;
  return cumulative_g(c, alpha) - cumulative_g(c, alpha - 1);
}

Natural count_order(const AbelianGroup& g, const Natural& d) {
  if (d <= 0) throw InvalidArgument("element order must be positive");
  Natural count = 1;
  const auto f = factorize(d);
  for (const auto& pp : f.entries()) {
    const PrimaryComponent* c = g.component(pp.prime);
    if (c == nullptr || pp.exponent > c->largest_part()) return 0;
    count *= count_p_power(*c, pp.exponent);
  }
  return count;
}

Natural count_prime_order(const AbelianGroup& g, const Natural& p) {
  if (!is_prime(p)) throw InvalidArgument(to_decimal(p) + " is not prime");
  const PrimaryComponent* c = g.component(p);
  if (c == nullptr) return 0;
  return pow(p, c->rank()) - 1;
}

OrderSpectrum spectrum(const AbelianGroup& g, std::size_t divisor_cap) {
  const auto lattice = divisor_lattice(g.exponent_factorization(), divisor_cap);
  const auto& comps = g.components();

  std::vector<std::vector<Natural>> per_prime;
  per_prime.reserve(comps.size());
  for (const auto& c : comps) {
    std::vector<Natural> f(c.largest_part() + 1);
    for (Exponent a = 0; a <= c.largest_part(); ++a) f[a] = count_p_power(c, a);
    per_prime.push_back(std::move(f));
  }

  OrderSpectrum out;
  out.group = g.to_string();
  out.exponent = g.exponent();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    auto exps = lattice.exponents(i);
    Natural count = 1;
    for (std::size_t j = 0; j < exps.size(); ++j) count *= per_prime[j][exps[j]];
    out.entries.emplace_hint(out.entries.end(), lattice.value(i), std::move(count));
  }
  return out;
}

}  // namespace ordlat
