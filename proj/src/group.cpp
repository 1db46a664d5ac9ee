#include "ordlat/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ordlat/error.hpp"

namespace ordlat {

PrimaryComponent::PrimaryComponent(Natural prime, std::vector<Exponent> partition)
    : prime_(std::move(prime)), partition_(std::move(partition)) {
  if (partition_.empty()) throw InvalidArgument("primary component needs at least one part");
  if (!std::is_sorted(partition_.begin(), partition_.end()) || partition_.front() == 0) {
    throw InvalidArgument("partition must be non-decreasing with positive parts");
  }
  if (!is_prime(prime_)) throw InvalidArgument(to_decimal(prime_) + " is not prime");
}

Exponent PrimaryComponent::weight() const noexcept {
  return std::accumulate(partition_.begin(), partition_.end(), Exponent{0});
}

AbelianGroup::AbelianGroup(std::vector<PrimaryComponent> components)
    : components_(std::move(components)) {
  for (std::size_t i = 1; i < components_.size(); ++i) {
    if (components_[i - 1].prime() >= components_[i].prime()) {
      throw InvalidArgument("component primes must be strictly ascending");
    }
  }
  derive();
}

void AbelianGroup::derive() {
  order_ = 1;
  exponent_ = 1;
  std::size_t m = 0;
  for (const auto& c : components_) {
    order_ *= pow(c.prime(), c.weight());
    exponent_ *= pow(c.prime(), c.largest_part());
    m = std::max(m, c.rank());
  }
  // Right-align the partitions: d_m collects every largest part, d_{m-1} the
  // second largest, and so on; short partitions contribute p^0 on the left.
  invariant_factors_.assign(m, Natural(1));
  for (const auto& c : components_) {
    const auto& parts = c.partition();
    const std::size_t offset = m - parts.size();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      invariant_factors_[offset + i] *= pow(c.prime(), parts[i]);
    }
  }
}

const PrimaryComponent* AbelianGroup::component(const Natural& p) const {
  for (const auto& c : components_) {
    if (c.prime() == p) return &c;
  }
  return nullptr;
}

Factorization AbelianGroup::exponent_factorization() const {
  std::vector<PrimePower> pps;
  for (const auto& c : components_) pps.push_back({c.prime(), c.largest_part()});
  return Factorization::from_prime_powers(std::move(pps));
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "trivial";
  std::string s;
  for (const auto& d : invariant_factors_) {
    if (!s.empty()) s += " x ";
    s += "Z" + to_decimal(d);
  }
  return s;
}

AbelianGroup from_cyclic_factors(const std::vector<Natural>& factors) {
  std::map<Natural, std::vector<Exponent>> by_prime;
  for (const auto& f : factors) {
    if (f <= 1) throw InvalidArgument("cyclic factor must be at least 2, got " + to_decimal(f));
    const auto fact = factorize(f);
    for (const auto& pp : fact.entries()) by_prime[pp.prime].push_back(pp.exponent);
  }
  std::vector<PrimaryComponent> components;
  for (auto& [p, parts] : by_prime) {
    std::sort(parts.begin(), parts.end());
    components.emplace_back(p, std::move(parts));
  }
  return AbelianGroup(std::move(components));
}

namespace {

void partitions_into(Exponent remaining, Exponent min_part, std::vector<Exponent>& prefix,
                     std::vector<std::vector<Exponent>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (Exponent part = min_part; part <= remaining; ++part) {
    // The remaining weight must be coverable by parts >= this one.
    if (remaining - part != 0 && remaining - part < part) continue;
    prefix.push_back(part);
    partitions_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Exponent>> partitions(Exponent weight) {
  std::vector<std::vector<Exponent>> out;
  if (weight == 0) return out;
  std::vector<Exponent> prefix;
  partitions_into(weight, 1, prefix, out);
  return out;
}

std::vector<AbelianGroup> abelian_groups_of_order(const Natural& n) {
  if (n <= 0) throw InvalidArgument("group order must be positive");
  const auto f = factorize(n);
  std::vector<std::vector<std::vector<Exponent>>> choices;
  for (const auto& pp : f.entries()) choices.push_back(partitions(pp.exponent));

  std::vector<AbelianGroup> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::vector<PrimaryComponent> comps;
    for (std::size_t j = 0; j < choices.size(); ++j) {
      comps.emplace_back(f.entries()[j].prime, choices[j][pick[j]]);
    }
    out.emplace_back(std::move(comps));
    // Odometer, last prime fastest.
    std::size_t j = choices.size();
    while (j > 0) {
      --j;
      if (++pick[j] < choices[j].size()) break;
      pick[j] = 0;
      if (j == 0) return out;
    }
    if (choices.empty()) return out;
  }
}

}  // namespace ordlat
