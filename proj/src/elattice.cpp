#include "ordlat/elattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ordlat/axioms.hpp"
#include "ordlat/error.hpp"
#include "ordlat/spectra.hpp"

namespace ordlat {

const char* status_name(AxiomStatus s) noexcept {
  switch (s) {
    case AxiomStatus::kPass: return "pass";
    case AxiomStatus::kFail: return "fail";
    case AxiomStatus::kSkipped: return "skipped";
  }
  return "?";
}

bool AxiomReport::passed() const {
  return std::none_of(results.begin(), results.end(),
                      [](const AxiomResult& r) { return r.status == AxiomStatus::kFail; });
}

bool AxiomReport::complete() const {
  return std::all_of(results.begin(), results.end(),
                     [](const AxiomResult& r) { return r.status == AxiomStatus::kPass; });
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

ELatticeDescriptor descriptor(const AbelianGroup& g, std::size_t divisor_cap) {
  ELatticeDescriptor d{divisor_lattice(g.exponent_factorization(), divisor_cap), {}};
  const auto spec = spectrum(g, divisor_cap);
  d.class_size.reserve(d.fix_lattice.size());
  for (const auto& v : d.fix_lattice.values()) d.class_size.push_back(spec.count(v));
  return d;
}

std::vector<ExplicitELattice::Residue> ExplicitELattice::tuple(Element a) const {
  if (a >= size()) throw InvalidArgument("element index out of range");
  std::vector<Residue> x(moduli_.size());
  for (std::size_t i = moduli_.size(); i > 0; --i) {
    x[i - 1] = a % moduli_[i - 1];
    a /= moduli_[i - 1];
  }
  return x;
}

std::vector<ExplicitELattice::Element> ExplicitELattice::class_members(std::size_t k) const {
  std::vector<Element> out;
  for (Element a = 0; a < size(); ++a) {
    if (class_of_[a] == k) out.push_back(a);
  }
  return out;
}

ExplicitELattice build_explicit(const AbelianGroup& g, std::uint64_t element_cap) {
  if (g.order() > element_cap) {
    throw SizeError("group of order " + to_decimal(g.order()) + " exceeds element cap " +
                    std::to_string(element_cap));
  }
  ExplicitELattice e;
  for (const auto& d : g.invariant_factors()) e.moduli_.push_back(d.get_ui());
  const std::size_t n = g.order().get_ui();

  // Orders in row-major enumeration; the first element met in each class is
  // its lexicographically smallest tuple.
  std::vector<std::uint64_t> orders(n);
  std::vector<std::uint64_t> x(e.moduli_.size(), 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      ord = std::lcm(ord, e.moduli_[i] / std::gcd(e.moduli_[i], x[i]));
    }
    orders[a] = ord;
    for (std::size_t i = x.size(); i > 0; --i) {
      if (++x[i - 1] < e.moduli_[i - 1]) break;
      x[i - 1] = 0;
    }
  }

  std::map<std::uint64_t, ExplicitELattice::Element> first;
  for (std::size_t a = 0; a < n; ++a) first.try_emplace(orders[a], a);
  std::map<std::uint64_t, std::size_t> class_index;
  for (const auto& [ord, rep] : first) {
    class_index[ord] = e.class_order_.size();
    e.class_order_.push_back(ord);
    e.representative_.push_back(rep);
  }
  e.class_of_.resize(n);
  for (std::size_t a = 0; a < n; ++a) e.class_of_[a] = class_index.at(orders[a]);

  const std::size_t k = e.class_order_.size();
  e.class_meet_.resize(k * k);
  e.class_join_.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto oi = e.class_order_[i];
      const auto oj = e.class_order_[j];
      e.class_meet_[i * k + j] = class_index.at(std::gcd(oi, oj));
      e.class_join_[i * k + j] = class_index.at(std::lcm(oi, oj));
    }
  }
  return e;
}

OperationTables::OperationTables(std::size_t size, std::vector<Element> phi,
                                 std::vector<Element> meet, std::vector<Element> join)
    : size_(size), phi_(std::move(phi)), meet_(std::move(meet)), join_(std::move(join)) {
  if (phi_.size() != size_ || meet_.size() != size_ * size_ || join_.size() != size_ * size_) {
    throw InvalidArgument("operation table dimensions do not match the carrier size");
  }
}

namespace {

// Per-prime chain of class sizes: sizes at p^0, p^1, ..., p^e.
std::vector<Natural> chain_sizes(const ELatticeDescriptor& d, std::size_t prime_slot) {
  const auto& lat = d.fix_lattice;
  const std::size_t k = lat.base().size();
  std::vector<Exponent> exps(k, 0);
  std::vector<Natural> out;
  for (Exponent a = 0; a <= lat.base().entries()[prime_slot].exponent; ++a) {
    exps[prime_slot] = a;
    out.push_back(d.class_size_of(lat.index_of_exponents(exps)));
  }
  return out;
}

bool sizes_preserved(const ELatticeDescriptor& a, const ELatticeDescriptor& b,
                     const std::vector<std::size_t>& sigma) {
  const auto& la = a.fix_lattice;
  const auto& lb = b.fix_lattice;
  std::vector<Exponent> mapped(sigma.size());
  for (std::size_t i = 0; i < la.size(); ++i) {
    auto exps = la.exponents(i);
    for (std::size_t j = 0; j < sigma.size(); ++j) mapped[sigma[j]] = exps[j];
    if (a.class_size_of(i) != b.class_size_of(lb.index_of_exponents(mapped))) return false;
  }
  return true;
}

}  // namespace

IsoResult iso(const ELatticeDescriptor& a, const ELatticeDescriptor& b) {
  IsoResult out;
  if (lattice_shape(a.fix_lattice) != lattice_shape(b.fix_lattice)) {
    out.reason = "fix lattices are not isomorphic (different chain-length multisets)";
    return out;
  }
  const auto& pa = a.fix_lattice.base().entries();
  const auto& pb = b.fix_lattice.base().entries();
  const std::size_t k = pa.size();

  std::vector<std::vector<Natural>> chains_a(k), chains_b(k);
  for (std::size_t j = 0; j < k; ++j) {
    chains_a[j] = chain_sizes(a, j);
    chains_b[j] = chain_sizes(b, j);
  }

  // Depth-first over source primes in ascending order, trying targets in
  // ascending order, so the first complete match is lexicographically least.
  std::vector<std::size_t> sigma(k);
  std::vector<bool> used(k, false);
  auto search = [&](auto&& self, std::size_t j) -> bool {
    if (j == k) return sizes_preserved(a, b, sigma);
    for (std::size_t t = 0; t < k; ++t) {
      if (used[t] || pb[t].exponent != pa[j].exponent || chains_b[t] != chains_a[j]) continue;
      used[t] = true;
      sigma[j] = t;
      if (self(self, j + 1)) return true;
      used[t] = false;
    }
    return false;
  };

  if (!search(search, 0)) {
    out.reason = "no lattice isomorphism of the fix lattices preserves class sizes";
    return out;
  }
  out.isomorphic = true;
  for (std::size_t j = 0; j < k; ++j) out.witness.emplace_back(pa[j].prime, pb[sigma[j]].prime);
  return out;
}

IsoResult iso(const AbelianGroup& g, const AbelianGroup& h) {
  return iso(descriptor(g), descriptor(h));
}

std::vector<ExplicitELattice::Element> induced_map(const ExplicitELattice& a,
                                                   const ExplicitELattice& b,
                                                   const PrimeBijection& sigma) {
  if (a.size() != b.size()) throw InvalidArgument("carriers differ in size");
  auto map_order = [&](std::uint64_t d) {
    Natural image = 1;
    const auto f = factorize(Natural(static_cast<unsigned long>(d)));
    for (const auto& pp : f.entries()) {
      auto it = std::find_if(sigma.begin(), sigma.end(),
                             [&](const auto& s) { return s.first == pp.prime; });
      if (it == sigma.end()) throw InvalidArgument("prime bijection misses " + to_decimal(pp.prime));
      image *= pow(it->second, pp.exponent);
    }
    return image.get_ui();
  };
  std::map<std::uint64_t, std::size_t> b_class;
  for (std::size_t k = 0; k < b.classes(); ++k) b_class[b.class_order(k)] = k;

  std::vector<ExplicitELattice::Element> f(a.size());
  for (std::size_t k = 0; k < a.classes(); ++k) {
    auto it = b_class.find(map_order(a.class_order(k)));
    if (it == b_class.end()) throw InvalidArgument("mapped order is not realized in the target");
    const auto src = a.class_members(k);
    const auto dst = b.class_members(it->second);
    if (src.size() != dst.size()) throw InvalidArgument("class sizes differ under the bijection");
    for (std::size_t i = 0; i < src.size(); ++i) f[src[i]] = dst[i];
  }
  return f;
}

bool is_elattice_isomorphism(const ExplicitELattice& a, const ExplicitELattice& b,
                             const std::vector<ExplicitELattice::Element>& f) {
  const std::size_t n = a.size();
  if (b.size() != n || f.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto v : f) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (f[a.phi(x)] != b.phi(f[x])) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (f[a.meet(x, y)] != b.meet(f[x], f[y])) return false;
      if (f[a.join(x, y)] != b.join(f[x], f[y])) return false;
    }
  }
  return true;
}

}  // namespace ordlat
