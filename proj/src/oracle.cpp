#include "ordlat/oracle.hpp"

#include <map>
#include <numeric>

#include "ordlat/error.hpp"

namespace ordlat::oracle {

std::uint64_t element_order(std::span<const Residue> x, std::span<const std::uint64_t> factors) {
  if (x.size() != factors.size()) throw InvalidArgument("element tuple has wrong length");
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] >= factors[i]) throw InvalidArgument("residue out of range");
    order = std::lcm(order, factors[i] / std::gcd(factors[i], x[i]));
  }
  return order;
}

Natural element_order(const std::vector<Natural>& x, const std::vector<Natural>& factors) {
  if (x.size() != factors.size()) throw InvalidArgument("element tuple has wrong length");
  Natural order = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] >= factors[i]) throw InvalidArgument("residue out of range");
    Natural g, piece;
    mpz_gcd(g.get_mpz_t(), factors[i].get_mpz_t(), x[i].get_mpz_t());
    piece = factors[i] / g;
    mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), piece.get_mpz_t());
  }
  return order;
}

OrderSpectrum enumerate_spectrum(const std::vector<Natural>& factors, std::uint64_t cap) {
  std::vector<std::uint64_t> moduli;
  Natural size = 1;
  for (const auto& f : factors) {
    if (f <= 0) throw InvalidArgument("cyclic factor must be positive");
    size *= f;
    if (size > cap) {
      throw SizeError("enumeration of " + std::to_string(factors.size()) +
                      " factors exceeds cap " + std::to_string(cap));
    }
    moduli.push_back(f.get_ui());
  }

  std::map<std::uint64_t, std::uint64_t> tally;
  std::vector<Residue> x(moduli.size(), 0);
  const std::uint64_t total = size.get_ui();
  for (std::uint64_t step = 0; step < total; ++step) {
    ++tally[element_order(x, moduli)];
    for (std::size_t i = x.size(); i > 0; --i) {
      if (++x[i - 1] < moduli[i - 1]) break;
      x[i - 1] = 0;
    }
  }

  OrderSpectrum out;
  out.exponent = 1;
  for (const auto& [order, count] : tally) {
    out.entries.emplace(Natural(static_cast<unsigned long>(order)),
                        Natural(static_cast<unsigned long>(count)));
    out.exponent = Natural(static_cast<unsigned long>(order));
  }
  return out;
}

}  // namespace ordlat::oracle
