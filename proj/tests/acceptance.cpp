// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ordlat/axioms.hpp"
#include "ordlat/elattice.hpp"
#include "ordlat/error.hpp"
#include "ordlat/group.hpp"
#include "ordlat/oracle.hpp"
#include "ordlat/reconstruct.hpp"
#include "ordlat/spectra.hpp"
#include "support/oracles.hpp"

using namespace ordlat;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_ms;
  std::function<Outcome()> body;
};

std::vector<Natural> nat(std::initializer_list<unsigned long> xs) {
  std::vector<Natural> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

// All abelian groups of order <= limit, generated independently of the
// library as shuffled prime-power factor lists.
std::vector<std::vector<std::uint64_t>> raw_groups_up_to(std::uint64_t limit) {
  std::mt19937_64 rng(0x5eed);
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    for (auto& g : ordlat::testing::raw_groups_of_order(n, rng)) out.push_back(std::move(g));
  }
  return out;
}

Outcome z4_z16_spectrum() {
  Outcome o;
  const auto s = spectrum(from_cyclic_factors(nat({4, 16})));
  const std::map<Natural, Natural> expected{{1, 1}, {2, 3}, {4, 12}, {8, 16}, {16, 32}};
  o.require(s.entries == expected, "spectrum of Z4 x Z16 differs from {1:1, 2:3, 4:12, 8:16, 16:32}");
  return o;
}

Outcome z12_z720_order_120() {
  Outcome o;
  const auto g = from_cyclic_factors(nat({12, 720}));
  o.require(g.components().size() == 3, "Z12 x Z720 should have 3 primary components");
  if (!o.ok) return o;
  o.require(count_p_power(g.components()[0], 3) == 16, "2-part count at exponent 3 != 16");
  o.require(count_p_power(g.components()[1], 1) == 8, "f^3_2(1) != 8");
  o.require(count_p_power(g.components()[2], 1) == 4, "f^5_1(1) != 4");
  o.require(count_order(g, 120) == 512, "count_order(Z12 x Z720, 120) != 512");
  return o;
}

Outcome prime_order_counts() {
  Outcome o;
  std::size_t checked = 0;
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    for (std::uint64_t w = 1; w <= 6; ++w) {
      for (const auto& part : ordlat::testing::naive_partitions(w)) {
        const PrimaryComponent c(Natural(static_cast<unsigned long>(p)),
                                 std::vector<Exponent>(part.begin(), part.end()));
        const Natural expected(static_cast<unsigned long>(ordlat::testing::ipow(p, part.size()) - 1));
        o.require(count_p_power(c, 1) == expected,
                  "p=" + std::to_string(p) + " weight " + std::to_string(w) + ": f(1) != p^m - 1");
        o.require(count_prime_order(AbelianGroup({c}), c.prime()) == expected, "count_prime_order disagrees");
        ++checked;
      }
    }
  }
  o.require(checked == 4 * (1 + 2 + 3 + 5 + 7 + 11), "unexpected number of partitions");
  o.detail = o.ok ? std::to_string(checked) + " components" : o.detail;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto groups = raw_groups_up_to(2000);
  for (const auto& raw : groups) {
    const auto fs = ordlat::testing::to_naturals(raw);
    const auto formula = spectrum(from_cyclic_factors(fs));
    const auto brute = oracle::enumerate_spectrum(fs);
    if (!(formula.entries == brute.entries) || formula.exponent != brute.exponent) {
      std::string s;
      for (auto f : raw) s += std::to_string(f) + " ";
      o.require(false, "mismatch for factors " + s);
      return o;
    }
  }
  o.detail = std::to_string(groups.size()) + " groups";
  return o;
}

Outcome iso_matches_canonical() {
  Outcome o;
  std::vector<AbelianGroup> groups;
  for (const auto& raw : raw_groups_up_to(200)) groups.push_back(from_cyclic_factors(ordlat::testing::to_naturals(raw)));
  std::vector<ELatticeDescriptor> descriptors;
  for (const auto& g : groups) descriptors.push_back(descriptor(g));
  std::size_t pairs = 0, isomorphic = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i; j < groups.size(); ++j) {
      const auto r = iso(descriptors[i], descriptors[j]);
      const bool same = groups[i] == groups[j];
      ++pairs;
      isomorphic += r.isomorphic;
      if (r.isomorphic != same) {
        o.require(false, groups[i].to_string() + " vs " + groups[j].to_string());
        return o;
      }
    }
  }
  o.require(isomorphic == groups.size(), "expected exactly the diagonal pairs to be isomorphic");
  if (o.ok) o.detail = std::to_string(pairs) + " pairs over " + std::to_string(groups.size()) + " groups";
  return o;
}

Outcome reconstruct_round_trip() {
  Outcome o;
  const auto groups = raw_groups_up_to(10000);
  for (const auto& raw : groups) {
    const auto g = from_cyclic_factors(ordlat::testing::to_naturals(raw));
    try {
      if (!(reconstruct(to_candidate(spectrum(g))) == g)) {
        o.require(false, "round trip changed " + g.to_string());
        return o;
      }
    } catch (const NotRealizable& e) {
      o.require(false, g.to_string() + " rejected: " + e.what());
      return o;
    }
  }
  o.detail = std::to_string(groups.size()) + " groups";
  return o;
}

Outcome axiom_suite() {
  Outcome o;
  std::size_t count = 0;
  bool saw_z4_z16 = false;
  const auto z4_z16 = from_cyclic_factors(nat({4, 16}));
  for (const auto& raw : raw_groups_up_to(100)) {
    const auto g = from_cyclic_factors(ordlat::testing::to_naturals(raw));
    saw_z4_z16 = saw_z4_z16 || g == z4_z16;
    const auto report = check_axioms(build_explicit(g), {.triple_cap = 100, .pair_cap = 5000});
    if (!report.complete()) {
      for (const auto& r : report.results) {
        if (r.status != AxiomStatus::kPass) {
          o.require(false, g.to_string() + ": " + r.name + " " + status_name(r.status));
          return o;
        }
      }
    }
    o.require(report.results.size() == 12, "axiom report is missing checks");
    ++count;
  }
  o.require(saw_z4_z16, "Z4 x Z16 was not among the checked groups");
  if (o.ok) o.detail = std::to_string(count) + " groups, 12 checks each";
  return o;
}

Outcome negative_controls() {
  Outcome o;
  {
    const auto e = build_explicit(from_cyclic_factors(nat({4, 16})));
    auto t = OperationTables::materialize(e);
    t.set_meet(1, 16, e.phi(1));
    const auto report = check_axioms(t);
    const auto* comm = report.find("b_commutative_meet");
    o.require(!report.passed(), "mutated meet table passed the axiom check");
    o.require(comm != nullptr && comm->status == AxiomStatus::kFail && !comm->witness.empty(),
              "mutated meet table failure carries no witness");
  }
  {
    SpectrumCandidate c;
    c.entries = {{1, 1}, {2, 5}};
    bool rejected = false;
    try {
      reconstruct(c);
    } catch (const NotRealizable& e) {
      rejected = e.reason() == NotRealizableReason::kNonPowerCumulative;
    }
    o.require(rejected, "{1:1, 2:5} not rejected as non-power cumulative");
  }
  {
    const auto d9 = descriptor(from_cyclic_factors(nat({9})));
    const auto d25 = descriptor(from_cyclic_factors(nat({25})));
    o.require(lattice_shape(d9.fix_lattice) == lattice_shape(d25.fix_lattice), "fix lattices of Z9, Z25 differ");
    o.require(!iso(d9, d25).isomorphic, "(Z9, Z25) reported isomorphic");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "spectrum of Z4 x Z16 (exact)", 1.0, z4_z16_spectrum},
      {"AC2", "512 elements of order 120 in Z12 x Z720 (exact)", 1.0, z12_z720_order_120},
      {"AC3", "f(1) = p^m - 1 for p in {2,3,5,7}, weight <= 6 (exact)", 1000.0, prime_order_counts},
      {"AC4", "formula vs enumeration, all groups of order <= 2000 (exact)", 120000.0, oracle_equivalence},
      {"AC5", "iso iff canonical equality, all pairs of order <= 200 (exact)", 60000.0, iso_matches_canonical},
      {"AC6", "reconstruct(spectrum(G)) = G, order <= 10^4 (exact)", 120000.0, reconstruct_round_trip},
      {"AC7", "E-lattice axioms, explicit E-lattices of order <= 100 (exact)", 60000.0, axiom_suite},
      {"AC8", "negative controls (exact)", 1000.0, negative_controls},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    const bool in_budget = ms < c.budget_ms;
    const bool pass = o.ok && in_budget;
    failures += !pass;
    std::ostringstream line;
    line << (pass ? "PASS " : "FAIL ") << c.id << ": " << c.title << " [" << ms << " ms < " << c.budget_ms
         << " ms]";
    if (!in_budget) line << " over runtime budget";
    if (!o.detail.empty()) line << " -- " << o.detail;
    std::puts(line.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
