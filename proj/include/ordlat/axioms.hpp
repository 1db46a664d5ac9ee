#pragma once

// Exhaustive verification of the E-lattice axioms on a finite carrier.
//   a) associativity of meet and join
//   b) commutativity of meet and join
//   c) a meet a = a join a = phi(a)
//   d) a meet (a join b) = a join (a meet b) = phi(a)
// plus phi idempotent, Im phi = Fix phi, the identities that follow from
// a)-d), and the canonical property (every meet/join lands in Fix phi).

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ordlat/error.hpp"

namespace ordlat {

template <typename E>
concept ELatticeTable = requires(const E& e, std::size_t a) {
  { e.size() } -> std::convertible_to<std::size_t>;
  { e.phi(a) } -> std::convertible_to<std::size_t>;
  { e.meet(a, a) } -> std::convertible_to<std::size_t>;
  { e.join(a, a) } -> std::convertible_to<std::size_t>;
};

enum class AxiomStatus { kPass, kFail, kSkipped };

const char* status_name(AxiomStatus s) noexcept;

struct AxiomResult {
  std::string name;
  AxiomStatus status = AxiomStatus::kPass;
  std::vector<std::size_t> witness;  // offending elements on failure
  std::string detail;
};

struct AxiomReport {
  std::size_t carrier_size = 0;
  std::vector<AxiomResult> results;

  bool passed() const;    // nothing failed
  bool complete() const;  // everything checked and passed
  const AxiomResult* find(const std::string& name) const;
};

struct AxiomOptions {
  std::size_t triple_cap = 100;   // associativity is O(n^3); skipped above this
  std::size_t pair_cap = 5000;    // SizeError above this
};

namespace detail {

class AxiomRecorder {
 public:
  explicit AxiomRecorder(std::string name) { result_.name = std::move(name); }
  bool failed() const { return result_.status == AxiomStatus::kFail; }
  void fail(std::vector<std::size_t> witness, std::string detail) {
    if (failed()) return;
    result_.status = AxiomStatus::kFail;
    result_.witness = std::move(witness);
    result_.detail = std::move(detail);
  }
  AxiomResult take() { return std::move(result_); }

 private:
  AxiomResult result_;
};

}  // namespace detail

template <ELatticeTable E>
AxiomReport check_axioms(const E& e, AxiomOptions options = {}) {
  using detail::AxiomRecorder;
  const std::size_t n = e.size();
  if (n > options.pair_cap) {
    throw SizeError("carrier of " + std::to_string(n) + " elements exceeds pairwise cap " +
                    std::to_string(options.pair_cap));
  }
  AxiomReport report;
  report.carrier_size = n;

  std::vector<bool> fixed(n, false), image(n, false);
  AxiomRecorder idempotent("phi_idempotent");
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t pa = e.phi(a);
    if (pa >= n) {
      idempotent.fail({a}, "phi(a) outside the carrier");
      continue;
    }
    fixed[a] = pa == a;
    image[pa] = true;
    if (e.phi(pa) != pa) idempotent.fail({a}, "phi(phi(a)) != phi(a)");
  }
  report.results.push_back(idempotent.take());

  AxiomRecorder image_fix("image_equals_fix");
  for (std::size_t a = 0; a < n && !image_fix.failed(); ++a) {
    if (image[a] != fixed[a]) image_fix.fail({a}, image[a] ? "in Im phi, not fixed" : "fixed, not in Im phi");
  }
  report.results.push_back(image_fix.take());

  auto in_carrier = [n](std::size_t x) { return x < n; };
  auto phi = [&](std::size_t x) { return in_carrier(x) ? e.phi(x) : n; };

  AxiomRecorder comm_meet("b_commutative_meet"), comm_join("b_commutative_join");
  AxiomRecorder diagonal("c_diagonal"), absorption("d_absorption");
  AxiomRecorder phi_absorb("derived_phi_absorption");
  AxiomRecorder meet_phi("derived_meet_through_phi"), join_phi("derived_join_through_phi");
  AxiomRecorder canonical("canonical");

  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t pa = e.phi(a);
    if (e.meet(a, a) != pa || e.join(a, a) != pa) diagonal.fail({a}, "a meet a or a join a differs from phi(a)");
    if (in_carrier(pa) && (e.meet(a, pa) != pa || e.join(a, pa) != pa)) {
      phi_absorb.fail({a}, "a meet phi(a) or a join phi(a) differs from phi(a)");
    }
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t m = e.meet(a, b);
      const std::size_t j = e.join(a, b);
      if (m != e.meet(b, a)) comm_meet.fail({a, b}, "a meet b != b meet a");
      if (j != e.join(b, a)) comm_join.fail({a, b}, "a join b != b join a");
      if (!in_carrier(m) || !in_carrier(j)) {
        canonical.fail({a, b}, "meet or join outside the carrier");
        continue;
      }
      if (!fixed[m] || !fixed[j]) canonical.fail({a, b}, "meet or join not in Fix phi");
      if (e.meet(a, j) != pa || e.join(a, m) != pa) {
        absorption.fail({a, b}, "a meet (a join b) or a join (a meet b) differs from phi(a)");
      }
      const std::size_t pb = e.phi(b);
      if (!in_carrier(pa) || !in_carrier(pb)) continue;
      if (e.meet(a, pb) != m || e.meet(pa, b) != m || e.meet(pa, pb) != m || phi(m) != m) {
        meet_phi.fail({a, b}, "a meet phi(b), phi(a) meet b, phi(a) meet phi(b), phi(a meet b) disagree");
      }
      if (e.join(a, pb) != j || e.join(pa, b) != j || e.join(pa, pb) != j || phi(j) != j) {
        join_phi.fail({a, b}, "a join phi(b), phi(a) join b, phi(a) join phi(b), phi(a join b) disagree");
      }
    }
  }

  AxiomRecorder assoc_meet("a_associative_meet"), assoc_join("a_associative_join");
  if (n <= options.triple_cap) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab_m = e.meet(a, b);
        const std::size_t ab_j = e.join(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (!assoc_meet.failed() && (!in_carrier(ab_m) || !in_carrier(e.meet(b, c)) ||
                                       e.meet(ab_m, c) != e.meet(a, e.meet(b, c)))) {
            assoc_meet.fail({a, b, c}, "(a meet b) meet c != a meet (b meet c)");
          }
          if (!assoc_join.failed() && (!in_carrier(ab_j) || !in_carrier(e.join(b, c)) ||
                                       e.join(ab_j, c) != e.join(a, e.join(b, c)))) {
            assoc_join.fail({a, b, c}, "(a join b) join c != a join (b join c)");
          }
        }
      }
    }
    report.results.push_back(assoc_meet.take());
    report.results.push_back(assoc_join.take());
  } else {
    for (auto* r : {&assoc_meet, &assoc_join}) {
      AxiomResult skipped = r->take();
      skipped.status = AxiomStatus::kSkipped;
      skipped.detail = "carrier exceeds triple cap " + std::to_string(options.triple_cap);
      report.results.push_back(std::move(skipped));
    }
  }

  for (auto* r : {&comm_meet, &comm_join, &diagonal, &absorption, &phi_absorb, &meet_phi,
                  &join_phi, &canonical}) {
    report.results.push_back(r->take());
  }
  return report;
}

}  // namespace ordlat
