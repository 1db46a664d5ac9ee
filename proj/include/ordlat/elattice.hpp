#pragma once

// The order canonical E-lattice of a finite abelian group.
//
// Elements are identified when they have the same order; phi sends every
// element to the chosen representative of its class, and
//   a meet b = phi(a) /\ phi(b),   a join b = phi(a) \/ phi(b),
// where /\ and \/ act on representatives through gcd and lcm of their
// orders. Fix phi is then isomorphic to the divisor lattice of the exponent.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ordlat/arith.hpp"
#include "ordlat/group.hpp"

namespace ordlat {

// Fix phi as the divisor lattice of the exponent, each node annotated with
// the size of its order class.
struct ELatticeDescriptor {
  DivisorLattice fix_lattice;
  std::vector<Natural> class_size;  // indexed like fix_lattice

  const Natural& class_size_of(DivisorLattice::Index i) const { return class_size.at(i); }
};

ELatticeDescriptor descriptor(const AbelianGroup& g, std::size_t divisor_cap = kDefaultDivisorCap);

inline constexpr std::uint64_t kDefaultElementCap = 5000;

// Carrier-level E-lattice over the enumerated elements of Z_{d1} x ... x Z_{dm}
// (invariant factors). Elements are addressed by their row-major index into
// the carrier; the representative of each class is its lexicographically
// smallest tuple. meet/join depend on classes only, so they are tabulated
// per pair of classes.
class ExplicitELattice {
 public:
  using Element = std::size_t;
  using Residue = std::uint64_t;

  const std::vector<std::uint64_t>& moduli() const noexcept { return moduli_; }
  std::size_t size() const noexcept { return class_of_.size(); }
  std::vector<Residue> tuple(Element a) const;
  std::uint64_t order_of(Element a) const { return class_order_[class_of_.at(a)]; }

  Element phi(Element a) const { return representative_[class_of_.at(a)]; }
  Element meet(Element a, Element b) const {
    return representative_[class_meet_[class_of_.at(a) * classes() + class_of_.at(b)]];
  }
  Element join(Element a, Element b) const {
    return representative_[class_join_[class_of_.at(a) * classes() + class_of_.at(b)]];
  }

  // Classes are numbered by ascending element order.
  std::size_t classes() const noexcept { return class_order_.size(); }
  std::size_t class_of(Element a) const { return class_of_.at(a); }
  std::uint64_t class_order(std::size_t k) const { return class_order_.at(k); }
  Element representative(std::size_t k) const { return representative_.at(k); }
  // Members of class k in carrier order; the representative comes first.
  std::vector<Element> class_members(std::size_t k) const;

 private:
  friend ExplicitELattice build_explicit(const AbelianGroup& g, std::uint64_t element_cap);

  std::vector<std::uint64_t> moduli_;
  std::vector<std::size_t> class_of_;
  std::vector<std::uint64_t> class_order_;
  std::vector<Element> representative_;
  std::vector<std::size_t> class_meet_;
  std::vector<std::size_t> class_join_;
};

ExplicitELattice build_explicit(const AbelianGroup& g, std::uint64_t element_cap = kDefaultElementCap);

// Fully materialized phi/meet/join tables. Used to perturb individual entries
// and to check structures that are not built from a group.
class OperationTables {
 public:
  using Element = std::size_t;

  OperationTables(std::size_t size, std::vector<Element> phi, std::vector<Element> meet,
                  std::vector<Element> join);
  template <typename E>
  static OperationTables materialize(const E& e) {
    const std::size_t n = e.size();
    std::vector<Element> phi(n), meet(n * n), join(n * n);
    for (Element a = 0; a < n; ++a) {
      phi[a] = e.phi(a);
      for (Element b = 0; b < n; ++b) {
        meet[a * n + b] = e.meet(a, b);
        join[a * n + b] = e.join(a, b);
      }
    }
    return OperationTables(n, std::move(phi), std::move(meet), std::move(join));
  }

  std::size_t size() const noexcept { return size_; }
  Element phi(Element a) const { return phi_.at(a); }
  Element meet(Element a, Element b) const { return meet_.at(a * size_ + b); }
  Element join(Element a, Element b) const { return join_.at(a * size_ + b); }

  void set_phi(Element a, Element v) { phi_.at(a) = v; }
  void set_meet(Element a, Element b, Element v) { meet_.at(a * size_ + b) = v; }
  void set_join(Element a, Element b, Element v) { join_.at(a * size_ + b) = v; }

 private:
  std::size_t size_;
  std::vector<Element> phi_, meet_, join_;
};

// A prime bijection p -> sigma(p) from the exponent primes of one group to
// those of another, listed by ascending source prime.
using PrimeBijection = std::vector<std::pair<Natural, Natural>>;

struct IsoResult {
  bool isomorphic = false;
  PrimeBijection witness;  // empty unless isomorphic
  std::string reason;      // why not, when not isomorphic

  const char* decision() const noexcept { return isomorphic ? "isomorphic" : "not_isomorphic"; }
};

// Decides E-lattice isomorphism on descriptors: a lattice isomorphism of the
// fix lattices (a permutation of primes among equal exponents) that preserves
// every class size. Equal-size finite classes always admit bijections, so this
// is exactly the existence of an E-lattice isomorphism. The witness is the
// lexicographically smallest valid bijection.
IsoResult iso(const ELatticeDescriptor& a, const ELatticeDescriptor& b);
IsoResult iso(const AbelianGroup& g, const AbelianGroup& h);

// Carrier map induced by a prime bijection: each class of `a` is sent in
// carrier order onto the class of `b` with the mapped order.
std::vector<ExplicitELattice::Element> induced_map(const ExplicitELattice& a,
                                                   const ExplicitELattice& b,
                                                   const PrimeBijection& sigma);

// Checks that f is a bijective E-lattice homomorphism: f o phi1 = phi2 o f,
// f(a meet b) = f(a) meet f(b), f(a join b) = f(a) join f(b).
bool is_elattice_isomorphism(const ExplicitELattice& a, const ExplicitELattice& b,
                             const std::vector<ExplicitELattice::Element>& f);

}  // namespace ordlat
