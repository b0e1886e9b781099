#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coalcan/bitset.hpp"
#include "coalcan/budget.hpp"
#include "coalcan/poset.hpp"

namespace coalcan {

enum class LatticeKind { DL, BDL, BA };

struct LatticeError : InputError {
  explicit LatticeError(const std::string& w) : InputError(w) {}
};

// Finite (distributive) lattice. Two representations share one interface:
// an explicit one with meet/join tables, and a compact powerset one where
// elements are subsets of a base set and the operations are mask arithmetic
// (free_ba over 4 generators has 2^16 elements, far too many for tables).
class FinLattice {
public:
  FinLattice() = default;

  // explicit tables; validates order/lub/glb/distributivity/kind invariants
  static FinLattice from_tables(LatticeKind kind, std::vector<std::string> names,
                                std::vector<Bits> up_rows, bool validate = true);
  // order given, meet/join computed as glb/lub (fails if some pair lacks one
  // for bounded kinds)
  static FinLattice from_order(LatticeKind kind, std::vector<std::string> names,
                               std::vector<Bits> up_rows);
  static FinLattice powerset(int base_points);
  static FinLattice chain(int n, LatticeKind kind = LatticeKind::BDL);

  bool is_powerset_mode() const { return mode_ == Mode::Powerset; }
  int powerset_base() const { return base_; }

  LatticeKind kind() const { return kind_; }
  int size() const;
  std::string name(int a) const;

  bool leq(int a, int b) const;
  int meet(int a, int b) const;
  int join(int a, int b) const;
  std::optional<int> bottom() const;
  std::optional<int> top() const;
  int complement(int a) const; // BA only

  bool bounded() const { return bottom().has_value() && top().has_value(); }

  int meet_of(const Bits& s) const; // empty set -> top (requires bounds)
  int join_of(const Bits& s) const; // empty set -> bottom

  std::vector<int> join_irreducibles() const; // excludes bottom
  std::vector<int> meet_irreducibles() const; // excludes top
  std::vector<int> atoms() const;             // covers of bottom

  bool is_filter(const Bits& s) const;
  bool is_ideal(const Bits& s) const;
  bool is_proper(const Bits& s) const { return s.count() != size(); }
  bool is_prime_filter(const Bits& s) const;
  bool is_ultrafilter(const Bits& s) const; // BA hosts
  Bits up_closure(const Bits& s) const;
  Bits down_closure(const Bits& s) const;
  Bits filter_generated(const Bits& s) const;
  Bits ideal_generated(const Bits& s) const;
  Bits principal_filter(int a) const;
  Bits principal_ideal(int a) const;

  // sanity used by tests on lattices small enough to enumerate subsets
  bool distributive() const;

  FinPoset order_poset() const;

private:
  enum class Mode { Tables, Powerset };
  Mode mode_ = Mode::Tables;
  LatticeKind kind_ = LatticeKind::BDL;

  // table mode
  std::vector<std::string> names_;
  std::vector<Bits> up_;
  std::vector<int> meet_, join_; // n*n
  std::optional<int> bot_, top_;
  std::vector<int> compl_;

  // powerset mode: elements are masks over base_ points
  int base_ = 0;

  void validate_tables() const;
};

enum class FilterFlavor { Filter, Ideal, PrimeFilter, Ultrafilter };

struct FilterLike {
  const FinLattice* host = nullptr;
  Bits members;
  FilterFlavor flavor = FilterFlavor::Filter;
  bool check() const;
};

// --- lattice-core operations ------------------------------------------------

// bounded DL of down-closed subsets of P ordered by inclusion
FinLattice downset_lattice(const FinPoset& p);
// order-dual convention (up-sets); see the module's documented downset choice
FinLattice upset_lattice(const FinPoset& p);

struct PrimeFilters {
  FinPoset poset; // prime filters under reverse inclusion
  std::vector<FilterLike> filters;
};
PrimeFilters prime_filters(const FinLattice& a);

struct DualityWitness {
  FinPoset dual;
  std::vector<Bits> eta;                 // element -> set of prime filters containing it
  bool is_isomorphism = false;
  std::vector<std::pair<int, int>> ji_pf; // join-irreducible <-> prime filter pairing
};
// Throws LatticeError("NON-DISTRIBUTIVE") if eta fails to be an isomorphism,
// which on validated inputs cannot happen; reachable via from_tables(...,
// validate=false).
DualityWitness birkhoff_roundtrip(const FinLattice& a);

struct FreeBa {
  FinLattice algebra; // powerset mode over 2^n valuations
  std::vector<int> generator_elements;
  std::vector<std::string> generator_names;
};
FreeBa free_ba(const std::vector<std::string>& generators, int cap = 4);

struct Quotient {
  FinLattice algebra;
  std::vector<int> proj; // surjective homomorphism, index-wise
};
Quotient quotient_ba(const FinLattice& a, const std::vector<std::pair<int, int>>& pairs);

} // namespace coalcan
