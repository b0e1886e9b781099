#pragma once

#include <array>
#include <string>
#include <vector>

#include "coalcan/lattice.hpp"
#include "coalcan/properties.hpp"

namespace coalcan {

// A complete (finite bounded) ambient lattice with a chosen subalgebra.
// Density and compactness are checked, not assumed, so the degenerate cases
// the examples exercise (a non-dense sub) stay representable.
struct DenseCompactPair {
  const FinLattice* ambient = nullptr;
  Bits sub;

  bool sub_closed_under_ops() const; // meets, joins (and complement on BA)
  bool is_dense() const;
  bool is_compact() const;
  bool valid() const { return ambient && ambient->bounded() && sub_closed_under_ops() && is_dense() && is_compact(); }

  static DenseCompactPair whole(const FinLattice& a);
};

struct ClosedOpen {
  Bits closed; // K: meets of subsets of sub
  Bits open;   // O: joins of subsets of sub
};
ClosedOpen closed_open_elements(const DenseCompactPair& pair);

enum class Tonicity { Iso, Anti, None };

// total map sub^n -> sub with declared per-argument tonicity
struct MapTable {
  DenseCompactPair pair;
  int arity = 1;
  std::vector<Tonicity> tonicity;
  std::vector<int> table; // flat over ambient^arity; -1 outside sub tuples

  int n() const { return pair.ambient->size(); }
  size_t tuples() const;
  int at(const std::vector<int>& xs) const;
  void set_at(const std::vector<int>& xs, int v);
  bool total_on_sub() const;
  bool tonicity_holds() const; // declared tonicity, exhaustively on sub

  static MapTable identity(const DenseCompactPair& p);
  static MapTable constant(const DenseCompactPair& p, int c, int arity = 1);
  static MapTable binary_meet(const DenseCompactPair& p);
  static MapTable binary_join(const DenseCompactPair& p);
  static MapTable negation(const DenseCompactPair& p);
};

// total tables over the whole ambient (the result type of extensions)
struct AmbientMap {
  const FinLattice* ambient = nullptr;
  int arity = 1;
  std::vector<int> table;
  int at(const std::vector<int>& xs) const;
  void set_at(const std::vector<int>& xs, int v);
};

struct SigmaPi {
  AmbientMap sigma;
  AmbientMap pi;
};
SigmaPi sigma_pi_extension(const MapTable& f);

struct PropertyProfile {
  std::vector<uint16_t> arg_flags; // PropBit masks per argument
  std::vector<int> min_k_additive;       // per argument; -1 = not omega-additive at cap
  std::vector<int> min_k_multiplicative; // per argument
  std::vector<int> min_anti_k_additive;
  std::vector<int> min_anti_k_multiplicative;
  bool expanding = false;  // arity 1 only
  bool contracting = false;
  bool idempotent = false;
  bool has(int arg, PropBit p) const { return arg_flags[arg] & p; }
};
PropertyProfile detect_properties(const MapTable& f);
PropertyProfile detect_properties(const AmbientMap& f, const Bits& domain_sub);

enum class TopologyName { SigmaUp, SigmaDown, Sigma, GammaUp, GammaDown, Gamma };
std::string topology_name(TopologyName t);

struct TopologyFamily {
  const FinLattice* host = nullptr;
  TopologyName name;
  std::vector<Bits> opens;
  bool is_open(const Bits& s) const;
  // smallest open containing x (finite topologies are closed under
  // intersection, so it exists)
  Bits min_open(int x) const;
};

struct Topologies {
  TopologyFamily sigma_up, sigma_down, sigma, gamma_up, gamma_down, gamma;
  const TopologyFamily& get(TopologyName t) const;
};
Topologies topologies(const DenseCompactPair& pair);

bool is_continuous(const AmbientMap& f, const std::vector<const TopologyFamily*>& from,
                   const TopologyFamily& to);

struct CompositionReport {
  bool pointwise_leq = false;      // (g(f...))^sigma <= g^sigma(f...^sigma)
  bool equal = false;
  bool certified_upper = false;    // matching topologies toward gamma-up
  bool certified_lower = false;    // matching topologies toward gamma-down
  bool certified_equality = false; // both directions
  std::vector<TopologyName> upper_choice; // per inner map
  std::vector<TopologyName> lower_choice;
};
CompositionReport compose_and_compare(const MapTable& g, const std::vector<MapTable>& fs);

// tuple iteration helper shared by table code
struct TupleIter {
  int base, arity;
  std::vector<int> cur;
  bool done = false;
  TupleIter(int base_, int arity_) : base(base_), arity(arity_), cur(arity_, 0) { done = base_ == 0 && arity_ > 0; }
  const std::vector<int>& operator*() const { return cur; }
  void next() {
    for (int i = arity - 1; i >= 0; --i) {
      if (++cur[i] < base) return;
      cur[i] = 0;
    }
    done = true;
  }
};

} // namespace coalcan
