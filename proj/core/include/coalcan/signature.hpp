#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coalcan/canext.hpp"
#include "coalcan/lattice.hpp"
#include "coalcan/properties.hpp"

namespace coalcan {

// distribution-law tag for relational symbols: Eq51 means join/anti-meet style
// (diamond-like, existential), Eq52 meet/anti-join style (box-like, universal)
enum class DistLaw { None, Eq51, Eq52 };

struct SymbolInfo {
  std::string name;
  int arity = 1;
  std::vector<Tonicity> tonicity;  // per argument
  std::vector<uint16_t> props;     // per argument, PropBit masks (closed)
  DistLaw law = DistLaw::None;
  int grade = 0; // for graded symbols <k>, 0 otherwise
};

struct Signature {
  LatticeKind base = LatticeKind::BA;
  std::vector<SymbolInfo> symbols;

  const SymbolInfo* find(const std::string& n) const;
  void add(SymbolInfo s); // validates name uniqueness and annotation consistency

  // stock signatures used throughout the tests and the CLI
  static Signature classical();          // dia (joins), box (meets)
  static Signature gml(int max_grade);   // d1..dk, d1 preserves joins, dk ud-joins
  static Signature tree(int max_arity);  // t1..td, k-ary, meets+joins per argument
  static Signature heyting();            // imp: anti-joins / meets, Eq52
  static Signature lambek();             // unit, star (Eq51), under, over (Eq52)
};

} // namespace coalcan
