#pragma once

#include <map>
#include <optional>

#include "coalcan/canext.hpp"
#include "coalcan/signature.hpp"
#include "coalcan/tables.hpp"
#include "coalcan/term.hpp"

namespace coalcan {

enum class Polarity { Positive, Negative, Mixed, Absent };
Polarity polarity(const TermPtr& t, const std::string& var, const Signature& sig);

enum class Stability { Stable, Expanding, Contracting, Unknown };
std::string stability_name(Stability s);

enum class SynClass { StrictlyPositive, Positive, Negative, Mixed };

struct Classification {
  Stability stability = Stability::Unknown;
  bool expanding = false;
  bool contracting = false;
  bool conservative = false;
  SynClass syn_class = SynClass::Mixed;
  std::map<std::string, uint16_t> var_props; // derived per-variable flags
  // continuity certificate targets of the sigma-extended composite
  bool cont_sigma_up = false, cont_sigma_down = false;
  bool cont_gamma_up = false, cont_gamma_down = false;
};
Classification classify(const TermPtr& t, const Signature& sig);

enum class Dialect { Abstract, Classical, General, Gml, Substructural };
std::string dialect_name(Dialect d);

struct Equation {
  TermPtr lhs, rhs;
  bool inequality = false; // lhs <= rhs
};

struct SahlqvistVerdict {
  bool accepted = false;
  std::string route;      // "sahlqvist", "stable-equation", "contracting-expanding", "none"
  std::string reason;     // human-readable decomposition or failure note
  std::vector<TermPtr> stable_parts;
  std::vector<TermPtr> positive_parts;
};
// Throws InputError("DIALECT-MISMATCH ...") when the dialect does not fit the
// signature's base.
SahlqvistVerdict is_sahlqvist(const Equation& eq, const Signature& sig, Dialect dialect,
                              int search_depth = 6);

struct QuasiReduction {
  Signature sig_with_g; // input signature plus the fresh join-preserving symbol
  Equation equation;    // t OR g(s) = g(s)
  std::string g_name;
};
QuasiReduction reduce_quasi(const TermPtr& s, const TermPtr& t, const Signature& sig);

// ----- expanded algebras and term functions ---------------------------------

struct AlgOp {
  std::string name;
  int arity = 1;
  std::vector<int> table; // flat over carrier^arity
  int at(const FinLattice& a, const std::vector<int>& xs) const;
};

struct ExpandedAlgebra {
  const FinLattice* carrier = nullptr;
  std::vector<AlgOp> ops;
  const AlgOp* find(const std::string& n) const;
};

// the n-ary term function over the algebra, variables in sorted order
struct TermFunction {
  std::vector<std::string> vars;
  AmbientMap map;
};
TermFunction term_function(const TermPtr& t, const ExpandedAlgebra& alg);

bool algebra_validates(const ExpandedAlgebra& alg, const TermPtr& lhs, const TermPtr& rhs);
bool algebra_validates_leq(const ExpandedAlgebra& alg, const TermPtr& lhs, const TermPtr& rhs);

// NNF over a BA base: pushes negations through the propositional skeleton,
// stopping at symbol applications and variables
TermPtr negation_normal_form(const TermPtr& t);

} // namespace coalcan
