#pragma once

#include <map>

#include "coalcan/functors.hpp"
#include "coalcan/term.hpp"

namespace coalcan {

enum class LogicId { Classical, Nabla, Gml, TreeLogic, Relational };
std::string logic_name(LogicId l);

struct Coalgebra {
  FunctorId fid;
  LogicId logic = LogicId::Classical;
  std::vector<std::string> names;
  FinPoset order; // carrier order for poset-based logics
  bool has_order = false;
  std::vector<FunctorObject> gamma;
  std::map<std::string, Bits> valuation;
  // for relational logics, the component signature, aligned with fid.sigma
  Signature sig;

  int size() const { return (int)names.size(); }
  bool is_up_set(const Bits& s) const { return !has_order || order.is_up_closed(s); }
};

// membership test for delta of a modal generator: is t in the denoted set of
// F(X)? `args` are the interpretations of the generator's arguments.
bool delta_contains(const Coalgebra& m, const std::string& sym, int grade,
                    const std::vector<Bits>& args, const FunctorObject& t, const Caps& caps);

// materialized delta, budget permitting
std::vector<FunctorObject> delta(const Coalgebra& m, const std::string& sym, int grade,
                                 const std::vector<Bits>& args, const Caps& caps);

Bits eval(const Coalgebra& m, const TermPtr& t, const Caps& caps);

struct FrameValidity {
  bool valid = true;
  std::map<std::string, Bits> countervaluation;
};
FrameValidity frame_valid(const Coalgebra& frame, const TermPtr& lhs, const TermPtr& rhs,
                          const std::vector<std::string>& vars, const Caps& caps);

// ----- terminal-sequence interpretation -------------------------------------

struct StagePoint {
  FunctorObject behaviour; // over the previous stage
  uint32_t colour = 0;     // variable mask
};

struct TerminalSequence {
  FunctorId fid;
  std::vector<std::string> vars;
  std::vector<std::vector<StagePoint>> stages; // stages[k] = T_V^k-ish carrier
  std::vector<std::vector<int>> restrictions;  // stage k+1 point -> stage k point
  // denotation of a depth-<=k formula at stage k
  Bits interp(const TermPtr& t, int k, const Caps& caps) const;
  bool injectivity_checked = false;
  bool injective = false;
};

// stages for logics whose functor preserves finite sets (P/Pw/trees); stage 0
// carries colours only
TerminalSequence terminal_sequence_interp(LogicId logic, const FunctorId& fid, int depth,
                                          const std::vector<std::string>& vars, const Caps& caps);

} // namespace coalcan
