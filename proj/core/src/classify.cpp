#include "coalcan/classify.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace coalcan {

std::string stability_name(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Expanding: return "expanding";
    case Stability::Contracting: return "contracting";
    case Stability::Unknown: return "unknown";
  }
  return "?";
}

std::string dialect_name(Dialect d) {
  switch (d) {
    case Dialect::Abstract: return "abstract";
    case Dialect::Classical: return "classical";
    case Dialect::General: return "general";
    case Dialect::Gml: return "gml";
    case Dialect::Substructural: return "substructural";
  }
  return "?";
}

// ------------------------------------------------------------------ polarity

static void polarity_walk(const TermPtr& t, const std::string& var, const Signature& sig,
                          int anti_depth, bool under_none, bool& pos, bool& neg) {
  switch (t->kind) {
    case TermKind::Var:
      if (t->name == var) {
        if (under_none) {
          pos = true;
          neg = true;
        } else if (anti_depth % 2 == 0)
          pos = true;
        else
          neg = true;
      }
      return;
    case TermKind::Bot:
    case TermKind::Top: return;
    case TermKind::Not:
      polarity_walk(t->kids[0], var, sig, anti_depth + 1, under_none, pos, neg);
      return;
    case TermKind::And:
    case TermKind::Or:
    case TermKind::BigAnd:
    case TermKind::BigOr:
    case TermKind::NablaSet:
    case TermKind::NablaTup:
      for (auto& k : t->kids) polarity_walk(k, var, sig, anti_depth, under_none, pos, neg);
      return;
    case TermKind::App: {
      auto* s = sig.find(t->name);
      for (size_t i = 0; i < t->kids.size(); ++i) {
        Tonicity ton = s ? s->tonicity[i] : Tonicity::Iso;
        if (ton == Tonicity::None)
          polarity_walk(t->kids[i], var, sig, anti_depth, true, pos, neg);
        else
          polarity_walk(t->kids[i], var, sig, anti_depth + (ton == Tonicity::Anti ? 1 : 0),
                        under_none, pos, neg);
      }
      return;
    }
  }
}

Polarity polarity(const TermPtr& t, const std::string& var, const Signature& sig) {
  bool pos = false, neg = false;
  polarity_walk(t, var, sig, 0, false, pos, neg);
  if (pos && neg) return Polarity::Mixed;
  if (pos) return Polarity::Positive;
  if (neg) return Polarity::Negative;
  return Polarity::Absent;
}

// ------------------------------------------------------- classification core

namespace {

// continuity certificate targets for a subterm's sigma-composite, all with the
// interval topology on the domain
struct Cont {
  bool sig_up = false, sig_down = false, sig = false, gam_up = false, gam_down = false;
  static Cont all() { return {true, true, true, true, true}; }
  void closure() {
    if (sig) {
      sig_up = sig_down = true;
    }
    if (sig_up) gam_up = true;
    if (sig_down) gam_down = true;
  }
};

struct Info {
  Cont cont;
  bool expanding = false;
  bool contracting = false;
  std::map<std::string, uint16_t> props; // per variable (0 = no claim)
  std::map<std::string, int> occurrences;
};

struct SymView {
  int arity;
  std::vector<Tonicity> ton;
  std::vector<uint16_t> props; // closed
  bool smooth;                 // every argument has a strong (anti-)preservation flag
};

SymView base_sym(TermKind k) {
  SymView v;
  switch (k) {
    case TermKind::Not:
      v.arity = 1;
      v.ton = {Tonicity::Anti};
      v.props = {close_props(A_MEET | A_JOIN)};
      break;
    case TermKind::And:
    case TermKind::BigAnd:
    case TermKind::Or:
    case TermKind::BigOr:
      // in a distributive base both connectives preserve meets and joins in
      // each argument
      v.arity = -1; // variadic
      v.ton = {Tonicity::Iso};
      v.props = {close_props(P_MEET | P_JOIN)};
      break;
    default: v.arity = 0; break;
  }
  v.smooth = true;
  return v;
}

bool strong_flags(uint16_t p) {
  return p & (P_MEET | P_JOIN | P_DDMEET | P_UDJOIN | A_MEET | A_JOIN | A_DDMEET | A_UDJOIN);
}

SymView app_sym(const SymbolInfo& s) {
  SymView v;
  v.arity = s.arity;
  v.ton = s.tonicity;
  v.props = s.props;
  v.smooth = true;
  for (int i = 0; i < s.arity; ++i)
    if (!strong_flags(s.props[i])) v.smooth = false;
  return v;
}

SymView nabla_sym(TermKind k, int arity) {
  SymView v;
  v.arity = arity;
  if (k == TermKind::NablaTup) {
    // tree laws: distributes over meets and joins in every component
    v.ton.assign(arity, Tonicity::Iso);
    v.props.assign(arity, close_props(P_MEET | P_JOIN));
    v.smooth = true;
  } else {
    // the plain cover modality is monotone in its members, nothing more
    v.ton.assign(arity, Tonicity::Iso);
    v.props.assign(arity, close_props(P_ISO));
    v.smooth = false;
  }
  return v;
}

// generator application: can the composite reach `target` given argument
// certificates?
Cont compose_cont(const SymView& f, const std::vector<Cont>& args) {
  Cont r;
  auto arg_has = [&](size_t i, bool Cont::*field) { return args[i].*field; };
  bool monotone = true;
  for (auto t : f.ton)
    if (t == Tonicity::None) monotone = false;

  // target gamma-up: the sigma-extension of any map is (sigma^n, gamma-up)
  // continuous; monotone maps sharpen the domain to sigma-up/sigma-down
  {
    bool ok = true;
    for (size_t i = 0; i < args.size(); ++i) {
      bool need;
      if (!monotone) need = arg_has(i, &Cont::sig);
      else if (f.ton[i] == Tonicity::Iso) need = arg_has(i, &Cont::sig_up);
      else need = arg_has(i, &Cont::sig_down);
      if (!need) ok = false;
    }
    if (ok) r.gam_up = true;
  }
  // target gamma-down for smooth maps (sigma = pi), dual domains
  if (f.smooth && monotone) {
    bool ok = true;
    for (size_t i = 0; i < args.size(); ++i) {
      bool need = f.ton[i] == Tonicity::Iso ? arg_has(i, &Cont::sig_down) : arg_has(i, &Cont::sig_up);
      if (!need) ok = false;
    }
    if (ok) r.gam_down = true;
  }
  // target sigma-up: meets-preserving or anti-join arguments
  {
    bool ok = true;
    for (size_t i = 0; i < args.size(); ++i) {
      bool need = false;
      if ((f.props[i] & P_MEET) && arg_has(i, &Cont::sig_up)) need = true;
      if ((f.props[i] & A_JOIN) && arg_has(i, &Cont::sig_down)) need = true;
      if (!need) ok = false;
    }
    if (ok) r.sig_up = true;
  }
  // target sigma-down: joins or anti-meets
  {
    bool ok = true;
    for (size_t i = 0; i < args.size(); ++i) {
      bool need = false;
      if ((f.props[i] & P_JOIN) && arg_has(i, &Cont::sig_down)) need = true;
      if ((f.props[i] & A_MEET) && arg_has(i, &Cont::sig_up)) need = true;
      if (!need) ok = false;
    }
    if (ok) r.sig_down = true;
  }
  // target gamma-up via directed continuity
  {
    bool ok = true;
    for (size_t i = 0; i < args.size(); ++i) {
      bool need = false;
      if ((f.props[i] & P_UDJOIN) && arg_has(i, &Cont::gam_up)) need = true;
      if ((f.props[i] & A_DDMEET) && arg_has(i, &Cont::gam_down)) need = true;
      if (!need) ok = false;
    }
    if (ok) r.gam_up = true;
  }
  // target gamma-down via directed continuity
  {
    bool ok = true;
    for (size_t i = 0; i < args.size(); ++i) {
      bool need = false;
      if ((f.props[i] & P_DDMEET) && arg_has(i, &Cont::gam_down)) need = true;
      if ((f.props[i] & A_UDJOIN) && arg_has(i, &Cont::gam_up)) need = true;
      if (!need) ok = false;
    }
    if (ok) r.gam_down = true;
  }
  r.closure();
  return r;
}

uint16_t table_compose(uint16_t inner, uint16_t f_arg_props) {
  uint16_t out = 0;
  for (auto g : kPropOrder) {
    if (!(inner & g)) continue;
    for (auto f : kPropOrder) {
      if (!(f_arg_props & f)) continue;
      out |= property_inherits(g, f);
    }
  }
  return close_props(out);
}

Info classify_rec(const TermPtr& t, const Signature& sig) {
  Info info;
  switch (t->kind) {
    case TermKind::Var:
      info.cont = Cont::all();
      info.expanding = info.contracting = true;
      info.props[t->name] = close_props(P_MEET | P_JOIN);
      info.occurrences[t->name] = 1;
      return info;
    case TermKind::Bot:
    case TermKind::Top:
      info.cont = Cont::all();
      info.expanding = info.contracting = true;
      return info;
    default: break;
  }

  std::vector<Info> kids;
  for (auto& k : t->kids) kids.push_back(classify_rec(k, sig));

  SymView f;
  if (t->kind == TermKind::App) {
    auto* s = sig.find(t->name);
    if (!s) throw InputError("classify: unknown symbol '" + t->name + "'");
    f = app_sym(*s);
  } else if (t->kind == TermKind::NablaSet || t->kind == TermKind::NablaTup) {
    f = nabla_sym(t->kind, (int)t->kids.size());
  } else {
    f = base_sym(t->kind);
    // variadic connectives: replicate the single annotation
    f.arity = (int)t->kids.size();
    f.ton.assign(f.arity, f.ton.empty() ? Tonicity::Iso : f.ton[0]);
    f.props.assign(f.arity, f.props.empty() ? (uint16_t)0 : f.props[0]);
  }

  std::vector<Cont> argc;
  for (auto& k : kids) argc.push_back(k.cont);
  info.cont = compose_cont(f, argc);

  // expanding/contracting
  info.contracting = info.cont.gam_up;
  info.expanding = info.cont.gam_down;
  if (!info.expanding) {
    bool monotone = true;
    for (auto ton : f.ton)
      if (ton == Tonicity::None) monotone = false;
    if (monotone) {
      bool ok = true;
      for (size_t i = 0; i < kids.size(); ++i) {
        if (f.ton[i] == Tonicity::Iso && !kids[i].expanding) ok = false;
        if (f.ton[i] == Tonicity::Anti && !kids[i].contracting) ok = false;
      }
      info.expanding = ok;
    }
  }

  // per-variable properties
  std::map<std::string, std::vector<std::pair<size_t, uint16_t>>> paths; // var -> (child, props)
  for (size_t i = 0; i < kids.size(); ++i) {
    for (auto& [v, pr] : kids[i].props) paths[v].push_back({i, pr});
    for (auto& [v, n] : kids[i].occurrences) info.occurrences[v] += n;
  }
  for (auto& [v, ps] : paths) {
    std::vector<uint16_t> composed;
    for (auto& [i, pr] : ps) composed.push_back(table_compose(pr, f.props[i]));
    uint16_t out;
    if (composed.size() == 1) {
      out = composed[0];
    } else {
      // shared variable: tonicity always merges; pointwise meet/join nodes
      // additionally keep the lattice-compatible flags
      uint16_t inter = 0xffff;
      for (auto c : composed) inter &= c;
      uint16_t ton = inter & (P_ISO | A_ISO);
      if (t->kind == TermKind::And || t->kind == TermKind::BigAnd)
        out = ton | (inter & (P_MEET | P_DDMEET | A_JOIN | A_UDJOIN));
      else if (t->kind == TermKind::Or || t->kind == TermKind::BigOr)
        out = ton | (inter & (P_JOIN | P_UDJOIN | A_MEET | A_DDMEET));
      else
        out = ton;
      out = close_props(out);
    }
    info.props[v] = out;
  }
  return info;
}

bool term_uses_only_isotone_symbols(const TermPtr& t, const Signature& sig) {
  if (t->kind == TermKind::App) {
    auto* s = sig.find(t->name);
    if (!s) return false;
    for (auto ton : s->tonicity)
      if (ton != Tonicity::Iso) return false;
  }
  if (t->kind == TermKind::NablaSet || t->kind == TermKind::NablaTup) {
    // nabla objects are isotone in their members
  }
  for (auto& k : t->kids)
    if (!term_uses_only_isotone_symbols(k, sig)) return false;
  return true;
}

} // namespace

Classification classify(const TermPtr& t, const Signature& sig) {
  Info info = classify_rec(t, sig);
  Classification c;
  c.expanding = info.expanding;
  c.contracting = info.contracting;
  c.var_props = info.props;
  c.cont_sigma_up = info.cont.sig_up;
  c.cont_sigma_down = info.cont.sig_down;
  c.cont_gamma_up = info.cont.gam_up;
  c.cont_gamma_down = info.cont.gam_down;

  // positive terms over the isotone sub-signature are expanding
  if (!c.expanding && term_uses_only_isotone_symbols(t, sig)) {
    bool all_pos = true;
    for (auto& v : free_vars(t))
      if (polarity(t, v, sig) == Polarity::Mixed || polarity(t, v, sig) == Polarity::Negative)
        all_pos = false;
    if (all_pos) c.expanding = true;
  }

  if (c.expanding && c.contracting) c.stability = Stability::Stable;
  else if (c.expanding) c.stability = Stability::Expanding;
  else if (c.contracting) c.stability = Stability::Contracting;
  else c.stability = Stability::Unknown;

  // conservative: every variable path carries join or up-directed-join
  // preservation (the two all-checkmark columns)
  c.conservative = true;
  auto fv = free_vars(t);
  if (fv.empty()) c.conservative = c.stability == Stability::Stable;
  for (auto& v : fv) {
    uint16_t pr = c.var_props.count(v) ? c.var_props[v] : 0;
    if (!(pr & (P_JOIN | P_UDJOIN))) c.conservative = false;
  }
  if (c.stability != Stability::Stable) c.conservative = false;

  // syntactic class
  bool any_neg = false, any_pos = false, has_not = false;
  std::function<void(const TermPtr&)> scan = [&](const TermPtr& s) {
    if (s->kind == TermKind::Not) has_not = true;
    for (auto& k : s->kids) scan(k);
  };
  scan(t);
  for (auto& v : fv) {
    auto p = polarity(t, v, sig);
    if (p == Polarity::Positive) any_pos = true;
    if (p == Polarity::Negative) any_neg = true;
    if (p == Polarity::Mixed) {
      any_pos = any_neg = true;
    }
  }
  if (any_pos && any_neg) c.syn_class = SynClass::Mixed;
  else if (any_neg) c.syn_class = SynClass::Negative;
  else if (!has_not && term_uses_only_isotone_symbols(t, sig)) c.syn_class = SynClass::StrictlyPositive;
  else c.syn_class = SynClass::Positive;
  return c;
}

// ----------------------------------------------------------------- sahlqvist

TermPtr negation_normal_form(const TermPtr& t) {
  std::function<TermPtr(const TermPtr&, bool)> go = [&](const TermPtr& s, bool neg) -> TermPtr {
    switch (s->kind) {
      case TermKind::Bot: return neg ? Term::top() : Term::bot();
      case TermKind::Top: return neg ? Term::bot() : Term::top();
      case TermKind::Not: return go(s->kids[0], !neg);
      case TermKind::And:
        return neg ? Term::disj(go(s->kids[0], true), go(s->kids[1], true))
                   : Term::conj(go(s->kids[0], false), go(s->kids[1], false));
      case TermKind::Or:
        return neg ? Term::conj(go(s->kids[0], true), go(s->kids[1], true))
                   : Term::disj(go(s->kids[0], false), go(s->kids[1], false));
      case TermKind::BigAnd: {
        std::vector<TermPtr> ks;
        for (auto& k : s->kids) ks.push_back(go(k, neg));
        return neg ? Term::big_or(ks) : Term::big_and(ks);
      }
      case TermKind::BigOr: {
        std::vector<TermPtr> ks;
        for (auto& k : s->kids) ks.push_back(go(k, neg));
        return neg ? Term::big_and(ks) : Term::big_or(ks);
      }
      default: return neg ? Term::negate(s) : s;
    }
  };
  return go(t, false);
}

namespace {

bool is_boxed_atom(const TermPtr& t, const Signature& sig) {
  // chains of meet-preserving unary symbols over a variable (or a plain
  // variable), the classical t_i shape
  const Term* cur = t.get();
  while (cur->kind == TermKind::App) {
    auto* s = sig.find(cur->name);
    if (!s || s->arity != 1 || !(s->props[0] & P_MEET)) return false;
    cur = cur->kids[0].get();
  }
  return cur->kind == TermKind::Var;
}

bool skeleton_strictly_positive(const TermPtr& t, const Signature& sig,
                                const std::set<const Term*>& cuts) {
  if (cuts.count(t.get())) return true; // slot
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Bot:
    case TermKind::Top: return true;
    case TermKind::And:
    case TermKind::Or:
    case TermKind::BigAnd:
    case TermKind::BigOr: {
      for (auto& k : t->kids)
        if (!skeleton_strictly_positive(k, sig, cuts)) return false;
      return true;
    }
    case TermKind::App: {
      auto* s = sig.find(t->name);
      if (!s) return false;
      for (int i = 0; i < s->arity; ++i)
        if (!(s->props[i] & (P_JOIN | P_UDJOIN))) return false;
      for (auto& k : t->kids)
        if (!skeleton_strictly_positive(k, sig, cuts)) return false;
      return true;
    }
    case TermKind::NablaSet:
    case TermKind::NablaTup: return false;
    case TermKind::Not: return false;
  }
  return false;
}

// skeleton with cut points replaced by fresh variables must be conservative:
// every slot (or skeleton variable) path only meets join/ud-join preserving
// argument positions
bool skeleton_conservative(const TermPtr& t, const Signature& sig, const std::set<const Term*>& cuts) {
  std::function<bool(const TermPtr&)> has_slot = [&](const TermPtr& u) -> bool {
    if (cuts.count(u.get()) || u->kind == TermKind::Var) return true;
    for (auto& k : u->kids)
      if (has_slot(k)) return true;
    return false;
  };
  std::function<bool(const TermPtr&)> go = [&](const TermPtr& s) -> bool {
    if (cuts.count(s.get())) return true;
    switch (s->kind) {
      case TermKind::Var:
      case TermKind::Bot:
      case TermKind::Top: return true;
      case TermKind::And:
      case TermKind::Or:
      case TermKind::BigAnd:
      case TermKind::BigOr: {
        for (auto& k : s->kids)
          if (!go(k)) return false;
        return true;
      }
      case TermKind::App: {
        auto* sym = sig.find(s->name);
        if (!sym) return false;
        for (size_t i = 0; i < s->kids.size(); ++i) {
          if (!has_slot(s->kids[i])) continue;
          if (!(sym->props[i] & (P_JOIN | P_UDJOIN))) return false;
          if (!go(s->kids[i])) return false;
        }
        return true;
      }
      default: return false;
    }
  };
  return go(t);
}

bool positive_over_isotone(const TermPtr& u, const Signature& sig) {
  if (!term_uses_only_isotone_symbols(u, sig)) return false;
  for (auto& v : free_vars(u)) {
    auto p = polarity(u, v, sig);
    if (p == Polarity::Negative || p == Polarity::Mixed) return false;
  }
  return true;
}

struct Decomp {
  std::vector<TermPtr> stables;
  std::vector<TermPtr> positives; // the u_j under negation (or bare for substructural)
  bool ok = false;
};

// Enumerates cut-sets over the normal form: every cut subterm is either a
// stable t_i or a (negated) positive u_j, and the remaining skeleton must be
// conservative (plus strictly positive for the concrete dialects).
struct DecompSearch {
  const Signature& sig;
  Dialect dialect;
  TermPtr root;
  std::set<const Term*> cuts;
  std::vector<TermPtr> stables, positives;
  Decomp best;
  long budget;

  void finish() {
    if (best.ok) return;
    if (!skeleton_conservative(root, sig, cuts)) return;
    if (dialect == Dialect::Classical || dialect == Dialect::Gml || dialect == Dialect::Substructural)
      if (!skeleton_strictly_positive(root, sig, cuts)) return;
    best.ok = true;
    best.stables = stables;
    best.positives = positives;
  }

  void process(const TermPtr& node, const std::function<void()>& k) {
    if (best.ok || --budget < 0) return;

    TermPtr as_positive;
    if (node->kind == TermKind::Not && positive_over_isotone(node->kids[0], sig))
      as_positive = node->kids[0];
    if (dialect == Dialect::Substructural && positive_over_isotone(node, sig)) as_positive = node;
    if (dialect == Dialect::Abstract && !as_positive && node->kind == TermKind::Not) {
      // the abstract format admits expanding u_j under negation
      if (classify(node->kids[0], sig).expanding) as_positive = node->kids[0];
    }
    bool stable_ok;
    if (dialect == Dialect::Classical) stable_ok = is_boxed_atom(node, sig);
    else stable_ok = classify(node, sig).stability == Stability::Stable;

    if (stable_ok) {
      cuts.insert(node.get());
      stables.push_back(node);
      k();
      stables.pop_back();
      cuts.erase(node.get());
      if (best.ok) return;
    }
    if (as_positive) {
      cuts.insert(node.get());
      positives.push_back(as_positive);
      k();
      positives.pop_back();
      cuts.erase(node.get());
      if (best.ok) return;
    }
    // keep the node in the skeleton
    switch (node->kind) {
      case TermKind::Var:
      case TermKind::Bot:
      case TermKind::Top: k(); break;
      case TermKind::And:
      case TermKind::Or:
      case TermKind::BigAnd:
      case TermKind::BigOr:
      case TermKind::App: seq(node->kids, 0, k); break;
      default: break; // negations and nabla objects cannot sit in a skeleton
    }
  }

  void seq(const std::vector<TermPtr>& kids, size_t i, const std::function<void()>& k) {
    if (best.ok) return;
    if (i == kids.size()) {
      k();
      return;
    }
    process(kids[i], [&] { seq(kids, i + 1, k); });
  }

  Decomp run() {
    process(root, [&] { finish(); });
    return best;
  }
};

} // namespace

SahlqvistVerdict is_sahlqvist(const Equation& eq, const Signature& sig, Dialect dialect,
                              int search_depth) {
  if ((dialect == Dialect::Classical || dialect == Dialect::General || dialect == Dialect::Gml ||
       dialect == Dialect::Abstract) &&
      sig.base != LatticeKind::BA)
    throw InputError("DIALECT-MISMATCH: dialect '" + dialect_name(dialect) + "' needs a BA base");
  if (dialect == Dialect::Substructural && sig.base == LatticeKind::BA)
    throw InputError("DIALECT-MISMATCH: substructural dialect needs a DL/BDL base");

  SahlqvistVerdict v;

  if (sig.base == LatticeKind::BA || dialect == Dialect::Substructural) {
    // bring to u = bot form
    TermPtr u;
    if (eq.rhs->kind == TermKind::Bot) u = eq.lhs;
    else if (eq.lhs->kind == TermKind::Bot) u = eq.rhs;
    else if (sig.base == LatticeKind::BA) {
      if (eq.rhs->kind == TermKind::Top) u = Term::negate(eq.lhs);
      else if (eq.lhs->kind == TermKind::Top) u = Term::negate(eq.rhs);
      else if (eq.inequality) // lhs <= rhs  iff  lhs & !rhs = bot
        u = Term::conj(eq.lhs, Term::negate(eq.rhs));
      else // lhs = rhs iff !(lhs <-> rhs) = bot
        u = Term::disj(Term::conj(eq.lhs, Term::negate(eq.rhs)),
                       Term::conj(eq.rhs, Term::negate(eq.lhs)));
    }
    if (u) {
      if (sig.base == LatticeKind::BA) u = negation_normal_form(u);
      DecompSearch srch{sig, dialect, u, {}, {}, {}, {}, 4000L * (search_depth + 1)};
      Decomp best = srch.run();
      if (best.ok) {
        v.accepted = true;
        v.route = "sahlqvist";
        std::string r = "s(";
        for (size_t i = 0; i < best.stables.size(); ++i) r += (i ? ", " : "") + to_string(best.stables[i]);
        r += best.stables.empty() || best.positives.empty() ? "" : ", ";
        for (size_t i = 0; i < best.positives.size(); ++i)
          r += (i ? ", " : "") + std::string("!") + to_string(best.positives[i]);
        v.reason = r + ") = bot";
        v.stable_parts = best.stables;
        v.positive_parts = best.positives;
        return v;
      }
    }
  }
  // The classical dialect is the strict syntactic class; the others also admit
  // equations canonical by the stable/contracting-expanding certificates.
  if (dialect != Dialect::Classical) {
    auto lhs_cls = classify(eq.lhs, sig);
    auto rhs_cls = classify(eq.rhs, sig);
    if (!eq.inequality && lhs_cls.stability == Stability::Stable &&
        rhs_cls.stability == Stability::Stable) {
      v.accepted = true;
      v.route = "stable-equation";
      v.reason = "both sides stable";
      return v;
    }
    if (eq.inequality && lhs_cls.contracting && rhs_cls.expanding) {
      v.accepted = true;
      v.route = "contracting-expanding";
      v.reason = "lhs contracting, rhs expanding";
      return v;
    }
  }
  v.accepted = false;
  v.route = "none";
  v.reason = "no decomposition found within the search depth";
  return v;
}

QuasiReduction reduce_quasi(const TermPtr& s, const TermPtr& t, const Signature& sig) {
  if (sig.base == LatticeKind::DL)
    throw InputError("reduce_quasi: base must be BA or BDL");
  QuasiReduction out;
  out.sig_with_g = sig;
  std::string g = "g";
  while (out.sig_with_g.find(g)) g += "g";
  out.g_name = g;
  out.sig_with_g.add({g, 1, {Tonicity::Iso}, {P_JOIN}, DistLaw::Eq51, 0});
  auto gs = Term::app(g, {s});
  out.equation.lhs = Term::disj(t, gs);
  out.equation.rhs = gs;
  out.equation.inequality = false;
  return out;
}

// ------------------------------------------------- expanded algebra semantics

int AlgOp::at(const FinLattice& a, const std::vector<int>& xs) const {
  size_t idx = 0;
  for (int x : xs) idx = idx * a.size() + (size_t)x;
  return table[idx];
}

const AlgOp* ExpandedAlgebra::find(const std::string& n) const {
  for (auto& o : ops)
    if (o.name == n) return &o;
  return nullptr;
}

static int eval_term(const TermPtr& t, const ExpandedAlgebra& alg,
                     const std::map<std::string, int>& env) {
  auto& a = *alg.carrier;
  switch (t->kind) {
    case TermKind::Var: {
      auto it = env.find(t->name);
      if (it == env.end()) throw InputError("term_function: unbound variable " + t->name);
      return it->second;
    }
    case TermKind::Bot: return *a.bottom();
    case TermKind::Top: return *a.top();
    case TermKind::Not: return a.complement(eval_term(t->kids[0], alg, env));
    case TermKind::And: return a.meet(eval_term(t->kids[0], alg, env), eval_term(t->kids[1], alg, env));
    case TermKind::Or: return a.join(eval_term(t->kids[0], alg, env), eval_term(t->kids[1], alg, env));
    case TermKind::BigAnd: {
      int acc = *a.top();
      for (auto& k : t->kids) acc = a.meet(acc, eval_term(k, alg, env));
      return acc;
    }
    case TermKind::BigOr: {
      int acc = *a.bottom();
      for (auto& k : t->kids) acc = a.join(acc, eval_term(k, alg, env));
      return acc;
    }
    case TermKind::App: {
      auto* op = alg.find(t->name);
      if (!op) throw InputError("MISSING-INTERPRETATION: symbol '" + t->name + "'");
      std::vector<int> xs;
      for (auto& k : t->kids) xs.push_back(eval_term(k, alg, env));
      return op->at(a, xs);
    }
    default: throw InputError("term_function: nabla terms need a coalgebraic model");
  }
}

TermFunction term_function(const TermPtr& t, const ExpandedAlgebra& alg) {
  TermFunction tf;
  tf.vars = free_vars(t);
  auto& a = *alg.carrier;
  int n = a.size();
  int arity = (int)tf.vars.size();
  tf.map.ambient = &a;
  tf.map.arity = std::max(arity, 1);
  size_t total = 1;
  for (int i = 0; i < tf.map.arity; ++i) total *= (size_t)n;
  tf.map.table.assign(total, -1);
  for (TupleIter it(n, tf.map.arity); !it.done; it.next()) {
    std::map<std::string, int> env;
    for (int i = 0; i < arity; ++i) env[tf.vars[i]] = (*it)[i];
    tf.map.set_at(*it, eval_term(t, alg, env));
  }
  return tf;
}

bool algebra_validates(const ExpandedAlgebra& alg, const TermPtr& lhs, const TermPtr& rhs) {
  auto vars = free_vars(Term::conj(lhs, rhs));
  auto& a = *alg.carrier;
  int arity = (int)vars.size();
  for (TupleIter it(a.size(), std::max(arity, 1)); !it.done; it.next()) {
    std::map<std::string, int> env;
    for (int i = 0; i < arity; ++i) env[vars[i]] = (*it)[i];
    if (eval_term(lhs, alg, env) != eval_term(rhs, alg, env)) return false;
  }
  return true;
}

bool algebra_validates_leq(const ExpandedAlgebra& alg, const TermPtr& lhs, const TermPtr& rhs) {
  auto vars = free_vars(Term::conj(lhs, rhs));
  auto& a = *alg.carrier;
  int arity = (int)vars.size();
  for (TupleIter it(a.size(), std::max(arity, 1)); !it.done; it.next()) {
    std::map<std::string, int> env;
    for (int i = 0; i < arity; ++i) env[vars[i]] = (*it)[i];
    if (!a.leq(eval_term(lhs, alg, env), eval_term(rhs, alg, env))) return false;
  }
  return true;
}

} // namespace coalcan
