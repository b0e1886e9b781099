#include "coalcan/coalgebra.hpp"

#include <algorithm>
#include <functional>

namespace coalcan {

std::string logic_name(LogicId l) {
  switch (l) {
    case LogicId::Classical: return "classical";
    case LogicId::Nabla: return "nabla";
    case LogicId::Gml: return "gml";
    case LogicId::TreeLogic: return "tree";
    case LogicId::Relational: return "relational";
  }
  return "?";
}

// ------------------------------------------------------------ modal semantics

namespace {

// grade encoded in stock symbol names ("d3" -> 3, "t2" -> 2)
int name_grade(const std::string& sym) {
  if (sym.size() < 2) return -1;
  int g = 0;
  for (size_t i = 1; i < sym.size(); ++i) {
    if (!isdigit((unsigned char)sym[i])) return -1;
    g = g * 10 + (sym[i] - '0');
  }
  return g;
}

bool behaviour_satisfies(LogicId logic, const FunctorId& fid, const Signature& sig,
                         const std::string& sym, int grade, const std::vector<Bits>& args,
                         const FunctorObject& t, const Caps& caps) {
  switch (logic) {
    case LogicId::Classical: {
      if (sym == "dia") return t.set.intersects(args[0]);
      if (sym == "box") return t.set.subset_of(args[0]);
      throw InputError("classical logic knows dia/box only, got '" + sym + "'");
    }
    case LogicId::Gml: {
      int k = grade > 0 ? grade : name_grade(sym);
      if (k <= 0) throw InputError("gml: bad grade in '" + sym + "'");
      long max_total = (long)fid.cap * (long)t.mult.size();
      if (k > max_total) throw BudgetExceeded("GRADE-OVERFLOW: grade above N*|X|");
      long total = 0;
      for (size_t x = 0; x < t.mult.size(); ++x)
        if (args[0].test((int)x)) total += t.mult[x];
      return total >= k;
    }
    case LogicId::TreeLogic: {
      int k = grade > 0 ? grade : name_grade(sym);
      if (k < 0) throw InputError("tree: bad arity in '" + sym + "'");
      if (t.is_star) return false;
      if ((int)t.tup.size() != k) return false;
      for (int i = 0; i < k; ++i)
        if (!args[i].test(t.tup[i])) return false;
      return true;
    }
    case LogicId::Relational: {
      if (sym == "unit") return t.unit;
      int comp = -1;
      for (size_t c = 0; c < fid.sigma.size(); ++c)
        if (fid.sigma[c].sym == sym) comp = (int)c;
      if (comp < 0) throw InputError("relational: unknown component '" + sym + "'");
      auto& cs = fid.sigma[comp];
      auto& tuples = t.rel[comp];
      if (cs.law == DistLaw::Eq51) {
        for (auto& tp : tuples) {
          bool ok = true;
          for (int i = 0; i < cs.arity; ++i) {
            bool inside = args[i].test(tp[i]);
            if (cs.ton[i] != Tonicity::Anti ? !inside : inside) ok = false;
          }
          if (ok) return true;
        }
        return false;
      }
      // Eq52: universal form
      for (auto& tp : tuples) {
        bool antis_in = true;
        for (int i = 0; i < cs.arity; ++i)
          if (cs.ton[i] == Tonicity::Anti && !args[i].test(tp[i])) antis_in = false;
        if (!antis_in) continue;
        for (int i = 0; i < cs.arity; ++i)
          if (cs.ton[i] != Tonicity::Anti && !args[i].test(tp[i])) return false;
      }
      return true;
    }
    case LogicId::Nabla: break;
  }
  (void)caps;
  throw InputError("behaviour_satisfies: nabla handled separately");
  (void)sig;
}

} // namespace

bool delta_contains(const Coalgebra& m, const std::string& sym, int grade,
                    const std::vector<Bits>& args, const FunctorObject& t, const Caps& caps) {
  return behaviour_satisfies(m.logic, m.fid, m.sig, sym, grade, args, t, caps);
}

std::vector<FunctorObject> delta(const Coalgebra& m, const std::string& sym, int grade,
                                 const std::vector<Bits>& args, const Caps& caps) {
  auto all = enumerate_objects(m.fid, m.size(), caps, m.has_order ? &m.order : nullptr);
  std::vector<FunctorObject> out;
  for (auto& t : all)
    if (delta_contains(m, sym, grade, args, t, caps)) out.push_back(t);
  return out;
}

Bits eval(const Coalgebra& m, const TermPtr& t, const Caps& caps) {
  int n = m.size();
  switch (t->kind) {
    case TermKind::Var: {
      auto it = m.valuation.find(t->name);
      if (it == m.valuation.end()) throw InputError("eval: unbound variable '" + t->name + "'");
      return it->second;
    }
    case TermKind::Bot: return Bits(n);
    case TermKind::Top: return Bits::full(n);
    case TermKind::Not: {
      if (m.has_order) throw InputError("eval: negation on a poset carrier");
      return eval(m, t->kids[0], caps).complemented();
    }
    case TermKind::And: return eval(m, t->kids[0], caps) & eval(m, t->kids[1], caps);
    case TermKind::Or: return eval(m, t->kids[0], caps) | eval(m, t->kids[1], caps);
    case TermKind::BigAnd: {
      Bits acc = Bits::full(n);
      for (auto& k : t->kids) acc &= eval(m, k, caps);
      return acc;
    }
    case TermKind::BigOr: {
      Bits acc(n);
      for (auto& k : t->kids) acc |= eval(m, k, caps);
      return acc;
    }
    case TermKind::App: {
      std::vector<Bits> args;
      for (auto& k : t->kids) args.push_back(eval(m, k, caps));
      int grade = m.sig.find(t->name) ? m.sig.find(t->name)->grade : 0;
      Bits out(n);
      for (int w = 0; w < n; ++w)
        if (delta_contains(m, t->name, grade, args, m.gamma[w], caps)) out.set(w);
      if (m.has_order && !m.order.is_up_closed(out))
        throw InputError("eval: relational semantics produced a non-up-set");
      return out;
    }
    case TermKind::NablaSet:
    case TermKind::NablaTup: {
      std::vector<Bits> subsets;
      for (auto& k : t->kids) subsets.push_back(eval(m, k, caps));
      FunctorObject phi;
      if (t->kind == TermKind::NablaSet) {
        phi.set = Bits::full((int)subsets.size());
      } else {
        for (size_t i = 0; i < subsets.size(); ++i) phi.tup.push_back((int)i);
        phi.sym = -1;
      }
      Bits out(n);
      for (int w = 0; w < n; ++w)
        if (lifted_member(m.fid, m.gamma[w], phi, subsets, caps)) out.set(w);
      return out;
    }
  }
  return Bits(n);
}

FrameValidity frame_valid(const Coalgebra& frame, const TermPtr& lhs, const TermPtr& rhs,
                          const std::vector<std::string>& vars, const Caps& caps) {
  FrameValidity fv;
  int n = frame.size();
  std::vector<Bits> choices;
  if (frame.has_order) {
    choices = frame.order.all_up_sets();
  } else {
    for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
      Bits s(n);
      for (int i = 0; i < n; ++i)
        if ((m >> i) & 1) s.set(i);
      choices.push_back(s);
    }
  }
  uint64_t total = 1;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (total > caps.budget / std::max<uint64_t>(choices.size(), 1))
      throw BudgetExceeded("frame_valid valuation space");
    total *= (uint64_t)choices.size();
  }
  caps.charge(total, "frame_valid");

  Coalgebra m = frame;
  std::vector<size_t> idx(vars.size(), 0);
  while (true) {
    for (size_t i = 0; i < vars.size(); ++i) m.valuation[vars[i]] = choices[idx[i]];
    if (eval(m, lhs, caps) != eval(m, rhs, caps)) {
      fv.valid = false;
      for (size_t i = 0; i < vars.size(); ++i) fv.countervaluation[vars[i]] = choices[idx[i]];
      return fv;
    }
    int i = (int)vars.size() - 1;
    for (; i >= 0; --i) {
      if (++idx[i] < choices.size()) break;
      idx[i] = 0;
    }
    if (i < 0) break;
    if (vars.empty()) break;
  }
  return fv;
}

// --------------------------------------------------------- terminal sequences

Bits TerminalSequence::interp(const TermPtr& t, int k, const Caps& caps) const {
  int n = (int)stages[k].size();
  switch (t->kind) {
    case TermKind::Var: {
      int vi = -1;
      for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == t->name) vi = (int)i;
      if (vi < 0) throw InputError("stage interp: unknown variable " + t->name);
      Bits out(n);
      for (int p = 0; p < n; ++p)
        if ((stages[k][p].colour >> vi) & 1) out.set(p);
      return out;
    }
    case TermKind::Bot: return Bits(n);
    case TermKind::Top: return Bits::full(n);
    case TermKind::Not: return interp(t->kids[0], k, caps).complemented();
    case TermKind::And: return interp(t->kids[0], k, caps) & interp(t->kids[1], k, caps);
    case TermKind::Or: return interp(t->kids[0], k, caps) | interp(t->kids[1], k, caps);
    case TermKind::BigAnd: {
      Bits acc = Bits::full(n);
      for (auto& c : t->kids) acc &= interp(c, k, caps);
      return acc;
    }
    case TermKind::BigOr: {
      Bits acc(n);
      for (auto& c : t->kids) acc |= interp(c, k, caps);
      return acc;
    }
    case TermKind::App: {
      if (k == 0) throw InputError("stage interp: modal depth exceeds the stage");
      std::vector<Bits> args;
      for (auto& c : t->kids) args.push_back(interp(c, k - 1, caps));
      Bits out(n);
      for (int p = 0; p < n; ++p) {
        auto& beh = stages[k][p].behaviour;
        bool in = false;
        if (t->name == "dia") in = beh.set.intersects(args[0]);
        else if (t->name == "box") in = beh.set.subset_of(args[0]);
        else {
          int g = name_grade(t->name);
          if (g < 0) throw InputError("stage interp: unknown modal symbol " + t->name);
          if (!beh.is_star && (int)beh.tup.size() == g) {
            in = true;
            for (int i = 0; i < g; ++i)
              if (!args[i].test(beh.tup[i])) in = false;
          }
        }
        if (in) out.set(p);
      }
      return out;
    }
    case TermKind::NablaSet:
    case TermKind::NablaTup: {
      if (k == 0) throw InputError("stage interp: modal depth exceeds the stage");
      std::vector<Bits> subsets;
      for (auto& c : t->kids) subsets.push_back(interp(c, k - 1, caps));
      FunctorObject phi;
      if (t->kind == TermKind::NablaSet) phi.set = Bits::full((int)subsets.size());
      else {
        for (size_t i = 0; i < subsets.size(); ++i) phi.tup.push_back((int)i);
      }
      Bits out(n);
      for (int p = 0; p < n; ++p)
        if (lifted_member(fid, stages[k][p].behaviour, phi, subsets, caps)) out.set(p);
      return out;
    }
  }
  return Bits(n);
}

TerminalSequence terminal_sequence_interp(LogicId logic, const FunctorId& fid, int depth,
                                          const std::vector<std::string>& vars, const Caps& caps) {
  if (!(fid.kind == FunctorKind::P || fid.kind == FunctorKind::Pw ||
        fid.kind == FunctorKind::TreeN || fid.kind == FunctorKind::TreeOmegaCap))
    throw InputError("terminal_sequence_interp: functor must preserve finite sets");
  caps.charge((uint64_t)depth * std::max<size_t>(vars.size(), 1), "terminal_sequence depth");
  TerminalSequence ts;
  ts.fid = fid;
  ts.vars = vars;
  int colours = 1 << vars.size();
  // stage 0: colours only
  std::vector<StagePoint> s0;
  for (int c = 0; c < colours; ++c) s0.push_back({FunctorObject{}, (uint32_t)c});
  ts.stages.push_back(std::move(s0));
  for (int k = 1; k <= depth; ++k) {
    auto behs = enumerate_objects(fid, (int)ts.stages[k - 1].size(), caps);
    std::vector<StagePoint> sk;
    std::vector<int> restr;
    for (auto& b : behs)
      for (int c = 0; c < colours; ++c) sk.push_back({b, (uint32_t)c});
    // restriction maps: behaviour through the previous restriction, colour kept
    if (k >= 2) {
      auto& prev_restr = ts.restrictions.back();
      (void)prev_restr;
    }
    ts.stages.push_back(std::move(sk));
  }
  // restriction stage k+1 -> k: apply F(restriction_k) to the behaviour
  ts.restrictions.resize(ts.stages.size() > 1 ? ts.stages.size() - 1 : 0);
  for (size_t k = 1; k < ts.stages.size(); ++k) {
    std::vector<int>& r = ts.restrictions[k - 1];
    r.assign(ts.stages[k].size(), 0);
    if (k == 1) {
      for (size_t p = 0; p < ts.stages[1].size(); ++p) r[p] = (int)ts.stages[1][p].colour;
    } else {
      // index the previous stage for lookup
      auto& prev = ts.stages[k - 1];
      std::vector<std::string> nonames;
      std::map<std::pair<std::string, uint32_t>, int> index;
      for (size_t q = 0; q < prev.size(); ++q)
        index[{prev[q].behaviour.print(nonames), prev[q].colour}] = (int)q;
      for (size_t p = 0; p < ts.stages[k].size(); ++p) {
        auto beh = apply_map(fid, ts.stages[k][p].behaviour, ts.restrictions[k - 2],
                             (int)ts.stages[k - 2].size());
        auto it = index.find({beh.print(nonames), ts.stages[k][p].colour});
        // the restricted behaviour lives over stage k-2; find the k-1 point
        // with that behaviour and colour
        if (it == index.end()) throw InputError("terminal sequence: restriction failed");
        r[p] = it->second;
      }
    }
  }

  // injectivity witness: realize each stage-depth point by a characteristic
  // formula and check the denotations are exactly the singletons
  if (depth >= 0) {
    std::function<TermPtr(int, int)> chi = [&](int k, int p) -> TermPtr {
      auto& pt = ts.stages[k][p];
      std::vector<TermPtr> conj;
      for (size_t i = 0; i < vars.size(); ++i) {
        auto v = Term::var(vars[i]);
        conj.push_back(((pt.colour >> i) & 1) ? v : Term::negate(v));
      }
      if (k > 0) {
        if (fid.kind == FunctorKind::P || fid.kind == FunctorKind::Pw) {
          std::vector<TermPtr> members;
          pt.behaviour.set.for_each([&](int q) { members.push_back(chi(k - 1, q)); });
          conj.push_back(Term::nabla_set(members));
        } else {
          if (pt.behaviour.is_star) {
            // no tuple behaviour of any length
            std::vector<TermPtr> anyk;
            for (int len = 0; len <= fid.cap; ++len) {
              std::vector<TermPtr> tops(len, Term::top());
              anyk.push_back(Term::nabla_tup(tops));
            }
            conj.push_back(Term::negate(Term::big_or(anyk)));
          } else {
            std::vector<TermPtr> comps;
            for (int q : pt.behaviour.tup) comps.push_back(chi(k - 1, q));
            conj.push_back(Term::nabla_tup(comps));
          }
        }
      }
      return Term::big_and(conj);
    };
    bool ok = true;
    uint64_t cost = (uint64_t)ts.stages[depth].size() * ts.stages[depth].size();
    if (cost <= caps.budget) {
      for (size_t p = 0; p < ts.stages[depth].size() && ok; ++p) {
        auto d = ts.interp(chi(depth, (int)p), depth, caps);
        if (d != Bits::single((int)ts.stages[depth].size(), (int)p)) ok = false;
      }
      ts.injectivity_checked = true;
      ts.injective = ok;
    }
  }
  (void)logic;
  return ts;
}

} // namespace coalcan
