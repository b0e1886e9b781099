#include "coalcan/term.hpp"

#include <algorithm>
#include <set>

namespace coalcan {

static TermPtr mk(TermKind k, std::string name, std::vector<TermPtr> kids) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->name = std::move(name);
  t->kids = std::move(kids);
  return t;
}

TermPtr Term::var(const std::string& n) { return mk(TermKind::Var, n, {}); }
TermPtr Term::bot() { return mk(TermKind::Bot, "", {}); }
TermPtr Term::top() { return mk(TermKind::Top, "", {}); }
TermPtr Term::negate(TermPtr t) { return mk(TermKind::Not, "", {std::move(t)}); }
TermPtr Term::conj(TermPtr a, TermPtr b) { return mk(TermKind::And, "", {std::move(a), std::move(b)}); }
TermPtr Term::disj(TermPtr a, TermPtr b) { return mk(TermKind::Or, "", {std::move(a), std::move(b)}); }
TermPtr Term::app(const std::string& sym, std::vector<TermPtr> kids) {
  return mk(TermKind::App, sym, std::move(kids));
}
TermPtr Term::nabla_tup(std::vector<TermPtr> kids) { return mk(TermKind::NablaTup, "", std::move(kids)); }

static std::vector<TermPtr> canon_set(std::vector<TermPtr> kids) {
  std::sort(kids.begin(), kids.end(),
            [](const TermPtr& a, const TermPtr& b) { return to_string(a) < to_string(b); });
  kids.erase(std::unique(kids.begin(), kids.end(),
                         [](const TermPtr& a, const TermPtr& b) { return term_eq(a, b); }),
             kids.end());
  return kids;
}

TermPtr Term::big_and(std::vector<TermPtr> kids) { return mk(TermKind::BigAnd, "", canon_set(std::move(kids))); }
TermPtr Term::big_or(std::vector<TermPtr> kids) { return mk(TermKind::BigOr, "", canon_set(std::move(kids))); }
TermPtr Term::nabla_set(std::vector<TermPtr> kids) { return mk(TermKind::NablaSet, "", canon_set(std::move(kids))); }

std::string to_string(const TermPtr& t) {
  auto list = [&](const char* open, const char* close) {
    std::string s = open;
    for (size_t i = 0; i < t->kids.size(); ++i) {
      if (i) s += ",";
      s += to_string(t->kids[i]);
    }
    return s + close;
  };
  switch (t->kind) {
    case TermKind::Var: return t->name;
    case TermKind::Bot: return "bot";
    case TermKind::Top: return "top";
    case TermKind::Not: return "!" + to_string(t->kids[0]);
    case TermKind::And: return "(" + to_string(t->kids[0]) + " & " + to_string(t->kids[1]) + ")";
    case TermKind::Or: return "(" + to_string(t->kids[0]) + " | " + to_string(t->kids[1]) + ")";
    case TermKind::BigAnd: return "and" + list("{", "}");
    case TermKind::BigOr: return "or" + list("{", "}");
    case TermKind::App: return t->name + list("(", ")");
    case TermKind::NablaSet: return "nabla" + list("{", "}");
    case TermKind::NablaTup: return "nabla" + list("(", ")");
  }
  return "?";
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind || a->name != b->name || a->kids.size() != b->kids.size()) return false;
  for (size_t i = 0; i < a->kids.size(); ++i)
    if (!term_eq(a->kids[i], b->kids[i])) return false;
  return true;
}

int modal_depth(const TermPtr& t) {
  int k = 0;
  for (auto& c : t->kids) k = std::max(k, modal_depth(c));
  if (t->kind == TermKind::App || t->kind == TermKind::NablaSet || t->kind == TermKind::NablaTup)
    return k + 1;
  return k;
}

void collect_vars(const TermPtr& t, std::vector<std::string>& out) {
  if (t->kind == TermKind::Var) {
    out.push_back(t->name);
    return;
  }
  for (auto& c : t->kids) collect_vars(c, out);
}

std::vector<std::string> free_vars(const TermPtr& t) {
  std::vector<std::string> v;
  collect_vars(t, v);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

TermPtr substitute(const TermPtr& t, const std::vector<std::pair<std::string, TermPtr>>& sub) {
  if (t->kind == TermKind::Var) {
    for (auto& [n, r] : sub)
      if (n == t->name) return r;
    return t;
  }
  std::vector<TermPtr> kids;
  for (auto& c : t->kids) kids.push_back(substitute(c, sub));
  switch (t->kind) {
    case TermKind::BigAnd: return Term::big_and(std::move(kids));
    case TermKind::BigOr: return Term::big_or(std::move(kids));
    case TermKind::NablaSet: return Term::nabla_set(std::move(kids));
    default: {
      auto r = std::make_shared<Term>();
      r->kind = t->kind;
      r->name = t->name;
      r->kids = std::move(kids);
      return r;
    }
  }
}

std::vector<TermPtr> direct_subterms(const TermPtr& t) { return t->kids; }

} // namespace coalcan
