#pragma once

#include <memory>
#include <string>
#include <vector>

#include "coalcan/budget.hpp"

namespace coalcan {

enum class TermKind {
  Var,
  Bot,
  Top,
  Not,
  And,  // binary
  Or,   // binary
  BigAnd, // finite set meet
  BigOr,  // finite set join
  App,     // signature symbol application
  NablaSet, // cover modality over a finite set of terms
  NablaTup, // cover modality over a tuple of terms
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind;
  std::string name; // Var name or App symbol
  std::vector<TermPtr> kids;

  static TermPtr var(const std::string& n);
  static TermPtr bot();
  static TermPtr top();
  static TermPtr negate(TermPtr t);
  static TermPtr conj(TermPtr a, TermPtr b);
  static TermPtr disj(TermPtr a, TermPtr b);
  static TermPtr big_and(std::vector<TermPtr> kids); // canonicalized (sorted, deduped)
  static TermPtr big_or(std::vector<TermPtr> kids);
  static TermPtr app(const std::string& sym, std::vector<TermPtr> kids);
  static TermPtr nabla_set(std::vector<TermPtr> kids); // canonicalized
  static TermPtr nabla_tup(std::vector<TermPtr> kids);
};

std::string to_string(const TermPtr& t);
bool term_eq(const TermPtr& a, const TermPtr& b); // syntactic, after canonicalization
int modal_depth(const TermPtr& t);
void collect_vars(const TermPtr& t, std::vector<std::string>& out);
std::vector<std::string> free_vars(const TermPtr& t);
TermPtr substitute(const TermPtr& t, const std::vector<std::pair<std::string, TermPtr>>& sub);

// direct subterms of a nabla object = its base; for other nodes the children
std::vector<TermPtr> direct_subterms(const TermPtr& t);

} // namespace coalcan
