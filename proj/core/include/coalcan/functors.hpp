#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coalcan/bitset.hpp"
#include "coalcan/poset.hpp"
#include "coalcan/signature.hpp"

namespace coalcan {

enum class FunctorKind {
  P,            // full powerset (finite carriers, so = Pw pointwise)
  Pw,           // finitary powerset
  BagN,         // multisets with multiplicities saturating at N
  TreeN,        // tuples of length <= cap
  TreeOmegaCap, // tuples of length <= cap plus an optional extra point
  TSigma,       // signature-indexed convex-relation product over posets
  PolySigma,    // plain polynomial: tagged tuples
};

struct TSigmaComp {
  std::string sym;
  int arity = 2;
  std::vector<Tonicity> ton; // per component; antitone components use the dual order
  DistLaw law = DistLaw::Eq51;
};

struct FunctorId {
  FunctorKind kind = FunctorKind::Pw;
  int cap = 0;       // N for BagN, arity cap for trees
  bool star = false; // TreeOmegaCap extra point
  bool with_unit = false; // TSigma unit component
  std::vector<TSigmaComp> sigma;

  static FunctorId powerset() { return {FunctorKind::P, 0, false, false, {}}; }
  static FunctorId pw() { return {FunctorKind::Pw, 0, false, false, {}}; }
  static FunctorId bag(int n) { return {FunctorKind::BagN, n, false, false, {}}; }
  static FunctorId tree(int d) { return {FunctorKind::TreeN, d, false, false, {}}; }
  static FunctorId tree_cap(int d, bool star) { return {FunctorKind::TreeOmegaCap, d, star, false, {}}; }
  static FunctorId tsigma(std::vector<TSigmaComp> comps, bool unit) {
    return {FunctorKind::TSigma, 0, false, unit, std::move(comps)};
  }
  std::string to_string() const;
  bool operator==(const FunctorId& o) const {
    return kind == o.kind && cap == o.cap && star == o.star && with_unit == o.with_unit &&
           sigma.size() == o.sigma.size();
  }
};

// one element of F(X) for a carrier of known size
struct FunctorObject {
  Bits set;              // P / Pw
  std::vector<int> mult; // BagN
  std::vector<int> tup;  // trees / PolySigma
  bool is_star = false;
  int sym = -1; // PolySigma tag
  bool unit = false;
  std::vector<std::vector<std::vector<int>>> rel; // TSigma: per component, sorted tuples

  bool operator==(const FunctorObject& o) const;
  std::string print(const std::vector<std::string>& names) const;
};

// all of F(X) for |X| = n (throws BudgetExceeded if too large); the poset is
// needed for TSigma convexity
std::vector<FunctorObject> enumerate_objects(const FunctorId& f, int n, const Caps& caps,
                                             const FinPoset* order = nullptr);

// F(h) for h : X -> Y given by an index table; TSigma takes the target order
// for convex closure
FunctorObject apply_map(const FunctorId& f, const FunctorObject& obj, const std::vector<int>& h,
                        int target_size, const FinPoset* target_order = nullptr);

// relation lifting: F-bar R = (F pi1 x F pi2)[F R]
std::vector<std::pair<FunctorObject, FunctorObject>> lift_relation(
    const FunctorId& f, const std::vector<std::pair<int, int>>& r, int nA, int nB,
    const Caps& caps, const FinPoset* orderA = nullptr, const FinPoset* orderB = nullptr);

// (t, Phi) in F-bar(member) where member pairs carrier points with the listed
// subsets; Phi is an F-object over the subset list
bool lifted_member(const FunctorId& f, const FunctorObject& t, const FunctorObject& phi,
                   const std::vector<Bits>& subsets, const Caps& caps);

// smallest subset of the carrier supporting obj
Bits base_of(const FunctorId& f, const FunctorObject& obj, int n);

} // namespace coalcan
