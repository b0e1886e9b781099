#pragma once

#include <string>
#include <vector>

#include "coalcan/bitset.hpp"
#include "coalcan/budget.hpp"

namespace coalcan {

// Finite poset over interned element ids. The order is kept as per-element
// up-sets; construction takes any relation and closes it reflexively and
// transitively, rejecting cycles (antisymmetry).
class FinPoset {
public:
  FinPoset() = default;
  FinPoset(std::vector<std::string> names, const std::vector<std::pair<int, int>>& le_pairs);

  static FinPoset discrete(int n);
  static FinPoset chain(int n);

  int size() const { return (int)names_.size(); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  bool leq(int a, int b) const { return up_[a].test(b); }
  const Bits& up_set(int a) const { return up_[a]; }
  Bits down_set(int a) const;

  bool is_down_closed(const Bits& s) const;
  bool is_up_closed(const Bits& s) const;
  std::vector<Bits> all_down_sets() const;
  std::vector<Bits> all_up_sets() const;

  FinPoset order_dual() const;

  // isomorphism search by backtracking; fine for the <= 8 point posets the
  // duality tests use
  bool isomorphic_to(const FinPoset& other) const;

private:
  std::vector<std::string> names_;
  std::vector<Bits> up_;
};

// enumerate all posets on n labeled points, deduplicated up to isomorphism
std::vector<FinPoset> all_posets_up_to_iso(int n);

} // namespace coalcan
