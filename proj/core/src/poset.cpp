#include "coalcan/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "coalcan/budget.hpp"

namespace coalcan {

FinPoset::FinPoset(std::vector<std::string> names, const std::vector<std::pair<int, int>>& le_pairs)
    : names_(std::move(names)) {
  int n = (int)names_.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (names_[i] == names_[j]) throw InputError("poset: duplicate element id '" + names_[i] + "'");
  up_.assign(n, Bits(n));
  for (int i = 0; i < n; ++i) up_[i].set(i);
  for (auto [a, b] : le_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw InputError("poset: le pair out of range");
    up_[a].set(b);
  }
  // transitive closure
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      Bits acc = up_[a];
      up_[a].for_each([&](int b) { acc |= up_[b]; });
      if (acc != up_[a]) {
        up_[a] = acc;
        changed = true;
      }
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (leq(a, b) && leq(b, a)) throw InputError("poset: order has a cycle through '" + names_[a] + "'");
}

FinPoset FinPoset::discrete(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  return FinPoset(names, {});
}

FinPoset FinPoset::chain(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> le;
  for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) le.push_back({i, i + 1});
  return FinPoset(names, le);
}

Bits FinPoset::down_set(int a) const {
  Bits d(size());
  for (int i = 0; i < size(); ++i)
    if (leq(i, a)) d.set(i);
  return d;
}

bool FinPoset::is_down_closed(const Bits& s) const {
  for (int a = 0; a < size(); ++a)
    if (s.test(a) && !down_set(a).subset_of(s)) return false;
  return true;
}

bool FinPoset::is_up_closed(const Bits& s) const {
  for (int a = 0; a < size(); ++a)
    if (s.test(a) && !up_[a].subset_of(s)) return false;
  return true;
}

std::vector<Bits> FinPoset::all_down_sets() const {
  int n = size();
  std::vector<Bits> out;
  if (n > 24) throw BudgetExceeded("all_down_sets: carrier too large");
  for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
    Bits s(n);
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1) s.set(i);
    if (is_down_closed(s)) out.push_back(s);
  }
  return out;
}

std::vector<Bits> FinPoset::all_up_sets() const {
  int n = size();
  std::vector<Bits> out;
  if (n > 24) throw BudgetExceeded("all_up_sets: carrier too large");
  for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
    Bits s(n);
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1) s.set(i);
    if (is_up_closed(s)) out.push_back(s);
  }
  return out;
}

FinPoset FinPoset::order_dual() const {
  std::vector<std::pair<int, int>> le;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (a != b && leq(a, b)) le.push_back({b, a});
  return FinPoset(names_, le);
}

namespace {
bool extend_iso(const FinPoset& p, const FinPoset& q, std::vector<int>& img, std::vector<bool>& used, int a) {
  int n = p.size();
  if (a == n) return true;
  for (int b = 0; b < n; ++b) {
    if (used[b]) continue;
    bool ok = true;
    for (int c = 0; c < a && ok; ++c) {
      if (p.leq(a, c) != q.leq(b, img[c])) ok = false;
      if (p.leq(c, a) != q.leq(img[c], b)) ok = false;
    }
    if (!ok) continue;
    img[a] = b;
    used[b] = true;
    if (extend_iso(p, q, img, used, a + 1)) return true;
    used[b] = false;
  }
  return false;
}
} // namespace

bool FinPoset::isomorphic_to(const FinPoset& other) const {
  if (size() != other.size()) return false;
  // cheap invariant: multiset of (|down|,|up|) pairs
  auto profile = [](const FinPoset& p) {
    std::vector<std::pair<int, int>> v;
    for (int a = 0; a < p.size(); ++a) v.push_back({p.down_set(a).count(), p.up_set(a).count()});
    std::sort(v.begin(), v.end());
    return v;
  };
  if (profile(*this) != profile(other)) return false;
  std::vector<int> img(size(), -1);
  std::vector<bool> used(size(), false);
  return extend_iso(*this, other, img, used, 0);
}

std::vector<FinPoset> all_posets_up_to_iso(int n) {
  // brute force over antisymmetric relation candidates given by DAG edge sets
  // on the strictly-upper triangle of every labeling; dedupe by isomorphism.
  std::vector<FinPoset> reps;
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.push_back({i, j});
  uint64_t total = uint64_t{1} << slots.size();
  if (slots.size() > 22) throw BudgetExceeded("all_posets_up_to_iso: n too large");
  for (uint64_t m = 0; m < total; ++m) {
    std::vector<std::pair<int, int>> le;
    for (size_t k = 0; k < slots.size(); ++k)
      if ((m >> k) & 1) le.push_back(slots[k]);
    FinPoset p;
    try {
      std::vector<std::string> names;
      for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
      p = FinPoset(names, le);
    } catch (const InputError&) {
      continue; // cyclic
    }
    // skip non-transitively-reduced duplicates cheaply: closure may repeat; rely on iso dedup
    bool fresh = true;
    for (const auto& r : reps)
      if (r.isomorphic_to(p)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(p);
  }
  return reps;
}

} // namespace coalcan
