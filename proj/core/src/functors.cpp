#include "coalcan/functors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace coalcan {

std::string FunctorId::to_string() const {
  switch (kind) {
    case FunctorKind::P: return "P";
    case FunctorKind::Pw: return "Pw";
    case FunctorKind::BagN: return "Bag" + std::to_string(cap);
    case FunctorKind::TreeN: return "Tree" + std::to_string(cap);
    case FunctorKind::TreeOmegaCap:
      return "TreeW" + std::to_string(cap) + (star ? "+star" : "");
    case FunctorKind::TSigma: return "TSigma";
    case FunctorKind::PolySigma: return "PolySigma";
  }
  return "?";
}

bool FunctorObject::operator==(const FunctorObject& o) const {
  return set == o.set && mult == o.mult && tup == o.tup && is_star == o.is_star && sym == o.sym &&
         unit == o.unit && rel == o.rel;
}

std::string FunctorObject::print(const std::vector<std::string>& names) const {
  auto nm = [&](int i) { return i < (int)names.size() ? names[i] : "#" + std::to_string(i); };
  if (is_star) return "star";
  if (!mult.empty()) {
    std::string s = "bag{";
    bool first = true;
    for (size_t i = 0; i < mult.size(); ++i)
      if (mult[i] > 0) {
        if (!first) s += ",";
        s += nm((int)i) + ":" + std::to_string(mult[i]);
        first = false;
      }
    return s + "}";
  }
  if (!rel.empty()) {
    std::string s = "rel{";
    bool first = true;
    for (auto& comp : rel)
      for (auto& t : comp) {
        if (!first) s += ",";
        s += "(";
        for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + nm(t[i]);
        s += ")";
        first = false;
      }
    s += "}";
    s += unit ? " unit" : " nonunit";
    return s;
  }
  if (set.universe() > 0) {
    std::string s = "{";
    bool first = true;
    set.for_each([&](int i) {
      if (!first) s += ",";
      s += nm(i);
      first = false;
    });
    return s + "}";
  }
  std::string s = sym >= 0 ? "sym" + std::to_string(sym) + "(" : "tup(";
  for (size_t i = 0; i < tup.size(); ++i) s += (i ? "," : "") + nm(tup[i]);
  return s + ")";
}

// ---------------------------------------------------------------- enumeration

static void enumerate_tuples(int n, int len, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(len, 0);
  if (len == 0) {
    out.push_back(cur);
    return;
  }
  if (n == 0) return;
  while (true) {
    out.push_back(cur);
    int i = len - 1;
    for (; i >= 0; --i) {
      if (++cur[i] < n) break;
      cur[i] = 0;
    }
    if (i < 0) break;
  }
}

static bool convex_in(const FinPoset& order, const std::vector<std::vector<int>>& tuples,
                      const TSigmaComp& comp) {
  int arity = comp.arity;
  auto leq_t = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (int i = 0; i < arity; ++i) {
      bool ok = comp.ton[i] != Tonicity::Anti ? order.leq(a[i], b[i]) : order.leq(b[i], a[i]);
      if (!ok) return false;
    }
    return true;
  };
  auto member = [&](const std::vector<int>& t) {
    return std::find(tuples.begin(), tuples.end(), t) != tuples.end();
  };
  std::vector<std::vector<int>> all;
  enumerate_tuples(order.size(), arity, all);
  for (auto& a : tuples)
    for (auto& c : tuples)
      for (auto& b : all)
        if (leq_t(a, b) && leq_t(b, c) && !member(b)) return false;
  return true;
}

std::vector<FunctorObject> enumerate_objects(const FunctorId& f, int n, const Caps& caps,
                                             const FinPoset* order) {
  std::vector<FunctorObject> out;
  switch (f.kind) {
    case FunctorKind::P:
    case FunctorKind::Pw: {
      caps.charge(uint64_t{1} << std::min(n, 62), "enumerate_objects(Pw)");
      for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
        FunctorObject o;
        o.set = Bits(n);
        for (int i = 0; i < n; ++i)
          if ((m >> i) & 1) o.set.set(i);
        out.push_back(std::move(o));
      }
      return out;
    }
    case FunctorKind::BagN: {
      uint64_t total = 1;
      for (int i = 0; i < n; ++i) total *= (uint64_t)(f.cap + 1);
      caps.charge(total, "enumerate_objects(BagN)");
      std::vector<int> cur(n, 0);
      while (true) {
        FunctorObject o;
        o.mult = cur;
        out.push_back(std::move(o));
        int i = n - 1;
        for (; i >= 0; --i) {
          if (++cur[i] <= f.cap) break;
          cur[i] = 0;
        }
        if (i < 0) break;
      }
      return out;
    }
    case FunctorKind::TreeN:
    case FunctorKind::TreeOmegaCap: {
      uint64_t total = 1, p = 1;
      for (int len = 1; len <= f.cap; ++len) {
        p *= (uint64_t)std::max(n, 1);
        total += p;
      }
      caps.charge(total, "enumerate_objects(Tree)");
      for (int len = 0; len <= f.cap; ++len) {
        std::vector<std::vector<int>> tuples;
        enumerate_tuples(n, len, tuples);
        for (auto& t : tuples) {
          FunctorObject o;
          o.tup = t;
          o.sym = -1;
          out.push_back(std::move(o));
        }
      }
      if (f.kind == FunctorKind::TreeOmegaCap && f.star) {
        FunctorObject o;
        o.is_star = true;
        out.push_back(std::move(o));
      }
      return out;
    }
    case FunctorKind::PolySigma: {
      for (size_t s = 0; s < f.sigma.size(); ++s) {
        std::vector<std::vector<int>> tuples;
        enumerate_tuples(n, f.sigma[s].arity, tuples);
        for (auto& t : tuples) {
          FunctorObject o;
          o.tup = t;
          o.sym = (int)s;
          out.push_back(std::move(o));
        }
      }
      return out;
    }
    case FunctorKind::TSigma: {
      if (!order) throw InputError("TSigma enumeration needs a carrier order");
      std::vector<std::vector<std::vector<std::vector<int>>>> comp_choices;
      for (auto& comp : f.sigma) {
        std::vector<std::vector<int>> tuples;
        enumerate_tuples(n, comp.arity, tuples);
        caps.charge(uint64_t{1} << std::min<size_t>(tuples.size(), 62), "enumerate_objects(TSigma)");
        std::vector<std::vector<std::vector<int>>> sets;
        for (uint64_t m = 0; m < (uint64_t{1} << tuples.size()); ++m) {
          std::vector<std::vector<int>> sel;
          for (size_t i = 0; i < tuples.size(); ++i)
            if ((m >> i) & 1) sel.push_back(tuples[i]);
          if (convex_in(*order, sel, comp)) sets.push_back(sel);
        }
        comp_choices.push_back(std::move(sets));
      }
      std::vector<size_t> idx(comp_choices.size(), 0);
      int units = f.with_unit ? 2 : 1;
      while (true) {
        for (int u = 0; u < units; ++u) {
          FunctorObject o;
          o.unit = u == 1;
          for (size_t c = 0; c < comp_choices.size(); ++c) o.rel.push_back(comp_choices[c][idx[c]]);
          out.push_back(std::move(o));
        }
        int c = (int)comp_choices.size() - 1;
        for (; c >= 0; --c) {
          if (++idx[c] < comp_choices[c].size()) break;
          idx[c] = 0;
        }
        if (c < 0) break;
      }
      return out;
    }
  }
  return out;
}

FunctorObject apply_map(const FunctorId& f, const FunctorObject& obj, const std::vector<int>& h,
                        int target_size, const FinPoset* target_order) {
  FunctorObject o;
  if (obj.is_star) {
    o.is_star = true;
    return o;
  }
  switch (f.kind) {
    case FunctorKind::P:
    case FunctorKind::Pw: {
      o.set = Bits(target_size);
      obj.set.for_each([&](int i) { o.set.set(h[i]); });
      return o;
    }
    case FunctorKind::BagN: {
      o.mult.assign(target_size, 0);
      for (size_t i = 0; i < obj.mult.size(); ++i)
        o.mult[h[i]] = std::min(f.cap, o.mult[h[i]] + obj.mult[i]);
      return o;
    }
    case FunctorKind::TreeN:
    case FunctorKind::TreeOmegaCap:
    case FunctorKind::PolySigma: {
      o.sym = obj.sym;
      for (int x : obj.tup) o.tup.push_back(h[x]);
      return o;
    }
    case FunctorKind::TSigma: {
      o.unit = obj.unit;
      for (size_t c = 0; c < obj.rel.size(); ++c) {
        std::vector<std::vector<int>> img;
        for (auto& t : obj.rel[c]) {
          std::vector<int> m;
          for (int x : t) m.push_back(h[x]);
          img.push_back(std::move(m));
        }
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (target_order) {
          auto& comp = f.sigma[c];
          auto leq_t = [&](const std::vector<int>& a, const std::vector<int>& b) {
            for (int i = 0; i < comp.arity; ++i) {
              bool ok = comp.ton[i] != Tonicity::Anti ? target_order->leq(a[i], b[i])
                                                      : target_order->leq(b[i], a[i]);
              if (!ok) return false;
            }
            return true;
          };
          std::vector<std::vector<int>> all;
          enumerate_tuples(target_size, comp.arity, all);
          bool grew = true;
          while (grew) {
            grew = false;
            for (auto& b : all) {
              if (std::find(img.begin(), img.end(), b) != img.end()) continue;
              bool between = false;
              for (auto& a : img)
                for (auto& cc : img)
                  if (leq_t(a, b) && leq_t(b, cc)) between = true;
              if (between) {
                img.push_back(b);
                std::sort(img.begin(), img.end());
                grew = true;
              }
            }
          }
        }
        o.rel.push_back(std::move(img));
      }
      return o;
    }
  }
  return o;
}

std::vector<std::pair<FunctorObject, FunctorObject>> lift_relation(
    const FunctorId& f, const std::vector<std::pair<int, int>>& r, int nA, int nB,
    const Caps& caps, const FinPoset* orderA, const FinPoset* orderB) {
  std::optional<FinPoset> rel_order;
  if (f.kind == FunctorKind::TSigma) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> le;
    for (size_t i = 0; i < r.size(); ++i) names.push_back("r" + std::to_string(i));
    for (size_t i = 0; i < r.size(); ++i)
      for (size_t j = 0; j < r.size(); ++j)
        if (i != j && orderA && orderB && orderA->leq(r[i].first, r[j].first) &&
            orderB->leq(r[i].second, r[j].second))
          le.push_back({(int)i, (int)j});
    rel_order = FinPoset(names, le);
  }
  auto objs = enumerate_objects(f, (int)r.size(), caps, rel_order ? &*rel_order : nullptr);
  std::vector<int> h1(r.size()), h2(r.size());
  for (size_t i = 0; i < r.size(); ++i) {
    h1[i] = r[i].first;
    h2[i] = r[i].second;
  }
  std::vector<std::pair<FunctorObject, FunctorObject>> out;
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<std::string> nonames;
  for (auto& w : objs) {
    auto a = apply_map(f, w, h1, nA, orderA);
    auto b = apply_map(f, w, h2, nB, orderB);
    auto key = std::make_pair(a.print(nonames), b.print(nonames));
    if (seen.insert(key).second) out.push_back({a, b});
  }
  return out;
}

bool lifted_member(const FunctorId& f, const FunctorObject& t, const FunctorObject& phi,
                   const std::vector<Bits>& subsets, const Caps& caps) {
  switch (f.kind) {
    case FunctorKind::P:
    case FunctorKind::Pw: {
      bool ok = true;
      t.set.for_each([&](int x) {
        bool cov = false;
        phi.set.for_each([&](int s) {
          if (subsets[s].test(x)) cov = true;
        });
        if (!cov) ok = false;
      });
      if (!ok) return false;
      bool all = true;
      phi.set.for_each([&](int s) {
        bool wit = false;
        t.set.for_each([&](int x) {
          if (subsets[s].test(x)) wit = true;
        });
        if (!wit) all = false;
      });
      return all;
    }
    case FunctorKind::TreeN:
    case FunctorKind::TreeOmegaCap: {
      if (t.is_star || phi.is_star) return t.is_star && phi.is_star;
      if (t.tup.size() != phi.tup.size()) return false;
      for (size_t i = 0; i < t.tup.size(); ++i)
        if (!subsets[phi.tup[i]].test(t.tup[i])) return false;
      return true;
    }
    case FunctorKind::BagN: {
      std::vector<std::pair<int, int>> cells;
      for (size_t x = 0; x < t.mult.size(); ++x)
        for (size_t s = 0; s < phi.mult.size(); ++s)
          if (subsets[s].test((int)x)) cells.push_back({(int)x, (int)s});
      std::vector<int> w(cells.size(), 0);
      std::function<bool(size_t)> go = [&](size_t i) -> bool {
        if (i == cells.size()) {
          std::vector<int> rows(t.mult.size(), 0), cols(phi.mult.size(), 0);
          for (size_t c = 0; c < cells.size(); ++c) {
            rows[cells[c].first] = std::min(f.cap, rows[cells[c].first] + w[c]);
            cols[cells[c].second] = std::min(f.cap, cols[cells[c].second] + w[c]);
          }
          return rows == t.mult && cols == phi.mult;
        }
        for (int v = 0; v <= f.cap; ++v) {
          w[i] = v;
          if (go(i + 1)) return true;
        }
        w[i] = 0;
        return false;
      };
      caps.charge(1, "lifted_member(BagN)");
      return go(0);
    }
    default: {
      std::vector<std::pair<int, int>> mem;
      int nX = 0;
      for (auto& s : subsets) nX = std::max(nX, s.universe());
      for (int x = 0; x < nX; ++x)
        for (size_t s = 0; s < subsets.size(); ++s)
          if (subsets[s].test(x)) mem.push_back({x, (int)s});
      auto lifted = lift_relation(f, mem, nX, (int)subsets.size(), caps);
      for (auto& [a, b] : lifted)
        if (a == t && b == phi) return true;
      return false;
    }
  }
}

Bits base_of(const FunctorId& f, const FunctorObject& obj, int n) {
  Bits b(n);
  if (obj.is_star) return b;
  switch (f.kind) {
    case FunctorKind::P:
    case FunctorKind::Pw: return obj.set;
    case FunctorKind::BagN:
      for (size_t i = 0; i < obj.mult.size(); ++i)
        if (obj.mult[i] > 0) b.set((int)i);
      return b;
    case FunctorKind::TreeN:
    case FunctorKind::TreeOmegaCap:
    case FunctorKind::PolySigma:
      for (int x : obj.tup) b.set(x);
      return b;
    case FunctorKind::TSigma:
      for (auto& comp : obj.rel)
        for (auto& t : comp)
          for (int x : t) b.set(x);
      return b;
  }
  return b;
}

} // namespace coalcan
