#include "coalcan/lattice.hpp"

#include <algorithm>
#include <map>

namespace coalcan {

// ---------------------------------------------------------------- FinLattice

int FinLattice::size() const {
  return mode_ == Mode::Powerset ? (1 << base_) : (int)names_.size();
}

std::string FinLattice::name(int a) const {
  if (mode_ == Mode::Tables) return names_[a];
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < base_; ++i)
    if ((a >> i) & 1) {
      if (!first) s += ",";
      s += "v" + std::to_string(i);
      first = false;
    }
  return s + "}";
}

bool FinLattice::leq(int a, int b) const {
  if (mode_ == Mode::Powerset) return (a & ~b) == 0;
  return up_[a].test(b);
}

int FinLattice::meet(int a, int b) const {
  if (mode_ == Mode::Powerset) return a & b;
  return meet_[a * size() + b];
}

int FinLattice::join(int a, int b) const {
  if (mode_ == Mode::Powerset) return a | b;
  return join_[a * size() + b];
}

std::optional<int> FinLattice::bottom() const {
  if (mode_ == Mode::Powerset) return 0;
  return bot_;
}

std::optional<int> FinLattice::top() const {
  if (mode_ == Mode::Powerset) return (1 << base_) - 1;
  return top_;
}

int FinLattice::complement(int a) const {
  if (kind_ != LatticeKind::BA) throw LatticeError("complement on non-BA host");
  if (mode_ == Mode::Powerset) return ((1 << base_) - 1) & ~a;
  return compl_[a];
}

int FinLattice::meet_of(const Bits& s) const {
  int acc = -1;
  s.for_each([&](int a) { acc = acc < 0 ? a : meet(acc, a); });
  if (acc < 0) {
    auto t = top();
    if (!t) throw LatticeError("empty meet in an unbounded lattice");
    return *t;
  }
  return acc;
}

int FinLattice::join_of(const Bits& s) const {
  int acc = -1;
  s.for_each([&](int a) { acc = acc < 0 ? a : join(acc, a); });
  if (acc < 0) {
    auto b = bottom();
    if (!b) throw LatticeError("empty join in an unbounded lattice");
    return *b;
  }
  return acc;
}

std::vector<int> FinLattice::join_irreducibles() const {
  std::vector<int> out;
  int n = size();
  if (mode_ == Mode::Powerset) {
    for (int i = 0; i < base_; ++i) out.push_back(1 << i);
    return out;
  }
  auto bot = bottom();
  for (int x = 0; x < n; ++x) {
    if (bot && x == *bot) continue;
    // x join-irreducible iff x != join of the elements strictly below it
    int below = -1;
    for (int y = 0; y < n; ++y)
      if (y != x && leq(y, x)) below = below < 0 ? y : join(below, y);
    if (below < 0 || below != x) out.push_back(x);
  }
  return out;
}

std::vector<int> FinLattice::meet_irreducibles() const {
  std::vector<int> out;
  int n = size();
  if (mode_ == Mode::Powerset) {
    int full = (1 << base_) - 1;
    for (int i = 0; i < base_; ++i) out.push_back(full & ~(1 << i));
    return out;
  }
  auto t = top();
  for (int x = 0; x < n; ++x) {
    if (t && x == *t) continue;
    int above = -1;
    for (int y = 0; y < n; ++y)
      if (y != x && leq(x, y)) above = above < 0 ? y : meet(above, y);
    if (above < 0 || above != x) out.push_back(x);
  }
  return out;
}

std::vector<int> FinLattice::atoms() const {
  std::vector<int> out;
  if (mode_ == Mode::Powerset) {
    for (int i = 0; i < base_; ++i) out.push_back(1 << i);
    return out;
  }
  auto b = bottom();
  if (!b) return out;
  for (int x = 0; x < size(); ++x) {
    if (x == *b) continue;
    bool atom = true;
    for (int y = 0; y < size(); ++y)
      if (y != x && y != *b && leq(y, x)) atom = false;
    if (atom) out.push_back(x);
  }
  return out;
}

bool FinLattice::is_filter(const Bits& s) const {
  if (s.empty()) return false;
  bool ok = true;
  s.for_each([&](int a) {
    for (int b = 0; b < size(); ++b)
      if (leq(a, b) && !s.test(b)) ok = false;
    s.for_each([&](int b) {
      if (!s.test(meet(a, b))) ok = false;
    });
  });
  return ok;
}

bool FinLattice::is_ideal(const Bits& s) const {
  if (s.empty()) return false;
  bool ok = true;
  s.for_each([&](int a) {
    for (int b = 0; b < size(); ++b)
      if (leq(b, a) && !s.test(b)) ok = false;
    s.for_each([&](int b) {
      if (!s.test(join(a, b))) ok = false;
    });
  });
  return ok;
}

bool FinLattice::is_prime_filter(const Bits& s) const {
  if (!is_filter(s) || !is_proper(s)) return false;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (s.test(join(a, b)) && !s.test(a) && !s.test(b)) return false;
  return true;
}

bool FinLattice::is_ultrafilter(const Bits& s) const {
  if (kind_ != LatticeKind::BA) return false;
  if (!is_prime_filter(s)) return false;
  for (int a = 0; a < size(); ++a)
    if (s.test(a) == s.test(complement(a))) return false;
  return true;
}

Bits FinLattice::up_closure(const Bits& s) const {
  Bits r(size());
  s.for_each([&](int a) {
    for (int b = 0; b < size(); ++b)
      if (leq(a, b)) r.set(b);
  });
  return r;
}

Bits FinLattice::down_closure(const Bits& s) const {
  Bits r(size());
  s.for_each([&](int a) {
    for (int b = 0; b < size(); ++b)
      if (leq(b, a)) r.set(b);
  });
  return r;
}

Bits FinLattice::filter_generated(const Bits& s) const {
  // finite: close under binary meets, then upward
  Bits meets = s;
  bool changed = true;
  while (changed) {
    changed = false;
    auto v = meets.to_vector();
    for (int a : v)
      for (int b : v) {
        int m = meet(a, b);
        if (!meets.test(m)) {
          meets.set(m);
          changed = true;
        }
      }
  }
  return up_closure(meets);
}

Bits FinLattice::ideal_generated(const Bits& s) const {
  Bits joins = s;
  bool changed = true;
  while (changed) {
    changed = false;
    auto v = joins.to_vector();
    for (int a : v)
      for (int b : v) {
        int j = join(a, b);
        if (!joins.test(j)) {
          joins.set(j);
          changed = true;
        }
      }
  }
  return down_closure(joins);
}

Bits FinLattice::principal_filter(int a) const {
  Bits r(size());
  for (int b = 0; b < size(); ++b)
    if (leq(a, b)) r.set(b);
  return r;
}

Bits FinLattice::principal_ideal(int a) const {
  Bits r(size());
  for (int b = 0; b < size(); ++b)
    if (leq(b, a)) r.set(b);
  return r;
}

bool FinLattice::distributive() const {
  int n = size();
  if (mode_ == Mode::Powerset) return true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
  return true;
}

FinPoset FinLattice::order_poset() const {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> le;
  int n = size();
  for (int a = 0; a < n; ++a) names.push_back(name(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && leq(a, b)) le.push_back({a, b});
  return FinPoset(names, le);
}

void FinLattice::validate_tables() const {
  int n = size();
  // order axioms
  for (int a = 0; a < n; ++a) {
    if (!leq(a, a)) throw LatticeError("leq not reflexive");
    for (int b = 0; b < n; ++b) {
      if (a != b && leq(a, b) && leq(b, a)) throw LatticeError("leq not antisymmetric");
      for (int c = 0; c < n; ++c)
        if (leq(a, b) && leq(b, c) && !leq(a, c)) throw LatticeError("leq not transitive");
    }
  }
  // meet = glb, join = lub
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int m = meet_[a * n + b], j = join_[a * n + b];
      if (!leq(m, a) || !leq(m, b)) throw LatticeError("meet not a lower bound");
      if (!leq(a, j) || !leq(b, j)) throw LatticeError("join not an upper bound");
      for (int c = 0; c < n; ++c) {
        if (leq(c, a) && leq(c, b) && !leq(c, m)) throw LatticeError("meet not greatest");
        if (leq(a, c) && leq(b, c) && !leq(j, c)) throw LatticeError("join not least");
      }
    }
  if (!distributive()) throw LatticeError("NON-DISTRIBUTIVE");
  if (kind_ != LatticeKind::DL) {
    if (!bot_ || !top_) throw LatticeError("bounded kind without bounds");
  }
  if (bot_)
    for (int a = 0; a < n; ++a)
      if (!leq(*bot_, a)) throw LatticeError("bottom not least");
  if (top_)
    for (int a = 0; a < n; ++a)
      if (!leq(a, *top_)) throw LatticeError("top not greatest");
  if (kind_ == LatticeKind::BA) {
    if ((int)compl_.size() != n) throw LatticeError("BA without complement table");
    for (int a = 0; a < n; ++a) {
      if (meet(a, compl_[a]) != *bot_) throw LatticeError("a AND not a != bottom");
      if (join(a, compl_[a]) != *top_) throw LatticeError("a OR not a != top");
    }
  }
}

FinLattice FinLattice::from_tables(LatticeKind kind, std::vector<std::string> names,
                                   std::vector<Bits> up_rows, bool validate) {
  FinLattice l = from_order(kind, std::move(names), std::move(up_rows));
  if (validate) l.validate_tables();
  return l;
}

FinLattice FinLattice::from_order(LatticeKind kind, std::vector<std::string> names,
                                  std::vector<Bits> up_rows) {
  FinLattice l;
  l.mode_ = Mode::Tables;
  l.kind_ = kind;
  l.names_ = std::move(names);
  l.up_ = std::move(up_rows);
  int n = (int)l.names_.size();
  if (n == 0) throw LatticeError("empty carrier");
  l.meet_.assign((size_t)n * n, -1);
  l.join_.assign((size_t)n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int glb = -1, lub = -1;
      for (int c = 0; c < n; ++c) {
        if (l.up_[c].test(a) && l.up_[c].test(b)) // c <= a, c <= b
          if (glb < 0 || l.up_[glb].test(c)) glb = c;
        if (l.up_[a].test(c) && l.up_[b].test(c))
          if (lub < 0 || l.up_[c].test(lub)) lub = c;
      }
      if (glb < 0 || lub < 0) throw LatticeError("order is not a lattice");
      // verify extremality
      for (int c = 0; c < n; ++c) {
        if (l.up_[c].test(a) && l.up_[c].test(b) && !l.up_[c].test(glb))
          throw LatticeError("no greatest lower bound");
        if (l.up_[a].test(c) && l.up_[b].test(c) && !l.up_[lub].test(c))
          throw LatticeError("no least upper bound");
      }
      l.meet_[(size_t)a * n + b] = glb;
      l.join_[(size_t)a * n + b] = lub;
    }
  for (int c = 0; c < n; ++c) {
    bool least = true, greatest = true;
    for (int a = 0; a < n; ++a) {
      if (!l.up_[c].test(a)) least = false;
      if (!l.up_[a].test(c)) greatest = false;
    }
    if (least) l.bot_ = c;
    if (greatest) l.top_ = c;
  }
  if (kind == LatticeKind::BA) {
    if (!l.bot_ || !l.top_) throw LatticeError("BA without bounds");
    l.compl_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (l.meet(a, b) == *l.bot_ && l.join(a, b) == *l.top_) {
          l.compl_[a] = b;
          break;
        }
      if (l.compl_[a] < 0) throw LatticeError("element without complement on BA host");
    }
  }
  return l;
}

FinLattice FinLattice::powerset(int base_points) {
  if (base_points < 0 || base_points > 20) throw LatticeError("powerset base out of range");
  FinLattice l;
  l.mode_ = Mode::Powerset;
  l.kind_ = LatticeKind::BA;
  l.base_ = base_points;
  return l;
}

FinLattice FinLattice::chain(int n, LatticeKind kind) {
  std::vector<std::string> names;
  std::vector<Bits> up;
  for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    Bits b(n);
    for (int j = i; j < n; ++j) b.set(j);
    up.push_back(b);
  }
  return from_tables(kind, names, up);
}

bool FilterLike::check() const {
  if (!host) return false;
  switch (flavor) {
    case FilterFlavor::Filter: return host->is_filter(members);
    case FilterFlavor::Ideal: return host->is_ideal(members);
    case FilterFlavor::PrimeFilter: return host->is_prime_filter(members);
    case FilterFlavor::Ultrafilter: return host->is_ultrafilter(members);
  }
  return false;
}

// ------------------------------------------------------------- operations

FinLattice downset_lattice(const FinPoset& p) {
  auto downs = p.all_down_sets();
  std::sort(downs.begin(), downs.end(), [](const Bits& a, const Bits& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  int n = (int)downs.size();
  std::vector<std::string> names;
  std::vector<Bits> up;
  for (int i = 0; i < n; ++i) {
    std::string s = "{";
    bool first = true;
    downs[i].for_each([&](int e) {
      if (!first) s += ",";
      s += p.name(e);
      first = false;
    });
    names.push_back(s + "}");
  }
  for (int i = 0; i < n; ++i) {
    Bits b(n);
    for (int j = 0; j < n; ++j)
      if (downs[i].subset_of(downs[j])) b.set(j);
    up.push_back(b);
  }
  return FinLattice::from_tables(LatticeKind::BDL, names, up);
}

FinLattice upset_lattice(const FinPoset& p) { return downset_lattice(p.order_dual()); }

PrimeFilters prime_filters(const FinLattice& a) {
  PrimeFilters out;
  // Prime filters of a finite DL are the principal up-sets of join
  // irreducibles. Deterministic order: by carrier index of the irreducible.
  auto ji = a.join_irreducibles();
  std::vector<Bits> pfs;
  for (int j : ji) pfs.push_back(a.principal_filter(j));
  // they should all be prime; double-check
  for (auto& f : pfs)
    if (!a.is_prime_filter(f)) throw LatticeError("internal: non-prime principal filter");
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> le;
  for (size_t i = 0; i < pfs.size(); ++i) names.push_back("p" + std::to_string(i));
  // reverse set-theoretic ordering: p <= q iff q subset of p
  for (size_t i = 0; i < pfs.size(); ++i)
    for (size_t j = 0; j < pfs.size(); ++j)
      if (i != j && pfs[j].subset_of(pfs[i])) le.push_back({(int)i, (int)j});
  out.poset = FinPoset(names, le);
  for (auto& f : pfs) {
    FilterLike fl;
    fl.host = &a;
    fl.members = f;
    fl.flavor = a.kind() == LatticeKind::BA ? FilterFlavor::Ultrafilter : FilterFlavor::PrimeFilter;
    out.filters.push_back(fl);
  }
  return out;
}

DualityWitness birkhoff_roundtrip(const FinLattice& a) {
  if (!a.bounded()) throw LatticeError("birkhoff_roundtrip needs a bounded host");
  DualityWitness w;
  PrimeFilters pf;
  try {
    pf = prime_filters(a);
  } catch (const LatticeError&) {
    // join-irreducibles whose principal filters are not prime only exist on
    // non-distributive tables
    throw LatticeError("NON-DISTRIBUTIVE");
  }
  w.dual = pf.poset;
  int n = a.size(), k = (int)pf.filters.size();
  for (int x = 0; x < n; ++x) {
    Bits e(k);
    for (int i = 0; i < k; ++i)
      if (pf.filters[i].members.test(x)) e.set(i);
    w.eta.push_back(e);
  }
  // eta lands in down-sets of the dual poset; check hom + injectivity + onto
  auto downs = w.dual.all_down_sets();
  std::map<Bits, int> dindex;
  for (size_t i = 0; i < downs.size(); ++i) dindex[downs[i]] = (int)i;
  std::vector<bool> hit(downs.size(), false);
  bool iso = ((int)downs.size() == n);
  for (int x = 0; x < n && iso; ++x) {
    auto it = dindex.find(w.eta[x]);
    if (it == dindex.end()) {
      iso = false;
      break;
    }
    if (hit[it->second]) iso = false; // not injective
    hit[it->second] = true;
  }
  for (int x = 0; x < n && iso; ++x)
    for (int y = 0; y < n; ++y) {
      if ((w.eta[x] & w.eta[y]) != w.eta[a.meet(x, y)]) iso = false;
      if ((w.eta[x] | w.eta[y]) != w.eta[a.join(x, y)]) iso = false;
    }
  if (iso && a.kind() == LatticeKind::BA)
    for (int x = 0; x < n && iso; ++x)
      if (w.eta[x].complemented() != w.eta[a.complement(x)]) iso = false;
  if (!iso) throw LatticeError("NON-DISTRIBUTIVE");
  w.is_isomorphism = true;
  auto ji = a.join_irreducibles();
  for (size_t i = 0; i < ji.size(); ++i) {
    // pairing: the i-th prime filter is the principal filter of ji[i]
    w.ji_pf.push_back({ji[i], (int)i});
  }
  return w;
}

FreeBa free_ba(const std::vector<std::string>& generators, int cap) {
  int n = (int)generators.size();
  if (n > cap) throw BudgetExceeded("CAP-EXCEEDED: free_ba generators over cap");
  FreeBa out;
  out.algebra = FinLattice::powerset(1 << n); // 2^n valuations as base points
  out.generator_names = generators;
  // generator i's truth set: valuations v (bitmask over generators) with bit i
  for (int i = 0; i < n; ++i) {
    int mask = 0;
    for (int v = 0; v < (1 << n); ++v)
      if ((v >> i) & 1) mask |= 1 << v;
    out.generator_elements.push_back(mask);
  }
  return out;
}

Quotient quotient_ba(const FinLattice& a, const std::vector<std::pair<int, int>>& pairs) {
  if (a.is_powerset_mode()) {
    // quotient by the principal ideal of d collapses the base points inside d
    int d = 0;
    for (auto [x, y] : pairs) d |= x ^ y;
    std::vector<int> keep;
    for (int i = 0; i < a.powerset_base(); ++i)
      if (!((d >> i) & 1)) keep.push_back(i);
    Quotient q;
    q.algebra = FinLattice::powerset((int)keep.size());
    q.proj.assign(a.size(), 0);
    for (int x = 0; x < a.size(); ++x) {
      int r = 0;
      for (size_t k = 0; k < keep.size(); ++k)
        if ((x >> keep[k]) & 1) r |= 1 << k;
      q.proj[x] = r;
    }
    return q;
  }
  if (a.kind() == LatticeKind::BA) {
    // Congruences of a finite BA are principal: a == b iff a xor b <= d.
    int d = *a.bottom();
    for (auto [x, y] : pairs) {
      int sym = a.join(a.meet(x, a.complement(y)), a.meet(y, a.complement(x)));
      d = a.join(d, sym);
    }
    int nd = a.complement(d);
    // representatives: x & ~d, i.e. the interval [bot, ~d]
    std::vector<int> reps;
    std::map<int, int> idx;
    std::vector<int> proj(a.size(), -1);
    for (int x = 0; x < a.size(); ++x) {
      int r = a.meet(x, nd);
      auto it = idx.find(r);
      if (it == idx.end()) {
        idx[r] = (int)reps.size();
        reps.push_back(r);
      }
      proj[x] = idx[r];
    }
    int m = (int)reps.size();
    std::vector<std::string> names;
    std::vector<Bits> up;
    for (int i = 0; i < m; ++i) names.push_back("[" + a.name(reps[i]) + "]");
    for (int i = 0; i < m; ++i) {
      Bits b(m);
      for (int j = 0; j < m; ++j)
        if (a.leq(reps[i], reps[j])) b.set(j);
      up.push_back(b);
    }
    Quotient q;
    q.algebra = FinLattice::from_tables(LatticeKind::BA, names, up);
    q.proj = proj;
    return q;
  }
  // bounded DL: iterate the congruence closure (union-find + operation
  // compatibility until fixpoint); hosts here are small by construction
  int n = a.size();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  for (auto [x, y] : pairs) unite(x, y);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (find(x) != find(y)) continue;
        for (int z = 0; z < n; ++z) {
          if (find(a.meet(x, z)) != find(a.meet(y, z))) {
            unite(a.meet(x, z), a.meet(y, z));
            changed = true;
          }
          if (find(a.join(x, z)) != find(a.join(y, z))) {
            unite(a.join(x, z), a.join(y, z));
            changed = true;
          }
        }
      }
  }
  std::map<int, int> idx;
  std::vector<int> reps;
  std::vector<int> proj(n, -1);
  for (int x = 0; x < n; ++x) {
    int r = find(x);
    if (!idx.count(r)) {
      idx[r] = (int)reps.size();
      reps.push_back(r);
    }
    proj[x] = idx[r];
  }
  int m = (int)reps.size();
  std::vector<std::string> names;
  std::vector<Bits> up;
  for (int i = 0; i < m; ++i) names.push_back("[" + a.name(reps[i]) + "]");
  for (int i = 0; i < m; ++i) {
    Bits b(m);
    for (int j = 0; j < m; ++j) {
      // class order: exists x in class i, y in class j with x <= y; on
      // congruence quotients this is the standard quotient order via meet
      if (find(a.meet(reps[i], reps[j])) == find(reps[i])) b.set(j);
    }
    up.push_back(b);
  }
  Quotient q;
  q.algebra = FinLattice::from_tables(a.kind(), names, up);
  q.proj = proj;
  return q;
}

} // namespace coalcan
