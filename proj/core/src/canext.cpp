#include "coalcan/canext.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coalcan {

std::string prop_name(PropBit p) {
  switch (p) {
    case P_ISO: return "isotone";
    case P_MEET: return "meets";
    case P_JOIN: return "joins";
    case P_DDMEET: return "dd-meets";
    case P_UDJOIN: return "ud-joins";
    case A_ISO: return "antitone";
    case A_MEET: return "anti-meets";
    case A_JOIN: return "anti-joins";
    case A_DDMEET: return "anti-dd-meets";
    case A_UDJOIN: return "anti-ud-joins";
  }
  return "?";
}

std::string props_to_string(uint16_t flags) {
  std::string s;
  for (auto p : kPropOrder)
    if (flags & p) {
      if (!s.empty()) s += ",";
      s += prop_name(p);
    }
  return s.empty() ? "none" : s;
}

uint16_t prop_from_name(const std::string& s) {
  for (auto p : kPropOrder)
    if (prop_name(p) == s) return p;
  return 0;
}

// ------------------------------------------------------------- dense/compact

bool DenseCompactPair::sub_closed_under_ops() const {
  auto& a = *ambient;
  bool ok = !sub.empty();
  if (auto b = a.bottom(); !b || !sub.test(*b)) ok = false;
  if (auto t = a.top(); !t || !sub.test(*t)) ok = false;
  if (!ok) return false;
  sub.for_each([&](int x) {
    sub.for_each([&](int y) {
      if (!sub.test(a.meet(x, y)) || !sub.test(a.join(x, y))) ok = false;
    });
    if (a.kind() == LatticeKind::BA && !sub.test(a.complement(x))) ok = false;
  });
  return ok;
}

static Bits meet_closure(const FinLattice& a, Bits s) {
  s.set(*a.top()); // empty meet
  bool changed = true;
  while (changed) {
    changed = false;
    auto v = s.to_vector();
    for (int x : v)
      for (int y : v) {
        int m = a.meet(x, y);
        if (!s.test(m)) {
          s.set(m);
          changed = true;
        }
      }
  }
  return s;
}

static Bits join_closure(const FinLattice& a, Bits s) {
  s.set(*a.bottom());
  bool changed = true;
  while (changed) {
    changed = false;
    auto v = s.to_vector();
    for (int x : v)
      for (int y : v) {
        int j = a.join(x, y);
        if (!s.test(j)) {
          s.set(j);
          changed = true;
        }
      }
  }
  return s;
}

ClosedOpen closed_open_elements(const DenseCompactPair& pair) {
  ClosedOpen co;
  co.closed = meet_closure(*pair.ambient, pair.sub);
  co.open = join_closure(*pair.ambient, pair.sub);
  return co;
}

bool DenseCompactPair::is_dense() const {
  auto co = closed_open_elements(*this);
  Bits ok = join_closure(*ambient, co.closed); // O(K(A))
  Bits ko = meet_closure(*ambient, co.open);   // K(O(A))
  return ok.count() == ambient->size() && ko.count() == ambient->size();
}

bool DenseCompactPair::is_compact() const {
  auto co = closed_open_elements(*this);
  bool ok = true;
  co.closed.for_each([&](int p) {
    co.open.for_each([&](int u) {
      if (!ambient->leq(p, u)) return;
      bool wit = false;
      sub.for_each([&](int a) {
        if (ambient->leq(p, a) && ambient->leq(a, u)) wit = true;
      });
      if (!wit) ok = false;
    });
  });
  return ok;
}

DenseCompactPair DenseCompactPair::whole(const FinLattice& a) {
  DenseCompactPair p;
  p.ambient = &a;
  p.sub = Bits::full(a.size());
  return p;
}

// ------------------------------------------------------------------- tables

size_t MapTable::tuples() const {
  size_t t = 1;
  for (int i = 0; i < arity; ++i) t *= (size_t)n();
  return t;
}

static size_t flat_index(const std::vector<int>& xs, int base) {
  size_t idx = 0;
  for (int x : xs) idx = idx * base + (size_t)x;
  return idx;
}

int MapTable::at(const std::vector<int>& xs) const { return table[flat_index(xs, n())]; }
void MapTable::set_at(const std::vector<int>& xs, int v) { table[flat_index(xs, n())] = v; }

int AmbientMap::at(const std::vector<int>& xs) const { return table[flat_index(xs, ambient->size())]; }
void AmbientMap::set_at(const std::vector<int>& xs, int v) { table[flat_index(xs, ambient->size())] = v; }

bool MapTable::total_on_sub() const {
  for (TupleIter it(n(), arity); !it.done; it.next()) {
    bool in_sub = true;
    for (int x : *it)
      if (!pair.sub.test(x)) in_sub = false;
    if (in_sub && (at(*it) < 0 || !pair.sub.test(at(*it)))) return false;
  }
  return true;
}

bool MapTable::tonicity_holds() const {
  auto& a = *pair.ambient;
  for (int arg = 0; arg < arity; ++arg) {
    if (tonicity[arg] == Tonicity::None) continue;
    for (TupleIter it(n(), arity); !it.done; it.next()) {
      bool in_sub = true;
      for (int x : *it)
        if (!pair.sub.test(x)) in_sub = false;
      if (!in_sub) continue;
      auto ys = *it;
      for (int y = 0; y < n(); ++y) {
        if (!pair.sub.test(y) || !a.leq((*it)[arg], y)) continue;
        ys[arg] = y;
        int fa = at(*it), fb = at(ys);
        if (tonicity[arg] == Tonicity::Iso && !a.leq(fa, fb)) return false;
        if (tonicity[arg] == Tonicity::Anti && !a.leq(fb, fa)) return false;
      }
    }
  }
  return true;
}

MapTable MapTable::identity(const DenseCompactPair& p) {
  MapTable f;
  f.pair = p;
  f.arity = 1;
  f.tonicity = {Tonicity::Iso};
  f.table.assign(p.ambient->size(), -1);
  p.sub.for_each([&](int x) { f.table[x] = x; });
  return f;
}

MapTable MapTable::constant(const DenseCompactPair& p, int c, int arity) {
  MapTable f;
  f.pair = p;
  f.arity = arity;
  f.tonicity.assign(arity, Tonicity::Iso);
  f.table.assign(f.tuples(), -1);
  for (TupleIter it(p.ambient->size(), arity); !it.done; it.next()) {
    bool in_sub = true;
    for (int x : *it)
      if (!p.sub.test(x)) in_sub = false;
    if (in_sub) f.set_at(*it, c);
  }
  return f;
}

MapTable MapTable::binary_meet(const DenseCompactPair& p) {
  MapTable f;
  f.pair = p;
  f.arity = 2;
  f.tonicity = {Tonicity::Iso, Tonicity::Iso};
  f.table.assign(f.tuples(), -1);
  p.sub.for_each([&](int x) { p.sub.for_each([&](int y) { f.set_at({x, y}, p.ambient->meet(x, y)); }); });
  return f;
}

MapTable MapTable::binary_join(const DenseCompactPair& p) {
  MapTable f = binary_meet(p);
  p.sub.for_each([&](int x) { p.sub.for_each([&](int y) { f.set_at({x, y}, p.ambient->join(x, y)); }); });
  return f;
}

MapTable MapTable::negation(const DenseCompactPair& p) {
  MapTable f;
  f.pair = p;
  f.arity = 1;
  f.tonicity = {Tonicity::Anti};
  f.table.assign(p.ambient->size(), -1);
  p.sub.for_each([&](int x) { f.table[x] = p.ambient->complement(x); });
  return f;
}

// ------------------------------------------------------------------ sigma/pi

SigmaPi sigma_pi_extension(const MapTable& f) {
  auto& a = *f.pair.ambient;
  int n = a.size();
  auto co = closed_open_elements(f.pair);
  auto K = co.closed.to_vector();
  auto O = co.open.to_vector();

  SigmaPi out;
  out.sigma.ambient = &a;
  out.sigma.arity = f.arity;
  out.sigma.table.assign(f.tuples(), -1);
  out.pi = out.sigma;

  std::vector<std::vector<int>> boxesK, boxesO;
  for (TupleIter dk((int)K.size(), f.arity); !dk.done; dk.next()) boxesK.push_back(*dk);
  for (TupleIter uo((int)O.size(), f.arity); !uo.done; uo.next()) boxesO.push_back(*uo);

  // meet/join of f over each nonempty box [d,u] of sub tuples
  std::map<std::pair<size_t, size_t>, std::pair<int, int>> box;
  for (size_t di = 0; di < boxesK.size(); ++di)
    for (size_t ui = 0; ui < boxesO.size(); ++ui) {
      bool sane = true;
      for (int i = 0; i < f.arity; ++i)
        if (!a.leq(K[boxesK[di][i]], O[boxesO[ui][i]])) sane = false;
      if (!sane) continue;
      int mv = -1, jv = -1;
      for (TupleIter at(n, f.arity); !at.done; at.next()) {
        bool in = true;
        for (int i = 0; i < f.arity && in; ++i) {
          int x = (*at)[i];
          if (!f.pair.sub.test(x) || !a.leq(K[boxesK[di][i]], x) || !a.leq(x, O[boxesO[ui][i]]))
            in = false;
        }
        if (!in) continue;
        int v = f.at(*at);
        if (v < 0) continue;
        mv = mv < 0 ? v : a.meet(mv, v);
        jv = jv < 0 ? v : a.join(jv, v);
      }
      if (mv >= 0) box[{di, ui}] = {mv, jv};
    }

  for (TupleIter xt(n, f.arity); !xt.done; xt.next()) {
    int sig = -1, pi = -1;
    for (size_t di = 0; di < boxesK.size(); ++di) {
      bool below = true;
      for (int i = 0; i < f.arity && below; ++i)
        if (!a.leq(K[boxesK[di][i]], (*xt)[i])) below = false;
      if (!below) continue;
      for (size_t ui = 0; ui < boxesO.size(); ++ui) {
        bool above = true;
        for (int i = 0; i < f.arity && above; ++i)
          if (!a.leq((*xt)[i], O[boxesO[ui][i]])) above = false;
        if (!above) continue;
        auto it = box.find({di, ui});
        if (it == box.end()) continue;
        sig = sig < 0 ? it->second.first : a.join(sig, it->second.first);
        pi = pi < 0 ? it->second.second : a.meet(pi, it->second.second);
      }
    }
    out.sigma.set_at(*xt, sig < 0 ? *a.bottom() : sig);
    out.pi.set_at(*xt, pi < 0 ? *a.top() : pi);
  }
  return out;
}

// ---------------------------------------------------------------- properties

namespace {

struct SliceView {
  const FinLattice* a;
  const std::vector<int>* table;
  int base, arity, arg;
  std::vector<int> fixed;
  int eval(int x) const {
    size_t idx = 0;
    int j = 0;
    for (int i = 0; i < arity; ++i) {
      int v = i == arg ? x : fixed[j++];
      idx = idx * base + (size_t)v;
    }
    return (*table)[idx];
  }
};

template <typename Fn>
void for_each_slice(const FinLattice& a, const Bits& sub, int arity, int arg,
                    const std::vector<int>& table, Fn body) {
  SliceView sv{&a, &table, a.size(), arity, arg, {}};
  std::vector<int> subv = sub.to_vector();
  int others = arity - 1;
  std::vector<int> idx(others, 0);
  while (true) {
    sv.fixed.clear();
    for (int i = 0; i < others; ++i) sv.fixed.push_back(subv[idx[i]]);
    body(sv);
    int i = others - 1;
    for (; i >= 0; --i) {
      if (++idx[i] < (int)subv.size()) break;
      idx[i] = 0;
    }
    if (i < 0) break;
  }
}

bool up_directed_vec(const FinLattice& a, const std::vector<int>& xs) {
  for (int x : xs)
    for (int y : xs) {
      bool ub = false;
      for (int z : xs)
        if (a.leq(x, z) && a.leq(y, z)) ub = true;
      if (!ub) return false;
    }
  return true;
}

bool down_directed_vec(const FinLattice& a, const std::vector<int>& xs) {
  for (int x : xs)
    for (int y : xs) {
      bool lb = false;
      for (int z : xs)
        if (a.leq(z, x) && a.leq(z, y)) lb = true;
      if (!lb) return false;
    }
  return true;
}

} // namespace

static PropertyProfile detect_impl(const FinLattice& a, const Bits& sub, int arity,
                                   const std::vector<int>& table) {
  PropertyProfile p;
  p.arg_flags.assign(arity, 0);
  p.min_k_additive.assign(arity, -1);
  p.min_k_multiplicative.assign(arity, -1);
  p.min_anti_k_additive.assign(arity, -1);
  p.min_anti_k_multiplicative.assign(arity, -1);

  auto subv = sub.to_vector();
  int m = (int)subv.size();
  if (m > 16) throw BudgetExceeded("detect_properties: sub too large");

  for (int arg = 0; arg < arity; ++arg) {
    bool iso = true, anti = true, pj = true, pm = true, aj = true, am = true;
    bool pudj = true, pddm = true, audj = true, addm = true;
    std::vector<bool> kadd(m + 1, true), kmul(m + 1, true), akadd(m + 1, true), akmul(m + 1, true);

    for_each_slice(a, sub, arity, arg, table, [&](const SliceView& sv) {
      for (int x : subv)
        for (int y : subv) {
          int fx = sv.eval(x), fy = sv.eval(y);
          if (a.leq(x, y)) {
            if (!a.leq(fx, fy)) iso = false;
            if (!a.leq(fy, fx)) anti = false;
          }
          int fj = sv.eval(a.join(x, y)), fm = sv.eval(a.meet(x, y));
          if (fj != a.join(fx, fy)) pj = false;
          if (fm != a.meet(fx, fy)) pm = false;
          if (fj != a.meet(fx, fy)) aj = false;
          if (fm != a.join(fx, fy)) am = false;
        }
      for (uint32_t msk = 1; msk < (1u << m); ++msk) {
        std::vector<int> xs;
        for (int i = 0; i < m; ++i)
          if ((msk >> i) & 1) xs.push_back(subv[i]);
        int jAll = -1, mAll = -1, joinF = -1, meetF = -1;
        for (int x : xs) {
          jAll = jAll < 0 ? x : a.join(jAll, x);
          mAll = mAll < 0 ? x : a.meet(mAll, x);
          int v = sv.eval(x);
          joinF = joinF < 0 ? v : a.join(joinF, v);
          meetF = meetF < 0 ? v : a.meet(meetF, v);
        }
        int fj = sv.eval(jAll), fm = sv.eval(mAll);
        if (up_directed_vec(a, xs)) {
          if (fj != joinF) pudj = false;
          if (fj != meetF) audj = false;
        }
        if (down_directed_vec(a, xs)) {
          if (fm != meetF) pddm = false;
          if (fm != joinF) addm = false;
        }
        for (int k = 1; k <= m; ++k) {
          if (!kadd[k] && !kmul[k] && !akadd[k] && !akmul[k]) continue;
          int addJ = -1, mulM = -1, aAddM = -1, aMulJ = -1;
          for (uint32_t vm = 0; vm < (1u << xs.size()); ++vm) {
            if (__builtin_popcount(vm) > k) continue;
            int jv = -1, mv = -1;
            for (size_t i = 0; i < xs.size(); ++i)
              if ((vm >> i) & 1) {
                jv = jv < 0 ? xs[i] : a.join(jv, xs[i]);
                mv = mv < 0 ? xs[i] : a.meet(mv, xs[i]);
              }
            if (jv < 0) jv = *a.bottom();
            if (mv < 0) mv = *a.top();
            int fjv = sv.eval(jv), fmv = sv.eval(mv);
            addJ = addJ < 0 ? fjv : a.join(addJ, fjv);
            mulM = mulM < 0 ? fmv : a.meet(mulM, fmv);
            aAddM = aAddM < 0 ? fmv : a.meet(aAddM, fmv);
            aMulJ = aMulJ < 0 ? fjv : a.join(aMulJ, fjv);
          }
          if (fj != addJ) kadd[k] = false;
          if (fm != mulM) kmul[k] = false;
          if (fj != aAddM) akadd[k] = false;
          if (fm != aMulJ) akmul[k] = false;
        }
      }
    });

    uint16_t flags = 0;
    if (iso) flags |= P_ISO;
    if (anti) flags |= A_ISO;
    if (pj) flags |= P_JOIN;
    if (pm) flags |= P_MEET;
    if (aj) flags |= A_JOIN;
    if (am) flags |= A_MEET;
    if (pudj) flags |= P_UDJOIN;
    if (pddm) flags |= P_DDMEET;
    if (audj) flags |= A_UDJOIN;
    if (addm) flags |= A_DDMEET;
    p.arg_flags[arg] = flags;
    for (int k = 1; k <= m; ++k) {
      if (kadd[k] && p.min_k_additive[arg] < 0) p.min_k_additive[arg] = k;
      if (kmul[k] && p.min_k_multiplicative[arg] < 0) p.min_k_multiplicative[arg] = k;
      if (akadd[k] && p.min_anti_k_additive[arg] < 0) p.min_anti_k_additive[arg] = k;
      if (akmul[k] && p.min_anti_k_multiplicative[arg] < 0) p.min_anti_k_multiplicative[arg] = k;
    }
  }

  if (arity == 1) {
    bool exp = true, con = true, idem = true;
    for (int x : sub.to_vector()) {
      int fx = table[x];
      if (!a.leq(x, fx)) exp = false;
      if (!a.leq(fx, x)) con = false;
      if (fx >= 0 && sub.test(fx) && table[fx] != fx) idem = false;
    }
    p.expanding = exp;
    p.contracting = con;
    p.idempotent = idem;
  }
  return p;
}

PropertyProfile detect_properties(const MapTable& f) {
  return detect_impl(*f.pair.ambient, f.pair.sub, f.arity, f.table);
}

PropertyProfile detect_properties(const AmbientMap& f, const Bits& domain_sub) {
  return detect_impl(*f.ambient, domain_sub, f.arity, f.table);
}

// ---------------------------------------------------------------- topologies

std::string topology_name(TopologyName t) {
  switch (t) {
    case TopologyName::SigmaUp: return "sigma-up";
    case TopologyName::SigmaDown: return "sigma-down";
    case TopologyName::Sigma: return "sigma";
    case TopologyName::GammaUp: return "gamma-up";
    case TopologyName::GammaDown: return "gamma-down";
    case TopologyName::Gamma: return "gamma";
  }
  return "?";
}

bool TopologyFamily::is_open(const Bits& s) const {
  for (auto& o : opens)
    if (o == s) return true;
  return false;
}

Bits TopologyFamily::min_open(int x) const {
  Bits acc = Bits::full(host->size());
  for (auto& o : opens)
    if (o.test(x)) acc &= o;
  return acc;
}

const TopologyFamily& Topologies::get(TopologyName t) const {
  switch (t) {
    case TopologyName::SigmaUp: return sigma_up;
    case TopologyName::SigmaDown: return sigma_down;
    case TopologyName::Sigma: return sigma;
    case TopologyName::GammaUp: return gamma_up;
    case TopologyName::GammaDown: return gamma_down;
    case TopologyName::Gamma: return gamma;
  }
  return sigma;
}

Topologies topologies(const DenseCompactPair& pair) {
  auto& a = *pair.ambient;
  int n = a.size();
  if (n > 16) throw BudgetExceeded("topologies: host too large");
  auto co = closed_open_elements(pair);
  auto K = co.closed.to_vector();
  auto O = co.open.to_vector();

  auto all_subsets = [&](auto member_ok) {
    std::vector<Bits> out;
    for (uint32_t m = 0; m < (1u << n); ++m) {
      Bits s(n);
      for (int i = 0; i < n; ++i)
        if ((m >> i) & 1) s.set(i);
      if (member_ok(s)) out.push_back(s);
    }
    return out;
  };

  Topologies t;
  t.sigma_up.host = t.sigma_down.host = t.sigma.host = &a;
  t.gamma_up.host = t.gamma_down.host = t.gamma.host = &a;
  t.sigma_up.name = TopologyName::SigmaUp;
  t.sigma_down.name = TopologyName::SigmaDown;
  t.sigma.name = TopologyName::Sigma;
  t.gamma_up.name = TopologyName::GammaUp;
  t.gamma_down.name = TopologyName::GammaDown;
  t.gamma.name = TopologyName::Gamma;

  t.sigma_up.opens = all_subsets([&](const Bits& s) {
    bool ok = true;
    s.for_each([&](int x) {
      bool covered = false;
      for (int p : K)
        if (a.leq(p, x) && a.principal_filter(p).subset_of(s)) covered = true;
      if (!covered) ok = false;
    });
    return ok;
  });
  t.sigma_down.opens = all_subsets([&](const Bits& s) {
    bool ok = true;
    s.for_each([&](int x) {
      bool covered = false;
      for (int u : O)
        if (a.leq(x, u) && a.principal_ideal(u).subset_of(s)) covered = true;
      if (!covered) ok = false;
    });
    return ok;
  });
  t.sigma.opens = all_subsets([&](const Bits& s) {
    bool ok = true;
    s.for_each([&](int x) {
      bool covered = false;
      for (int p : K) {
        if (!a.leq(p, x)) continue;
        for (int u : O) {
          if (!a.leq(x, u)) continue;
          Bits bx = a.principal_filter(p) & a.principal_ideal(u);
          if (bx.subset_of(s)) covered = true;
        }
      }
      if (!covered) ok = false;
    });
    return ok;
  });

  std::vector<std::pair<Bits, int>> up_dir, down_dir;
  for (uint32_t m = 1; m < (1u << n); ++m) {
    Bits s(n);
    std::vector<int> xs;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1) {
        s.set(i);
        xs.push_back(i);
      }
    if (up_directed_vec(a, xs)) up_dir.push_back({s, a.join_of(s)});
    if (down_directed_vec(a, xs)) down_dir.push_back({s, a.meet_of(s)});
  }
  t.gamma_up.opens = all_subsets([&](const Bits& s) {
    bool ok = true;
    s.for_each([&](int x) {
      if (!a.principal_filter(x).subset_of(s)) ok = false;
    });
    if (!ok) return false;
    for (auto& [d, j] : up_dir)
      if (s.test(j) && !d.intersects(s)) return false;
    return true;
  });
  t.gamma_down.opens = all_subsets([&](const Bits& s) {
    bool ok = true;
    s.for_each([&](int x) {
      if (!a.principal_ideal(x).subset_of(s)) ok = false;
    });
    if (!ok) return false;
    for (auto& [d, mm] : down_dir)
      if (s.test(mm) && !d.intersects(s)) return false;
    return true;
  });
  {
    std::set<Bits> basics;
    for (auto& u : t.gamma_up.opens)
      for (auto& v : t.gamma_down.opens) basics.insert(u & v);
    t.gamma.opens = all_subsets([&](const Bits& s) {
      bool ok = true;
      s.for_each([&](int x) {
        bool covered = false;
        for (auto& b : basics)
          if (b.test(x) && b.subset_of(s)) covered = true;
        if (!covered) ok = false;
      });
      return ok;
    });
  }
  return t;
}

bool is_continuous(const AmbientMap& f, const std::vector<const TopologyFamily*>& from,
                   const TopologyFamily& to) {
  int n = f.ambient->size();
  std::vector<std::vector<Bits>> mo(from.size());
  for (size_t i = 0; i < from.size(); ++i)
    for (int x = 0; x < n; ++x) mo[i].push_back(from[i]->min_open(x));
  for (auto& o : to.opens) {
    for (TupleIter it(n, f.arity); !it.done; it.next()) {
      if (!o.test(f.at(*it))) continue;
      std::vector<std::vector<int>> ranges;
      for (int i = 0; i < f.arity; ++i) ranges.push_back(mo[i][(*it)[i]].to_vector());
      bool inside = true;
      std::vector<size_t> idx(f.arity, 0);
      while (inside) {
        std::vector<int> ys(f.arity);
        for (int i = 0; i < f.arity; ++i) ys[i] = ranges[i][idx[i]];
        if (!o.test(f.at(ys))) inside = false;
        int i = f.arity - 1;
        for (; i >= 0; --i) {
          if (++idx[i] < ranges[i].size()) break;
          idx[i] = 0;
        }
        if (i < 0) break;
      }
      if (!inside) return false;
    }
  }
  return true;
}

// ----------------------------------------------------- composition comparison

CompositionReport compose_and_compare(const MapTable& g, const std::vector<MapTable>& fs) {
  auto& a = *g.pair.ambient;
  if ((int)fs.size() != g.arity) throw InputError("compose_and_compare: arity mismatch");
  if (!g.tonicity_holds()) throw Rejection("TONICITY-VIOLATION: outer map");
  for (auto& f : fs)
    if (!f.tonicity_holds()) throw Rejection("TONICITY-VIOLATION: inner map");

  int total = 0;
  for (auto& f : fs) total += f.arity;
  MapTable h;
  h.pair = g.pair;
  h.arity = total;
  h.tonicity.assign(total, Tonicity::None);
  {
    int off = 0;
    for (auto& f : fs)
      for (int i = 0; i < f.arity; ++i) h.tonicity[off++] = f.tonicity[i];
  }
  h.table.assign(h.tuples(), -1);
  for (TupleIter it(a.size(), total); !it.done; it.next()) {
    bool in_sub = true;
    for (int x : *it)
      if (!g.pair.sub.test(x)) in_sub = false;
    if (!in_sub) continue;
    std::vector<int> mids;
    int off = 0;
    for (auto& f : fs) {
      std::vector<int> args((*it).begin() + off, (*it).begin() + off + f.arity);
      mids.push_back(f.at(args));
      off += f.arity;
    }
    h.set_at(*it, g.at(mids));
  }

  auto hs = sigma_pi_extension(h);
  auto gs = sigma_pi_extension(g);
  std::vector<SigmaPi> fss;
  for (auto& f : fs) fss.push_back(sigma_pi_extension(f));

  CompositionReport rep;
  rep.pointwise_leq = true;
  rep.equal = true;
  for (TupleIter it(a.size(), total); !it.done; it.next()) {
    std::vector<int> mids;
    int off = 0;
    for (size_t k = 0; k < fs.size(); ++k) {
      std::vector<int> args((*it).begin() + off, (*it).begin() + off + fs[k].arity);
      mids.push_back(fss[k].sigma.at(args));
      off += fs[k].arity;
    }
    int lhs = hs.sigma.at(*it);
    int rhs = gs.sigma.at(mids);
    if (!a.leq(lhs, rhs)) rep.pointwise_leq = false;
    if (lhs != rhs) rep.equal = false;
  }

  auto tops = topologies(g.pair);
  const TopologyName names[6] = {TopologyName::SigmaUp,  TopologyName::SigmaDown, TopologyName::Sigma,
                                 TopologyName::GammaUp,  TopologyName::GammaDown, TopologyName::Gamma};
  auto search = [&](TopologyName target, std::vector<TopologyName>& choice) {
    choice.assign(fs.size(), TopologyName::Sigma);
    std::vector<std::vector<TopologyName>> ok(fs.size());
    for (size_t k = 0; k < fs.size(); ++k) {
      std::vector<const TopologyFamily*> from((size_t)fs[k].arity, &tops.sigma);
      for (auto nm : names)
        if (is_continuous(fss[k].sigma, from, tops.get(nm))) ok[k].push_back(nm);
    }
    std::vector<size_t> idx(fs.size(), 0);
    while (true) {
      std::vector<const TopologyFamily*> from;
      bool feasible = true;
      for (size_t k = 0; k < fs.size(); ++k) {
        if (ok[k].empty()) {
          feasible = false;
          break;
        }
        from.push_back(&tops.get(ok[k][idx[k]]));
      }
      if (!feasible) return false;
      if (is_continuous(gs.sigma, from, tops.get(target))) {
        for (size_t k = 0; k < fs.size(); ++k) choice[k] = ok[k][idx[k]];
        return true;
      }
      int k = (int)fs.size() - 1;
      for (; k >= 0; --k) {
        if (++idx[k] < ok[k].size()) break;
        idx[k] = 0;
      }
      if (k < 0) return false;
    }
  };
  rep.certified_upper = search(TopologyName::GammaUp, rep.upper_choice);
  rep.certified_lower = search(TopologyName::GammaDown, rep.lower_choice);
  rep.certified_equality = rep.certified_upper && rep.certified_lower;
  return rep;
}

} // namespace coalcan
