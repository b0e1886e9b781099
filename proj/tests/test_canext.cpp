#include "doctest.h"

#include "coalcan/canext.hpp"

using namespace coalcan;

namespace {
MapTable frame_diamond(const DenseCompactPair& p, const std::vector<Bits>& succ) {
  // powerset host over |succ| points: dia(U) = { w | succ(w) meets U }
  auto& a = *p.ambient;
  MapTable f;
  f.pair = p;
  f.arity = 1;
  f.tonicity = {Tonicity::Iso};
  f.table.assign(a.size(), -1);
  int pts = (int)succ.size();
  for (int u = 0; u < a.size(); ++u) {
    int out = 0;
    for (int w = 0; w < pts; ++w) {
      bool meets = false;
      succ[w].for_each([&](int v) {
        if ((u >> v) & 1) meets = true;
      });
      if (meets) out |= 1 << w;
    }
    f.table[u] = out;
  }
  return f;
}
} // namespace

TEST_CASE("closed and open elements") {
  SUBCASE("sub = ambient makes everything clopen") {
    auto l = FinLattice::powerset(2);
    auto p = DenseCompactPair::whole(l);
    auto co = closed_open_elements(p);
    CHECK(co.closed.count() == l.size());
    CHECK(co.open.count() == l.size());
    CHECK(p.valid());
  }
  SUBCASE("3-chain with sub the bounds only: K = O = bounds, pair not dense") {
    auto l = FinLattice::chain(3);
    DenseCompactPair p;
    p.ambient = &l;
    p.sub = Bits(3);
    p.sub.set(0);
    p.sub.set(2);
    auto co = closed_open_elements(p);
    CHECK(co.closed.count() == 2);
    CHECK(co.open.count() == 2);
    CHECK_FALSE(p.is_dense());
    CHECK(p.is_compact());
  }
}

TEST_CASE("sigma/pi extensions") {
  auto l = FinLattice::powerset(2);
  auto p = DenseCompactPair::whole(l);
  SUBCASE("on a whole pair both extensions restrict to f") {
    auto f = MapTable::negation(p);
    auto sp = sigma_pi_extension(f);
    for (int x = 0; x < l.size(); ++x) {
      CHECK(sp.sigma.table[x] == f.table[x]);
      CHECK(sp.pi.table[x] == f.table[x]);
    }
  }
  SUBCASE("constant maps extend to constants") {
    auto f = MapTable::constant(p, 2);
    auto sp = sigma_pi_extension(f);
    for (int x = 0; x < l.size(); ++x) CHECK(sp.sigma.table[x] == 2);
  }
  SUBCASE("binary meet extends to ambient meet") {
    auto f = MapTable::binary_meet(p);
    auto sp = sigma_pi_extension(f);
    for (int x = 0; x < l.size(); ++x)
      for (int y = 0; y < l.size(); ++y) CHECK(sp.sigma.at({x, y}) == l.meet(x, y));
  }
  SUBCASE("sigma <= pi pointwise, restriction is f, sigma = pi on K u O") {
    for (int base : {1, 2, 3}) {
      auto host = FinLattice::powerset(base);
      auto pair = DenseCompactPair::whole(host);
      int n = host.size();
      std::vector<MapTable> maps;
      maps.push_back(MapTable::identity(pair));
      maps.push_back(MapTable::negation(pair));
      for (int c = 0; c < n; ++c) maps.push_back(MapTable::constant(pair, c));
      for (auto& f : maps) {
        auto sp = sigma_pi_extension(f);
        for (int x = 0; x < n; ++x) {
          CHECK(host.leq(sp.sigma.table[x], sp.pi.table[x]));
          CHECK(sp.sigma.table[x] == f.table[x]);
          CHECK(sp.sigma.table[x] == sp.pi.table[x]); // K u O = carrier here
        }
      }
    }
  }
}

TEST_CASE("detect_properties") {
  auto l = FinLattice::powerset(2);
  auto p = DenseCompactPair::whole(l);
  SUBCASE("identity preserves joins and meets and is 1-additive") {
    auto prof = detect_properties(MapTable::identity(p));
    CHECK(prof.has(0, P_JOIN));
    CHECK(prof.has(0, P_MEET));
    CHECK(prof.min_k_additive[0] == 1);
    CHECK(prof.idempotent);
  }
  SUBCASE("negation anti-preserves joins and meets") {
    auto prof = detect_properties(MapTable::negation(p));
    CHECK(prof.has(0, A_JOIN));
    CHECK(prof.has(0, A_MEET));
    CHECK(prof.has(0, A_ISO));
    CHECK_FALSE(prof.has(0, P_ISO));
  }
  SUBCASE("graded diamond on a 2-point multiset frame is 2-additive, not 1-additive") {
    auto host = FinLattice::powerset(2);
    auto pr = DenseCompactPair::whole(host);
    MapTable f;
    f.pair = pr;
    f.arity = 1;
    f.tonicity = {Tonicity::Iso};
    f.table.assign(host.size(), -1);
    for (int u = 0; u < host.size(); ++u) {
      int cnt = ((u >> 0) & 1) + ((u >> 1) & 1); // multiplicities 1 and 1
      f.table[u] = cnt >= 2 ? 3 : 0;
    }
    auto prof = detect_properties(f);
    CHECK(prof.min_k_additive[0] == 2);
  }
}

TEST_CASE("topologies and continuity") {
  SUBCASE("2-element BA sigma-up opens") {
    auto l = FinLattice::chain(2, LatticeKind::BA);
    auto t = topologies(DenseCompactPair::whole(l));
    CHECK(t.sigma_up.opens.size() == 3); // empty, {top}, carrier
  }
  SUBCASE("gamma-up on a finite host is all up-sets") {
    auto l = FinLattice::powerset(2);
    auto t = topologies(DenseCompactPair::whole(l));
    auto ups = l.order_poset().all_up_sets();
    CHECK(t.gamma_up.opens.size() == ups.size());
  }
  SUBCASE("3-chain sigma-up has 4 opens") {
    auto l = FinLattice::chain(3);
    auto t = topologies(DenseCompactPair::whole(l));
    CHECK(t.sigma_up.opens.size() == 4);
  }
  SUBCASE("inclusions gamma in sigma") {
    auto l = FinLattice::powerset(2);
    auto t = topologies(DenseCompactPair::whole(l));
    for (auto& o : t.gamma_up.opens) CHECK(t.sigma_up.is_open(o));
    for (auto& o : t.gamma_down.opens) CHECK(t.sigma_down.is_open(o));
    for (auto& o : t.gamma.opens) CHECK(t.sigma.is_open(o));
  }
  SUBCASE("continuity oracles") {
    auto l = FinLattice::powerset(2);
    auto p = DenseCompactPair::whole(l);
    auto t = topologies(p);
    auto id = sigma_pi_extension(MapTable::identity(p)).sigma;
    CHECK(is_continuous(id, {&t.gamma_up}, t.gamma_up));
    std::vector<Bits> succ{Bits::single(2, 1), Bits::single(2, 0)};
    auto dia = sigma_pi_extension(frame_diamond(p, succ)).sigma;
    CHECK(is_continuous(dia, {&t.sigma_down}, t.sigma_down));
    CHECK(is_continuous(dia, {&t.gamma_up}, t.gamma_up));
    auto neg = sigma_pi_extension(MapTable::negation(p)).sigma;
    CHECK_FALSE(is_continuous(neg, {&t.gamma_up}, t.gamma_up));
    CHECK(is_continuous(neg, {&t.sigma_down}, t.sigma_up));
  }
}

TEST_CASE("compose_and_compare") {
  auto l = FinLattice::powerset(2);
  auto p = DenseCompactPair::whole(l);
  SUBCASE("identity composed with identity") {
    auto rep = compose_and_compare(MapTable::identity(p), {MapTable::identity(p)});
    CHECK(rep.pointwise_leq);
    CHECK(rep.equal);
    CHECK(rep.certified_equality);
  }
  SUBCASE("join-preserving outer map certifies the upper direction") {
    std::vector<Bits> succ{Bits::single(2, 1), Bits::single(2, 0)};
    auto dia = frame_diamond(p, succ);
    auto rep = compose_and_compare(dia, {MapTable::negation(p)});
    CHECK(rep.pointwise_leq);
    CHECK(rep.equal); // finite hosts force equality
    CHECK(rep.certified_upper);
  }
  SUBCASE("tonicity violation is reported") {
    auto bad = MapTable::negation(p);
    bad.tonicity = {Tonicity::Iso};
    CHECK_THROWS_AS(compose_and_compare(MapTable::identity(p), {bad}), Rejection);
  }
}
