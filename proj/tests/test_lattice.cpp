#include "doctest.h"

#include "coalcan/lattice.hpp"

using namespace coalcan;

namespace {
// subset-enumeration oracle for prime filters, independent of the
// join-irreducible fast path
std::vector<Bits> prime_filters_oracle(const FinLattice& a) {
  std::vector<Bits> out;
  int n = a.size();
  REQUIRE(n <= 16);
  for (uint32_t m = 1; m < (1u << n); ++m) {
    Bits s(n);
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1) s.set(i);
    if (a.is_prime_filter(s)) out.push_back(s);
  }
  return out;
}
} // namespace

TEST_CASE("downset lattice of small posets") {
  SUBCASE("empty poset gives the one-element lattice") {
    FinPoset p({}, {});
    auto l = downset_lattice(p);
    CHECK(l.size() == 1);
  }
  SUBCASE("2-chain gives a 3-chain") {
    auto l = downset_lattice(FinPoset::chain(2));
    CHECK(l.size() == 3);
    CHECK(l.order_poset().isomorphic_to(FinPoset::chain(3)));
  }
  SUBCASE("2-antichain gives the diamond") {
    auto l = downset_lattice(FinPoset::discrete(2));
    CHECK(l.size() == 4);
    CHECK(l.atoms().size() == 2);
  }
}

TEST_CASE("prime filters") {
  SUBCASE("3-chain has two prime filters") {
    auto l = FinLattice::chain(3);
    auto pf = prime_filters(l);
    CHECK(pf.filters.size() == 2);
    auto oracle = prime_filters_oracle(l);
    CHECK(oracle.size() == 2);
    CHECK(pf.poset.isomorphic_to(FinPoset::chain(2)));
  }
  SUBCASE("powerset BA on two points has two ultrafilters") {
    auto l = FinLattice::powerset(2);
    auto pf = prime_filters(l);
    CHECK(pf.filters.size() == 2);
    for (auto& f : pf.filters) CHECK(f.check());
  }
  SUBCASE("2-element BA has one ultrafilter") {
    auto l = FinLattice::powerset(0);
    CHECK(l.size() == 1);
    auto l2 = FinLattice::chain(2, LatticeKind::BA);
    auto pf = prime_filters(l2);
    CHECK(pf.filters.size() == 1);
    CHECK(pf.filters[0].members.count() == 1);
  }
  SUBCASE("fast path agrees with subset oracle on assorted hosts") {
    for (auto& p : all_posets_up_to_iso(3)) {
      auto l = downset_lattice(p);
      if (l.size() > 16) continue;
      auto fast = prime_filters(l);
      auto slow = prime_filters_oracle(l);
      CHECK(fast.filters.size() == slow.size());
    }
  }
}

TEST_CASE("birkhoff roundtrip recovers the poset") {
  for (int n = 0; n <= 4; ++n) {
    for (auto& p : all_posets_up_to_iso(n)) {
      auto l = downset_lattice(p);
      auto w = birkhoff_roundtrip(l);
      CHECK(w.is_isomorphism);
      CHECK(w.dual.isomorphic_to(p));
    }
  }
}

TEST_CASE("birkhoff examples") {
  SUBCASE("2-element BA: eta sends top to full set, bottom to empty") {
    auto l = FinLattice::chain(2, LatticeKind::BA);
    auto w = birkhoff_roundtrip(l);
    CHECK(w.eta[0].empty());
    CHECK(w.eta[1].count() == 1);
  }
  SUBCASE("3-chain dual is a 2-chain") {
    auto w = birkhoff_roundtrip(FinLattice::chain(3));
    CHECK(w.dual.isomorphic_to(FinPoset::chain(2)));
  }
  SUBCASE("powerset on 3 points has discrete 3-element dual") {
    auto w = birkhoff_roundtrip(FinLattice::powerset(3));
    CHECK(w.dual.isomorphic_to(FinPoset::discrete(3)));
  }
  SUBCASE("invalid table reports NON-DISTRIBUTIVE") {
    // M3: bottom, three incomparable middles, top -- not distributive
    std::vector<std::string> names{"0", "a", "b", "c", "1"};
    std::vector<Bits> up(5, Bits(5));
    up[0] = Bits::full(5);
    for (int m : {1, 2, 3}) {
      up[m].set(m);
      up[m].set(4);
    }
    up[4].set(4);
    CHECK_THROWS_AS(FinLattice::from_tables(LatticeKind::BDL, names, up), LatticeError);
    auto l = FinLattice::from_tables(LatticeKind::BDL, names, up, /*validate=*/false);
    CHECK_THROWS_WITH_AS(birkhoff_roundtrip(l), "NON-DISTRIBUTIVE", LatticeError);
  }
}

TEST_CASE("ultrafilters are principal on atoms") {
  for (int k = 1; k <= 3; ++k) {
    auto l = FinLattice::powerset(k);
    auto pf = prime_filters(l);
    auto at = l.atoms();
    CHECK(pf.filters.size() == at.size());
    for (size_t i = 0; i < at.size(); ++i) CHECK(pf.filters[i].members == l.principal_filter(at[i]));
  }
}

TEST_CASE("free boolean algebras") {
  CHECK(free_ba({}).algebra.size() == 2);
  CHECK(free_ba({"p"}).algebra.size() == 4);
  CHECK(free_ba({"p", "q"}).algebra.size() == 16);
  CHECK_THROWS_AS(free_ba({"a", "b", "c", "d", "e"}), BudgetExceeded);
  auto f = free_ba({"p", "q"});
  // generators are independent: p & q is neither bottom nor either generator
  int p = f.generator_elements[0], q = f.generator_elements[1];
  int pq = f.algebra.meet(p, q);
  CHECK(pq != *f.algebra.bottom());
  CHECK(pq != p);
  CHECK(pq != q);
}

TEST_CASE("quotient_ba") {
  SUBCASE("empty pair list is the identity quotient") {
    auto f = free_ba({"p"});
    auto q = quotient_ba(f.algebra, {});
    CHECK(q.algebra.size() == f.algebra.size());
  }
  SUBCASE("free_ba({p}) with p identified to top collapses to 2 elements") {
    auto f = free_ba({"p"});
    auto q = quotient_ba(f.algebra, {{f.generator_elements[0], *f.algebra.top()}});
    CHECK(q.algebra.size() == 2);
    CHECK(q.proj[f.generator_elements[0]] == q.proj[*f.algebra.top()]);
  }
  SUBCASE("free_ba({p,q}) with p=q gives the 4-element BA") {
    auto f = free_ba({"p", "q"});
    auto q = quotient_ba(f.algebra, {{f.generator_elements[0], f.generator_elements[1]}});
    CHECK(q.algebra.size() == 4);
  }
  SUBCASE("quotient validates its pairs and is initial among such homs (host <= 16)") {
    auto f = free_ba({"p", "q"});
    std::vector<std::pair<int, int>> pairs{{f.generator_elements[0], f.generator_elements[1]}};
    auto q = quotient_ba(f.algebra, pairs);
    for (auto [x, y] : pairs) CHECK(q.proj[x] == q.proj[y]);
    // initiality: any element pair identified by q must be forced, i.e. every
    // hom (into a 2-element BA = ultrafilter) identifying the input pairs also
    // identifies it. Ultrafilters of the host = principal on atoms.
    auto& a = f.algebra;
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y) {
        if (q.proj[x] != q.proj[y]) continue;
        for (int atom : a.atoms()) {
          bool pairs_ok = true;
          for (auto [u, v] : pairs)
            if (a.leq(atom, u) != a.leq(atom, v)) pairs_ok = false;
          if (pairs_ok) CHECK(a.leq(atom, x) == a.leq(atom, y));
        }
      }
  }
  SUBCASE("DL path agrees on a table-mode BA host") {
    // same quotient computed on the 16-element free BA rebuilt with tables
    auto f = free_ba({"p", "q"});
    auto& a = f.algebra;
    std::vector<std::string> names;
    std::vector<Bits> up;
    for (int i = 0; i < a.size(); ++i) names.push_back(a.name(i));
    for (int i = 0; i < a.size(); ++i) {
      Bits b(a.size());
      for (int j = 0; j < a.size(); ++j)
        if (a.leq(i, j)) b.set(j);
      up.push_back(b);
    }
    auto tab = FinLattice::from_tables(LatticeKind::BDL, names, up);
    auto q1 = quotient_ba(a, {{f.generator_elements[0], f.generator_elements[1]}});
    auto q2 = quotient_ba(tab, {{f.generator_elements[0], f.generator_elements[1]}});
    CHECK(q1.algebra.size() == q2.algebra.size());
  }
}
