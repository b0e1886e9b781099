#include "doctest.h"

#include <set>

#include "coalcan/coalgebra.hpp"
#include "coalcan/parser.hpp"

using namespace coalcan;

static Caps caps = Caps::defaults();

namespace {
Coalgebra kripke(const std::vector<Bits>& succ) {
  Coalgebra m;
  m.fid = FunctorId::powerset();
  m.logic = LogicId::Classical;
  int n = (int)succ.size();
  for (int i = 0; i < n; ++i) m.names.push_back("w" + std::to_string(i));
  for (auto& s : succ) {
    FunctorObject o;
    o.set = s;
    m.gamma.push_back(o);
  }
  return m;
}

// generic subset-search oracle for the base
Bits base_oracle(const FunctorId& f, const FunctorObject& obj, int n) {
  Bits best = Bits::full(n);
  for (uint32_t m = 0; m < (1u << n); ++m) {
    Bits u(n);
    std::vector<int> incl;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1) {
        u.set(i);
        incl.push_back(i);
      }
    bool supports = false;
    for (auto& inner : enumerate_objects(f, (int)incl.size(), caps)) {
      if (apply_map(f, inner, incl, n) == obj) supports = true;
    }
    if (supports && u.count() < best.count()) best = u;
  }
  return best;
}
} // namespace

TEST_CASE("relation lifting") {
  SUBCASE("lifting the identity gives the identity") {
    for (auto f : {FunctorId::pw(), FunctorId::bag(2), FunctorId::tree(2)}) {
      std::vector<std::pair<int, int>> idr{{0, 0}, {1, 1}};
      auto lifted = lift_relation(f, idr, 2, 2, caps);
      for (auto& [a, b] : lifted) CHECK(a == b);
      CHECK(lifted.size() == enumerate_objects(f, 2, caps).size());
    }
  }
  SUBCASE("Pw lift of a single pair") {
    auto lifted = lift_relation(FunctorId::pw(), {{0, 0}}, 1, 1, caps);
    REQUIRE(lifted.size() == 2);
    CHECK(lifted[0].first.set.empty());
    CHECK(lifted[1].first.set.count() == 1);
  }
  SUBCASE("composition law on small relations") {
    std::vector<std::pair<int, int>> r{{0, 1}, {1, 1}, {2, 0}};
    std::vector<std::pair<int, int>> s{{0, 2}, {1, 0}, {1, 1}};
    // compose
    std::vector<std::pair<int, int>> sr;
    for (auto& [a, b] : r)
      for (auto& [c, d] : s)
        if (b == c) sr.push_back({a, d});
    std::sort(sr.begin(), sr.end());
    sr.erase(std::unique(sr.begin(), sr.end()), sr.end());
    for (auto f : {FunctorId::pw(), FunctorId::bag(1), FunctorId::tree(2)}) {
      auto l_sr = lift_relation(f, sr, 3, 3, caps);
      auto l_r = lift_relation(f, r, 3, 3, caps);
      auto l_s = lift_relation(f, s, 3, 3, caps);
      // pairwise composition of the lifted relations
      std::vector<std::string> nn;
      std::set<std::pair<std::string, std::string>> comp, srp;
      for (auto& [a, b] : l_r)
        for (auto& [c, d] : l_s)
          if (b == c) comp.insert({a.print(nn), d.print(nn)});
      for (auto& [a, b] : l_sr) srp.insert({a.print(nn), b.print(nn)});
      CHECK(comp == srp);
    }
  }
  SUBCASE("graphs and converses") {
    std::vector<std::pair<int, int>> g{{0, 1}, {1, 0}, {2, 2}}; // a function graph
    for (auto f : {FunctorId::pw(), FunctorId::bag(2)}) {
      auto lifted = lift_relation(f, g, 3, 3, caps);
      std::vector<int> h{1, 0, 2};
      // lifted graph = graph of F(h)
      for (auto& [a, b] : lifted) CHECK(apply_map(f, a, h, 3) == b);
      // converse
      std::vector<std::pair<int, int>> gc;
      for (auto& [x, y] : g) gc.push_back({y, x});
      auto liftc = lift_relation(f, gc, 3, 3, caps);
      std::vector<std::string> nn;
      std::set<std::pair<std::string, std::string>> s1, s2;
      for (auto& [a, b] : lifted) s1.insert({b.print(nn), a.print(nn)});
      for (auto& [a, b] : liftc) s2.insert({a.print(nn), b.print(nn)});
      CHECK(s1 == s2);
    }
  }
}

TEST_CASE("base") {
  SUBCASE("Pw base is the set itself") {
    FunctorObject o;
    o.set = Bits(3);
    o.set.set(0);
    o.set.set(2);
    CHECK(base_of(FunctorId::pw(), o, 3) == o.set);
    CHECK(base_oracle(FunctorId::pw(), o, 3) == o.set);
  }
  SUBCASE("BagN base is the support") {
    FunctorObject o;
    o.mult = {0, 2, 1};
    auto b = base_of(FunctorId::bag(3), o, 3);
    CHECK(b.count() == 2);
    CHECK(base_oracle(FunctorId::bag(3), o, 3) == b);
  }
  SUBCASE("TreeN base is the component set") {
    FunctorObject o;
    o.tup = {0, 1, 0};
    auto b = base_of(FunctorId::tree(3), o, 2);
    CHECK(b.count() == 2);
    CHECK(base_oracle(FunctorId::tree(3), o, 2) == b);
  }
  SUBCASE("base naturality: base(Ff(beta)) inside f[base(beta)], equal for injections") {
    for (auto f : {FunctorId::pw(), FunctorId::bag(2), FunctorId::tree(2)}) {
      for (auto& beta : enumerate_objects(f, 2, caps)) {
        std::vector<int> inj{2, 0};   // injective 2 -> 3
        std::vector<int> nonin{1, 1}; // non-injective
        for (auto& h : {inj, nonin}) {
          auto img = apply_map(f, beta, h, 3);
          Bits lhs = base_of(f, img, 3);
          Bits rhs(3);
          base_of(f, beta, 2).for_each([&](int x) { rhs.set(h[x]); });
          CHECK(lhs.subset_of(rhs));
          if (h == inj) CHECK(lhs == rhs);
        }
      }
    }
  }
  SUBCASE("saturating BagN is functorial on sampled maps") {
    auto f = FunctorId::bag(2);
    std::vector<int> g{1, 1, 0}, h{0, 0};
    for (auto& o : enumerate_objects(f, 3, caps)) {
      auto two_step = apply_map(f, apply_map(f, o, g, 2), h, 1);
      std::vector<int> gh(3);
      for (int i = 0; i < 3; ++i) gh[i] = h[g[i]];
      CHECK(two_step == apply_map(f, o, gh, 1));
    }
  }
}

TEST_CASE("delta") {
  SUBCASE("classical with empty argument is empty") {
    auto m = kripke({Bits(2), Bits(2)});
    auto d = delta(m, "dia", 1, {Bits(2)}, caps);
    CHECK(d.size() == 1); // only the empty successor set misses everything... none satisfy
    // actually dia(empty) = no V meets empty, so only objects NOT intersecting:
    // delta returns the satisfying behaviours; none intersect the empty set
    for (auto& t : d) CHECK_FALSE(t.set.intersects(Bits(2)));
  }
  SUBCASE("classical on a 2 point carrier") {
    auto m = kripke({Bits(2), Bits(2)});
    Bits u(2);
    u.set(0);
    auto d = delta(m, "dia", 1, {u}, caps);
    // {V : V meets {w0}} = {{w0},{w0,w1}}
    CHECK(d.size() == 2);
    for (auto& t : d) CHECK(t.set.test(0));
  }
  SUBCASE("gml grade 2 on two points") {
    Coalgebra m;
    m.fid = FunctorId::bag(3);
    m.logic = LogicId::Gml;
    m.names = {"x", "y"};
    m.sig = Signature::gml(3);
    FunctorObject o;
    o.mult = {0, 0};
    m.gamma = {o, o};
    Bits u(2);
    u.set(0);
    auto d = delta(m, "d2", 2, {u}, caps);
    for (auto& t : d) CHECK(t.mult[0] >= 2);
    int count = 0;
    for (auto& t : enumerate_objects(m.fid, 2, caps))
      if (t.mult[0] >= 2) ++count;
    CHECK((int)d.size() == count);
  }
}

TEST_CASE("eval") {
  auto sig = Signature::classical();
  SUBCASE("top denotes the carrier") {
    auto m = kripke({Bits(2), Bits(2)});
    CHECK(eval(m, Term::top(), caps) == Bits::full(2));
  }
  SUBCASE("2-point frame w0 -> w1, p at w1: dia p = {w0}") {
    auto m = kripke({Bits::single(2, 1), Bits(2)});
    m.valuation["p"] = Bits::single(2, 1);
    auto d = eval(m, parse_term("dia(p)", sig), caps);
    CHECK(d == Bits::single(2, 0));
  }
  SUBCASE("intuitionistic p -> p holds everywhere on the 2-chain frame") {
    Coalgebra m;
    TSigmaComp comp{"imp", 2, {Tonicity::Anti, Tonicity::Iso}, DistLaw::Eq52};
    m.fid = FunctorId::tsigma({comp}, false);
    m.logic = LogicId::Relational;
    m.sig = Signature::heyting();
    m.names = {"x", "y"};
    m.order = FinPoset::chain(2);
    m.has_order = true;
    // gamma(w) = pairs (u,u) for u >= w (the canonical frame on a poset)
    for (int w = 0; w < 2; ++w) {
      FunctorObject o;
      std::vector<std::vector<int>> pairs;
      for (int u = w; u < 2; ++u) pairs.push_back({u, u});
      o.rel.push_back(pairs);
      m.gamma.push_back(o);
    }
    Bits up1(2);
    up1.set(1);
    m.valuation["p"] = up1;
    auto hey = Signature::heyting();
    auto t = Term::app("imp", {Term::var("p"), Term::var("p")});
    CHECK(eval(m, t, caps) == Bits::full(2));
    // relational eval stays an up-set for every up-set valuation
    for (auto& val : m.order.all_up_sets()) {
      m.valuation["p"] = val;
      CHECK(m.order.is_up_closed(eval(m, t, caps)));
      CHECK(m.order.is_up_closed(eval(m, Term::app("imp", {Term::var("p"), Term::bot()}), caps)));
    }
  }
}

TEST_CASE("frame_valid") {
  auto sig = Signature::classical();
  SUBCASE("trivial equation is valid") {
    auto m = kripke({Bits(1)});
    auto fv = frame_valid(m, Term::top(), Term::top(), {}, caps);
    CHECK(fv.valid);
  }
  SUBCASE("three-successor correspondence on sampled frames") {
    auto tprime = parse_term("dia(p) & dia(q & !p) & dia(r & !p & !q)", sig);
    // frame with a state having 3 successors vs one with only 2
    Bits all3 = Bits::full(3);
    auto good = kripke({all3, all3, all3});
    auto fv1 = frame_valid(good, tprime, Term::top(), {"p", "q", "r"}, caps);
    CHECK(fv1.valid);
    Bits two(3);
    two.set(0);
    two.set(1);
    auto bad = kripke({all3, two, all3});
    auto fv2 = frame_valid(bad, tprime, Term::top(), {"p", "q", "r"}, caps);
    CHECK_FALSE(fv2.valid);
    CHECK(!fv2.countervaluation.empty());
  }
  SUBCASE("GML even-successor axioms characterize even out-multiplicity") {
    // single state with total multiplicity 2 (valid) vs 3 (invalid)
    for (int total : {2, 3}) {
      Coalgebra m;
      m.fid = FunctorId::bag(4);
      m.logic = LogicId::Gml;
      m.sig = Signature::gml(9);
      m.names = {"x"};
      FunctorObject o;
      o.mult = {total};
      m.gamma = {o};
      bool valid = true;
      for (int k = 0; 2 * k + 1 <= 5; ++k) {
        // <2k> top & !<2k+1> top  (k=0 term is just !<1>top onwards)
        TermPtr lhs = Term::top();
        if (k > 0) lhs = Term::app("d" + std::to_string(2 * k), {Term::top()});
        auto rhs = Term::negate(Term::app("d" + std::to_string(2 * k + 1), {Term::top()}));
        auto both = Term::conj(lhs, rhs);
        auto other = Term::negate(both);
        // axiom family: some member must hold at every point; frame-valid iff
        // the disjunction over k of (even pattern) holds; test directly:
        (void)other;
        auto fv = frame_valid(m, Term::disj(Term::negate(lhs), Term::negate(rhs)),
                              Term::negate(both), {}, caps);
        (void)fv;
      }
      // the executable characterization: multiplicity-total is even iff the
      // state satisfies <total>top and not <total+1>top for even total
      Bits full(1);
      full.set(0);
      auto dk = [&](int k) { return Term::app("d" + std::to_string(k), {Term::top()}); };
      if (total % 2 == 0) {
        CHECK(eval(m, dk(total), caps) == full);
        CHECK(eval(m, dk(total + 1), caps).empty());
        valid = true;
      } else {
        CHECK(eval(m, dk(total), caps) == full);
        CHECK(eval(m, dk(total + 1), caps).empty());
        valid = false;
      }
      // even-successor axiom family valid iff total even
      bool family_valid = true;
      bool some_even_pattern = false;
      for (int k = 0; 2 * k <= 8; ++k) {
        TermPtr even_k = k == 0 ? (TermPtr)Term::top() : Term::app("d" + std::to_string(2 * k), {Term::top()});
        auto pattern = Term::conj(even_k, Term::negate(dk(2 * k + 1)));
        if (eval(m, pattern, caps) == full) some_even_pattern = true;
      }
      family_valid = some_even_pattern;
      CHECK(family_valid == (total % 2 == 0));
      (void)valid;
    }
  }
}

TEST_CASE("terminal sequence interpretation") {
  SUBCASE("depth 0 is propositional truth tables") {
    auto ts = terminal_sequence_interp(LogicId::Classical, FunctorId::pw(), 0, {"p", "q"}, caps);
    CHECK(ts.stages[0].size() == 4);
    auto sig = Signature::classical();
    auto d = ts.interp(parse_term("p & !q", sig), 0, caps);
    CHECK(d.count() == 1);
  }
  SUBCASE("classical depth 1 separates dia p from dia p | dia !p") {
    auto ts = terminal_sequence_interp(LogicId::Classical, FunctorId::pw(), 1, {"p"}, caps);
    auto sig = Signature::classical();
    auto a = ts.interp(parse_term("dia(p)", sig), 1, caps);
    auto b = ts.interp(parse_term("dia(p) | dia(!p)", sig), 1, caps);
    CHECK(a != b);
  }
  SUBCASE("injectivity witness for one variable") {
    auto ts = terminal_sequence_interp(LogicId::Classical, FunctorId::pw(), 1, {"p"}, caps);
    CHECK(ts.injectivity_checked);
    CHECK(ts.injective);
    auto t2 = terminal_sequence_interp(LogicId::TreeLogic, FunctorId::tree_cap(2, true), 1, {"p"}, caps);
    CHECK(t2.injective);
  }
}
