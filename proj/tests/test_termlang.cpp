#include "doctest.h"

#include <map>

#include "coalcan/classify.hpp"
#include "coalcan/parser.hpp"
#include "coalcan/tables.hpp"

using namespace coalcan;

TEST_CASE("parser") {
  auto sig = Signature::classical();
  SUBCASE("round trips through the printer") {
    auto t = parse_term("dia(p) & dia(q & !p)", sig);
    CHECK(to_string(t) == "(dia(p) & dia((q & !p)))");
    auto again = parse_term(to_string(t), sig);
    CHECK(term_eq(t, again));
  }
  SUBCASE("application arity is checked") {
    Signature s2 = sig;
    s2.add({"k2", 2, {Tonicity::Iso, Tonicity::Iso}, {P_JOIN, P_JOIN}, DistLaw::None, 0});
    CHECK(parse_term("k2(p, q)", s2)->kind == TermKind::App);
    CHECK_THROWS_AS(parse_term("k2(p)", s2), ParseError);
  }
  SUBCASE("negation needs a boolean base") {
    auto dl = Signature::lambek();
    CHECK_THROWS_WITH_AS(parse_term("!p", dl),
                         "NEGATION-IN-POSITIVE-BASE: '!' needs a BA base", ParseError);
  }
  SUBCASE("implication desugars") {
    auto t = parse_term("p -> q", sig);
    CHECK(to_string(t) == "(!p | q)");
  }
  SUBCASE("signature files") {
    auto s = parse_signature("base BA\nsym dia 1 iso joins eq51\nsym box 1 iso meets eq52\n");
    CHECK(s.find("dia"));
    CHECK((s.find("dia")->props[0] & P_JOIN));
    auto tr = parse_signature("base BA\nsym t2 2 iso,iso meets+joins,meets+joins none\n");
    CHECK((tr.find("t2")->props[0] & P_MEET));
    CHECK((tr.find("t2")->props[0] & P_JOIN));
  }
}

TEST_CASE("polarity") {
  Signature sig = Signature::classical();
  sig.add({"f", 2, {Tonicity::Iso, Tonicity::Anti}, {0, 0}, DistLaw::None, 0});
  SUBCASE("a variable is positive in itself") {
    CHECK(polarity(parse_term("p", sig), "p", sig) == Polarity::Positive);
  }
  SUBCASE("f(p, !p) with iso/anti arguments is positive in p") {
    CHECK(polarity(parse_term("f(p, !p)", sig), "p", sig) == Polarity::Positive);
  }
  SUBCASE("f(p, p) is neither positive nor negative") {
    CHECK(polarity(parse_term("f(p, p)", sig), "p", sig) == Polarity::Mixed);
  }
}

TEST_CASE("classify stability") {
  auto sig = Signature::classical();
  SUBCASE("dia box p is stable") {
    auto c = classify(parse_term("dia(box(p))", sig), sig);
    CHECK(c.stability == Stability::Stable);
  }
  SUBCASE("dia box (p & !q) is stable") {
    auto c = classify(parse_term("dia(box(p & !q))", sig), sig);
    CHECK(c.stability == Stability::Stable);
  }
  SUBCASE("box dia p is a problematic combination") {
    auto c = classify(parse_term("box(dia(p))", sig), sig);
    CHECK(c.stability != Stability::Stable);
    CHECK_FALSE(c.contracting);
  }
  SUBCASE("meets, joins, negation classify as stable") {
    for (const char* s : {"p & q", "p | q", "!p"})
      CHECK(classify(parse_term(s, sig), sig).stability == Stability::Stable);
  }
  SUBCASE("strictly positive terms are conservative") {
    auto c = classify(parse_term("dia(p) | dia(q)", sig), sig);
    CHECK(c.conservative);
    CHECK(c.syn_class == SynClass::StrictlyPositive);
  }
}

TEST_CASE("sahlqvist recognizer") {
  auto sig = Signature::classical();
  auto tprime = parse_term("!(dia(p) & dia(q & !p) & dia(r & !p & !q))", sig);
  Equation eq{tprime, Term::bot(), false};
  SUBCASE("three-successor axiom: general but not classical") {
    auto vg = is_sahlqvist(eq, sig, Dialect::General);
    CHECK(vg.accepted);
    CHECK(vg.route == "sahlqvist");
    auto vc = is_sahlqvist(eq, sig, Dialect::Classical);
    CHECK_FALSE(vc.accepted);
  }
  SUBCASE("McKinsey is rejected in all dialects") {
    auto mk = parse_term("box(dia(p)) -> dia(box(p))", sig);
    Equation m{mk, Term::top(), false};
    for (auto d : {Dialect::Abstract, Dialect::Classical, Dialect::General})
      CHECK_FALSE(is_sahlqvist(m, sig, d).accepted);
  }
  SUBCASE("graded description-logic axiom is GML Sahlqvist") {
    auto gml = Signature::gml(4);
    auto ax = parse_term("d2(d2(p)) -> d4(p)", gml);
    auto v = is_sahlqvist({ax, Term::top(), false}, gml, Dialect::Gml);
    CHECK(v.accepted);
  }
  SUBCASE("classical boxed-atom axiom is accepted") {
    auto v = is_sahlqvist({parse_term("box(p) -> dia(p)", sig), Term::top(), false}, sig,
                          Dialect::Classical);
    CHECK(v.accepted);
  }
  SUBCASE("dialect mismatch") {
    CHECK_THROWS_AS(is_sahlqvist(eq, Signature::lambek(), Dialect::General), InputError);
    CHECK_THROWS_AS(is_sahlqvist(eq, sig, Dialect::Substructural), InputError);
  }
  SUBCASE("dialect monotonicity on a corpus of candidate axioms") {
    for (const char* s :
         {"box(p) -> dia(p)", "dia(p) -> p", "p -> dia(p)", "dia(dia(p)) -> dia(p)",
          "box(p) -> box(box(p))", "dia(box(p)) -> box(dia(p))"}) {
      Equation e{parse_term(s, sig), Term::top(), false};
      if (is_sahlqvist(e, sig, Dialect::Classical).accepted)
        CHECK(is_sahlqvist(e, sig, Dialect::General).accepted);
    }
  }
  SUBCASE("nabla transitivity preimage is general Sahlqvist") {
    auto p = Term::var("p");
    auto pre = Term::disj(
        Term::negate(Term::nabla_tup({Term::nabla_tup({p, p}), Term::nabla_tup({p})})),
        Term::nabla_tup({p, p, p}));
    auto v = is_sahlqvist({pre, Term::top(), false}, sig, Dialect::General);
    CHECK(v.accepted);
  }
}

TEST_CASE("heyting and lambek frame conditions are canonical") {
  auto hey = Signature::heyting();
  SUBCASE("HFC1-3") {
    auto a = Term::var("a"), b = Term::var("b");
    auto impl = [&](TermPtr x, TermPtr y) { return Term::app("imp", {x, y}); };
    Equation hfc1{impl(a, a), Term::top(), false};
    Equation hfc2{Term::conj(a, impl(a, b)), Term::conj(a, b), false};
    Equation hfc3{Term::conj(impl(a, b), b), b, false};
    for (auto& e : {hfc1, hfc2, hfc3}) {
      auto v = is_sahlqvist(e, hey, Dialect::Substructural);
      CHECK(v.accepted);
      CHECK(v.route == "stable-equation");
    }
  }
  SUBCASE("FC1-6 for the Lambek signature") {
    auto lam = Signature::lambek();
    auto a = Term::var("a"), b = Term::var("b"), c = Term::var("c");
    auto star = [&](TermPtr x, TermPtr y) { return Term::app("star", {x, y}); };
    auto under = [&](TermPtr x, TermPtr y) { return Term::app("under", {x, y}); };
    auto over = [&](TermPtr x, TermPtr y) { return Term::app("over", {x, y}); };
    auto unit = Term::app("unit", {});
    std::vector<Equation> fcs = {
        {star(a, unit), a, false},
        {unit, under(a, a), true},
        {star(a, under(b, c)), under(star(a, b), c), true},
        {star(over(c, b), a), over(c, star(a, b)), true},
        {star(over(a, b), b), a, true},
        {star(b, under(b, a)), a, true},
    };
    for (auto& e : fcs) CHECK(is_sahlqvist(e, lam, Dialect::Substructural).accepted);
    CHECK(is_sahlqvist({star(a, b), star(b, a), false}, lam, Dialect::Substructural).accepted);
    CHECK(is_sahlqvist({a, star(a, a), true}, lam, Dialect::Substructural).accepted);
    CHECK(is_sahlqvist({a, unit, true}, lam, Dialect::Substructural).accepted);
  }
}

TEST_CASE("reduce_quasi") {
  auto sig = Signature::classical();
  SUBCASE("literal bottom case") {
    auto r = reduce_quasi(Term::bot(), Term::bot(), sig);
    CHECK(to_string(r.equation.lhs) == "(bot | g(bot))");
    CHECK(to_string(r.equation.rhs) == "g(bot)");
  }
  SUBCASE("s=p, t=dia p") {
    auto r = reduce_quasi(Term::var("p"), parse_term("dia(p)", sig), sig);
    CHECK(to_string(r.equation.lhs) == "(dia(p) | g(p))");
    auto* g = r.sig_with_g.find("g");
    REQUIRE(g);
    CHECK((g->props[0] & P_JOIN));
  }
  SUBCASE("quasi-validity matches equation validity with the g interpretation") {
    auto host = FinLattice::chain(2, LatticeKind::BA);
    auto s = Term::var("p");
    auto t = parse_term("dia(p)", sig);
    auto red = reduce_quasi(s, t, sig);
    for (int f0 = 0; f0 < 2; ++f0)
      for (int f1 = 0; f1 < 2; ++f1) {
        ExpandedAlgebra alg;
        alg.carrier = &host;
        alg.ops.push_back({"dia", 1, {f0, f1}});
        alg.ops.push_back({"g", 1, {0, 1}}); // g(bot)=bot, g(top)=top
        bool quasi = true;
        for (int p = 0; p < 2; ++p) {
          auto sp = p == 0 ? Term::bot() : Term::top();
          auto sv = substitute(s, {{"p", sp}});
          auto tv = substitute(t, {{"p", sp}});
          auto sf = term_function(sv, alg).map.table[0];
          auto tf = term_function(tv, alg).map.table[0];
          if (sf == 0 && tf != 0) quasi = false;
        }
        bool eqn = algebra_validates(alg, red.equation.lhs, red.equation.rhs);
        CHECK(quasi == eqn);
      }
  }
}

TEST_CASE("term_function") {
  auto sig = Signature::classical();
  auto host = FinLattice::powerset(1);
  SUBCASE("a variable is a projection") {
    ExpandedAlgebra alg;
    alg.carrier = &host;
    auto tf = term_function(Term::var("p"), alg);
    CHECK(tf.map.table[0] == 0);
    CHECK(tf.map.table[1] == 1);
  }
  SUBCASE("conjunction on the 2-element BA") {
    ExpandedAlgebra alg;
    alg.carrier = &host;
    auto tf = term_function(parse_term("p & q", sig), alg);
    CHECK(tf.map.at({1, 1}) == 1);
    CHECK(tf.map.at({1, 0}) == 0);
  }
  SUBCASE("dia dia p is two-step reachability") {
    auto h2 = FinLattice::powerset(2);
    ExpandedAlgebra alg;
    alg.carrier = &h2;
    std::vector<int> dia(4);
    for (int u = 0; u < 4; ++u) {
      int out = 0;
      if ((u >> 1) & 1) out |= 1; // w0 sees w1
      if ((u >> 0) & 1) out |= 2; // w1 sees w0
      dia[u] = out;
    }
    alg.ops.push_back({"dia", 1, dia});
    auto tf = term_function(parse_term("dia(dia(p))", sig), alg);
    for (int u = 0; u < 4; ++u) CHECK(tf.map.table[u] == dia[dia[u]]);
  }
}

TEST_CASE("composition table transcription") {
  SUBCASE("checksums freeze the corrected transcription") {
    CHECK(fnv1a(stability_table_serialized()) == 0x427bdfe29b078d5full);
    CHECK(fnv1a(property_table_serialized()) == 0x529fbc8e261893e3ull);
  }
  SUBCASE("conservative columns are all-checkmark") {
    for (auto g : kPropOrder) {
      CHECK(stability_inherits(g, P_JOIN));
      CHECK(stability_inherits(g, P_UDJOIN));
    }
  }
  SUBCASE("classic cells") {
    CHECK(stability_inherits(P_MEET, P_JOIN));       // dia after box
    CHECK_FALSE(stability_inherits(P_JOIN, P_MEET)); // box after dia
    CHECK(stability_inherits(A_JOIN, P_MEET));       // box after negation
    CHECK(property_inherits(P_JOIN, A_JOIN) == A_JOIN);
    CHECK(property_inherits(A_MEET, A_JOIN) == P_MEET);     // corrected cell
    CHECK(property_inherits(P_UDJOIN, A_DDMEET) == A_ISO);  // corrected cell
    CHECK(property_inherits(A_JOIN, A_MEET) == P_JOIN);
  }
}
