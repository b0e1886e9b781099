#include "coalcan/parser.hpp"

#include <cctype>
#include <cstring>
#include <sstream>

namespace coalcan {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool eat_str(const char* w) {
    skip();
    size_t n = strlen(w);
    if (s.compare(i, n, w) == 0) {
      i += n;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("PARSE-ERROR at position " + std::to_string(i) + ": " + what);
  }
};

struct Parser {
  Cursor c;
  const Signature& sig;

  std::string ident() {
    c.skip();
    size_t start = c.i;
    if (c.i >= c.s.size() || !std::islower((unsigned char)c.s[c.i])) c.fail("expected identifier");
    ++c.i;
    while (c.i < c.s.size() && (std::islower((unsigned char)c.s[c.i]) || std::isdigit((unsigned char)c.s[c.i])))
      ++c.i;
    return c.s.substr(start, c.i - start);
  }

  std::vector<TermPtr> term_list(char close) {
    std::vector<TermPtr> kids;
    c.skip();
    if (c.i < c.s.size() && c.s[c.i] == close) {
      ++c.i;
      return kids;
    }
    while (true) {
      kids.push_back(imp());
      if (c.eat(close)) break;
      if (!c.eat(',')) c.fail(std::string("expected ',' or '") + close + "'");
    }
    return kids;
  }

  TermPtr primary() {
    c.skip();
    if (c.eat('(')) {
      auto t = imp();
      if (!c.eat(')')) c.fail("expected ')'");
      return t;
    }
    if (c.i < c.s.size() && c.s[c.i] == '!') {
      ++c.i;
      if (sig.base != LatticeKind::BA)
        throw ParseError("NEGATION-IN-POSITIVE-BASE: '!' needs a BA base");
      return Term::negate(primary());
    }
    auto name = ident();
    if (name == "bot") return Term::bot();
    if (name == "top") return Term::top();
    if (name == "nabla") {
      if (c.eat('{')) return Term::nabla_set(term_list('}'));
      if (c.eat('(')) return Term::nabla_tup(term_list(')'));
      c.fail("nabla expects '{' or '('");
    }
    if (name == "and" && c.eat('{')) return Term::big_and(term_list('}'));
    if (name == "or" && c.eat('{')) return Term::big_or(term_list('}'));
    c.skip();
    if (c.i < c.s.size() && c.s[c.i] == '(') {
      ++c.i;
      auto kids = term_list(')');
      auto* s = sig.find(name);
      if (!s) c.fail("unknown symbol '" + name + "'");
      if ((int)kids.size() != s->arity)
        throw ParseError("ARITY-ERROR: '" + name + "' expects " + std::to_string(s->arity) +
                         " arguments, got " + std::to_string(kids.size()));
      return Term::app(name, std::move(kids));
    }
    // bare name: a nullary symbol if declared, else a variable
    if (auto* s = sig.find(name)) {
      if (s->arity != 0)
        throw ParseError("ARITY-ERROR: '" + name + "' expects " + std::to_string(s->arity) +
                         " arguments, got 0");
      return Term::app(name, {});
    }
    return Term::var(name);
  }

  TermPtr conj() {
    auto t = primary();
    while (true) {
      c.skip();
      if (c.i < c.s.size() && c.s[c.i] == '&') {
        ++c.i;
        t = Term::conj(t, primary());
      } else
        break;
    }
    return t;
  }

  TermPtr disj() {
    auto t = conj();
    while (true) {
      c.skip();
      if (c.i < c.s.size() && c.s[c.i] == '|') {
        ++c.i;
        t = Term::disj(t, conj());
      } else
        break;
    }
    return t;
  }

  TermPtr imp() {
    auto t = disj();
    c.skip();
    if (c.s.compare(c.i, 2, "->") == 0) {
      c.i += 2;
      if (sig.base != LatticeKind::BA)
        throw ParseError("NEGATION-IN-POSITIVE-BASE: '->' needs a BA base");
      auto rhs = imp(); // right associative
      return Term::disj(Term::negate(t), rhs);
    }
    return t;
  }
};

} // namespace

TermPtr parse_term(const std::string& text, const Signature& sig) {
  Parser p{Cursor{text}, sig};
  auto t = p.imp();
  p.c.skip();
  if (p.c.i != text.size()) p.c.fail("trailing input");
  return t;
}

Signature parse_signature(const std::string& text) {
  Signature sig;
  std::istringstream in(text);
  std::string line;
  bool base_set = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "base") {
      std::string b;
      ls >> b;
      if (b == "BA") sig.base = LatticeKind::BA;
      else if (b == "BDL") sig.base = LatticeKind::BDL;
      else if (b == "DL") sig.base = LatticeKind::DL;
      else throw ParseError("signature: unknown base '" + b + "'");
      base_set = true;
      continue;
    }
    if (word != "sym") throw ParseError("signature: expected 'sym' or 'base', got '" + word + "'");
    SymbolInfo s;
    int arity;
    if (!(ls >> s.name >> arity)) throw ParseError("signature: malformed sym line");
    s.arity = arity;
    std::string tons, flags, law;
    if (arity > 0) {
      if (!(ls >> tons)) throw ParseError("signature: missing tonicity list");
      if (!(ls >> flags)) throw ParseError("signature: missing flag list");
    }
    if (!(ls >> law)) law = "none";
    auto split = [](const std::string& str) {
      std::vector<std::string> parts;
      std::string cur;
      for (char ch : str) {
        if (ch == ',') {
          parts.push_back(cur);
          cur.clear();
        } else
          cur += ch;
      }
      parts.push_back(cur);
      return parts;
    };
    if (arity > 0) {
      for (auto& t : split(tons)) {
        if (t == "iso") s.tonicity.push_back(Tonicity::Iso);
        else if (t == "anti") s.tonicity.push_back(Tonicity::Anti);
        else if (t == "none") s.tonicity.push_back(Tonicity::None);
        else throw ParseError("signature: unknown tonicity '" + t + "'");
      }
      for (auto& f : split(flags)) {
        uint16_t mask = 0;
        if (f != "-") {
          std::string cur;
          auto flush = [&] {
            if (cur.empty()) return;
            uint16_t p = prop_from_name(cur);
            if (!p) throw ParseError("signature: unknown flag '" + cur + "'");
            mask |= p;
            cur.clear();
          };
          for (char ch : f) {
            if (ch == '+') flush();
            else cur += ch;
          }
          flush();
        }
        s.props.push_back(mask);
      }
    }
    if (law == "eq51") s.law = DistLaw::Eq51;
    else if (law == "eq52") s.law = DistLaw::Eq52;
    else if (law == "none") s.law = DistLaw::None;
    else throw ParseError("signature: unknown law '" + law + "'");
    sig.add(std::move(s));
  }
  if (!base_set && sig.symbols.empty()) throw ParseError("signature: empty file");
  return sig;
}

} // namespace coalcan
