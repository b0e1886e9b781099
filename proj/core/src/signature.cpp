#include "coalcan/signature.hpp"

namespace coalcan {

const SymbolInfo* Signature::find(const std::string& n) const {
  for (auto& s : symbols)
    if (s.name == n) return &s;
  return nullptr;
}

void Signature::add(SymbolInfo s) {
  if (find(s.name)) throw InputError("signature: duplicate symbol '" + s.name + "'");
  if ((int)s.tonicity.size() != s.arity || (int)s.props.size() != s.arity)
    throw InputError("signature: arity/annotation mismatch for '" + s.name + "'");
  for (int i = 0; i < s.arity; ++i) {
    s.props[i] = close_props(s.props[i]);
    // annotations must be consistent with the declared tonicity
    if ((s.props[i] & (P_MEET | P_JOIN | P_DDMEET | P_UDJOIN)) && s.tonicity[i] != Tonicity::Iso)
      throw InputError("signature: preservation flags need an isotone argument in '" + s.name + "'");
    if ((s.props[i] & (A_MEET | A_JOIN | A_DDMEET | A_UDJOIN)) && s.tonicity[i] != Tonicity::Anti)
      throw InputError("signature: anti-preservation flags need an antitone argument in '" + s.name + "'");
    if (s.tonicity[i] == Tonicity::Iso) s.props[i] |= P_ISO;
    if (s.tonicity[i] == Tonicity::Anti) s.props[i] |= A_ISO;
  }
  symbols.push_back(std::move(s));
}

Signature Signature::classical() {
  Signature sig;
  sig.base = LatticeKind::BA;
  sig.add({"dia", 1, {Tonicity::Iso}, {P_JOIN}, DistLaw::Eq51, 1});
  sig.add({"box", 1, {Tonicity::Iso}, {P_MEET}, DistLaw::Eq52, 0});
  return sig;
}

Signature Signature::gml(int max_grade) {
  Signature sig;
  sig.base = LatticeKind::BA;
  for (int k = 1; k <= max_grade; ++k) {
    SymbolInfo s;
    s.name = "d" + std::to_string(k);
    s.arity = 1;
    s.tonicity = {Tonicity::Iso};
    s.props = {uint16_t(k == 1 ? P_JOIN : P_UDJOIN)};
    s.law = k == 1 ? DistLaw::Eq51 : DistLaw::None;
    s.grade = k;
    sig.add(s);
  }
  return sig;
}

Signature Signature::tree(int max_arity) {
  Signature sig;
  sig.base = LatticeKind::BA;
  for (int k = 1; k <= max_arity; ++k) {
    SymbolInfo s;
    s.name = "t" + std::to_string(k);
    s.arity = k;
    s.tonicity.assign(k, Tonicity::Iso);
    s.props.assign(k, P_MEET | P_JOIN);
    s.law = DistLaw::None;
    s.grade = k;
    sig.add(s);
  }
  return sig;
}

Signature Signature::heyting() {
  Signature sig;
  sig.base = LatticeKind::BDL;
  sig.add({"imp", 2, {Tonicity::Anti, Tonicity::Iso}, {A_JOIN, P_MEET}, DistLaw::Eq52, 0});
  return sig;
}

Signature Signature::lambek() {
  Signature sig;
  sig.base = LatticeKind::DL;
  sig.add({"unit", 0, {}, {}, DistLaw::None, 0});
  sig.add({"star", 2, {Tonicity::Iso, Tonicity::Iso}, {P_JOIN, P_JOIN}, DistLaw::Eq51, 0});
  sig.add({"under", 2, {Tonicity::Anti, Tonicity::Iso}, {A_JOIN, P_MEET}, DistLaw::Eq52, 0});
  sig.add({"over", 2, {Tonicity::Iso, Tonicity::Anti}, {P_MEET, A_JOIN}, DistLaw::Eq52, 0});
  return sig;
}

} // namespace coalcan
