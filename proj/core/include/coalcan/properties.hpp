#pragma once

#include <cstdint>
#include <string>

namespace coalcan {

// The ten (anti-)preservation properties the composition tables speak about.
// P_* are the preservation column/row labels, A_* the anti-preservation ones;
// *_ISO / A_ISO stand for plain isotonicity / antitonicity.
enum PropBit : uint16_t {
  P_ISO = 1 << 0,
  P_MEET = 1 << 1,   // preserves non-empty meets
  P_JOIN = 1 << 2,   // preserves non-empty joins
  P_DDMEET = 1 << 3, // preserves down-directed meets
  P_UDJOIN = 1 << 4, // preserves up-directed joins
  A_ISO = 1 << 5,
  A_MEET = 1 << 6,   // anti-preserves non-empty meets
  A_JOIN = 1 << 7,   // anti-preserves non-empty joins
  A_DDMEET = 1 << 8,
  A_UDJOIN = 1 << 9,
};

constexpr int kPropCount = 10;

// order used by the composition tables
constexpr PropBit kPropOrder[kPropCount] = {P_ISO, P_MEET,  P_JOIN, P_DDMEET, P_UDJOIN,
                                            A_ISO, A_MEET,  A_JOIN, A_DDMEET, A_UDJOIN};

inline int prop_index(PropBit p) {
  for (int i = 0; i < kPropCount; ++i)
    if (kPropOrder[i] == p) return i;
  return -1;
}

// close a flag set under the trivial implications (meet-preservation implies
// preservation of down-directed meets and isotonicity, etc.)
inline uint16_t close_props(uint16_t f) {
  uint16_t prev = 0;
  while (prev != f) {
    prev = f;
    if (f & P_MEET) f |= P_DDMEET;
    if (f & P_JOIN) f |= P_UDJOIN;
    if (f & (P_MEET | P_JOIN | P_DDMEET | P_UDJOIN)) f |= P_ISO;
    if (f & A_MEET) f |= A_DDMEET;
    if (f & A_JOIN) f |= A_UDJOIN;
    if (f & (A_MEET | A_JOIN | A_DDMEET | A_UDJOIN)) f |= A_ISO;
  }
  return f;
}

std::string prop_name(PropBit p);
std::string props_to_string(uint16_t flags);
uint16_t prop_from_name(const std::string& s); // 0 if unknown

} // namespace coalcan
