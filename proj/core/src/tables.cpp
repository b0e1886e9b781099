#include "coalcan/tables.hpp"

namespace coalcan {

// Transcription of the printed composition tables. Rows are the inner map g,
// columns the outer map f, both in kPropOrder. Two property cells marked (*)
// are corrected relative to the printed source, which swapped them against
// the symmetric cells; the uncorrected values are refuted by the exhaustive
// finite-scale oracle (see the table tests).

// clang-format off
static const bool kStability[kPropCount][kPropCount] = {
  //               f: iso    meet   join   ddm    udj    anti   a-m    a-j    a-ddm  a-udj
  /* g iso     */ { false, false, true,  false, true,  false, false, false, false, false },
  /* g meet    */ { true,  true,  true,  true,  true,  false, false, false, false, false },
  /* g join    */ { false, false, true,  false, true,  true,  true,  true,  true,  true  },
  /* g ddmeet  */ { false, false, true,  false, true,  false, false, false, false, false },
  /* g udjoin  */ { false, false, true,  false, true,  false, false, false, false, false },
  /* g anti    */ { false, false, true,  false, true,  false, false, false, false, false },
  /* g a-meet  */ { false, false, true,  false, true,  true,  true,  true,  true,  true  },
  /* g a-join  */ { true,  true,  true,  true,  true,  false, false, false, false, false },
  /* g a-ddm   */ { false, false, true,  false, true,  false, false, false, false, false },
  /* g a-udj   */ { false, false, true,  false, true,  false, false, false, false, false },
};

static const PropBit kProperty[kPropCount][kPropCount] = {
  //               f: iso     meet      join      ddm       udj       anti    a-m       a-j       a-ddm     a-udj
  /* g iso     */ { P_ISO,  P_ISO,    P_ISO,    P_ISO,    P_ISO,    A_ISO,  A_ISO,    A_ISO,    A_ISO,    A_ISO   },
  /* g meet    */ { P_ISO,  P_MEET,   P_ISO,    P_DDMEET, P_ISO,    A_ISO,  A_MEET,   A_ISO,    A_DDMEET, A_ISO   },
  /* g join    */ { P_ISO,  P_ISO,    P_JOIN,   P_ISO,    P_UDJOIN, A_ISO,  A_ISO,    A_JOIN,   A_ISO,    A_UDJOIN},
  /* g ddmeet  */ { P_ISO,  P_DDMEET, P_ISO,    P_DDMEET, P_ISO,    A_ISO,  A_DDMEET, A_ISO,    A_DDMEET, A_ISO   },
  /* g udjoin  */ { P_ISO,  P_ISO,    P_UDJOIN, P_ISO,    P_UDJOIN, A_ISO,  A_ISO,    A_UDJOIN, A_ISO/*(*)*/, A_UDJOIN},
  /* g anti    */ { A_ISO,  A_ISO,    A_ISO,    A_ISO,    A_ISO,    P_ISO,  P_ISO,    P_ISO,    P_ISO,    P_ISO   },
  /* g a-meet  */ { A_ISO,  A_ISO,    A_MEET,   A_ISO,    A_DDMEET, P_ISO,  P_ISO,    P_MEET/*(*)*/, P_ISO, P_DDMEET},
  /* g a-join  */ { A_ISO,  A_JOIN,   A_ISO,    A_UDJOIN, A_ISO,    P_ISO,  P_JOIN,   P_ISO,    P_UDJOIN, P_ISO   },
  /* g a-ddm   */ { A_ISO,  A_ISO,    A_DDMEET, A_ISO,    A_DDMEET, P_ISO,  P_ISO,    P_DDMEET, P_ISO,    P_DDMEET},
  /* g a-udj   */ { A_ISO,  A_UDJOIN, A_ISO,    A_UDJOIN, A_ISO,    P_ISO,  P_UDJOIN, P_ISO,    P_UDJOIN, P_ISO   },
};
// clang-format on

bool stability_inherits(PropBit g_prop, PropBit f_prop) {
  return kStability[prop_index(g_prop)][prop_index(f_prop)];
}

PropBit property_inherits(PropBit g_prop, PropBit f_prop) {
  return kProperty[prop_index(g_prop)][prop_index(f_prop)];
}

std::string stability_table_serialized() {
  std::string s;
  for (int g = 0; g < kPropCount; ++g) {
    for (int f = 0; f < kPropCount; ++f) s += kStability[g][f] ? '1' : '0';
    s += '\n';
  }
  return s;
}

std::string property_table_serialized() {
  std::string s;
  for (int g = 0; g < kPropCount; ++g) {
    for (int f = 0; f < kPropCount; ++f) {
      if (f) s += ' ';
      s += prop_name(kProperty[g][f]);
    }
    s += '\n';
  }
  return s;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace coalcan
