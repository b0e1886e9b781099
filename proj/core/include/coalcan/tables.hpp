#pragma once

#include <cstdint>
#include <string>

#include "coalcan/properties.hpp"

namespace coalcan {

// Stability inheritance of unary terms under composition f∘g: row indexed by
// the inner map g's property, column by the outer map f's. True = the
// composite's sigma-extension is the composition of the extensions.
bool stability_inherits(PropBit g_prop, PropBit f_prop);

// Property inheritance under composition f∘g: the property enjoyed by the
// composite. Every cell carries exactly one label.
PropBit property_inherits(PropBit g_prop, PropBit f_prop);

// Canonical serializations used by the transcription checksum test.
std::string stability_table_serialized();
std::string property_table_serialized();
uint64_t fnv1a(const std::string& s);

} // namespace coalcan
