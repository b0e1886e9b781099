#pragma once

#include "coalcan/signature.hpp"
#include "coalcan/term.hpp"

namespace coalcan {

struct ParseError : InputError {
  explicit ParseError(const std::string& w) : InputError(w) {}
};

// ASCII term grammar: variables [a-z][a-z0-9]*, '!' '&' '|' '->' 'bot' 'top',
// applications name(t1,...,tn), nabla{...} / nabla(...), and{...} / or{...}.
// '->' desugars to !a|b and is only admitted on BA bases.
TermPtr parse_term(const std::string& text, const Signature& sig);

Signature parse_signature(const std::string& text); // .sig file body

} // namespace coalcan
