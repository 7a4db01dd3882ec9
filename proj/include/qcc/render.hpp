#pragma once

#include <string>

#include "qcc/torus.hpp"

namespace qcc {

std::string monomial_text(const ExponentVec& a);

// Canonical text: terms lex-descending, e.g. "X^(-2,1) + (q^(-1/2) + q^(1/2))*X^(-2,0)".
std::string to_text(const TorusElement& x);
std::string to_latex(const TorusElement& x);

// Accepts the canonical text plus juxtaposition, "X_k" generators (1-based)
// and constants; terms may appear in any order.
TorusElement parse_element(const FormPtr& form, const std::string& text);

}  // namespace qcc
