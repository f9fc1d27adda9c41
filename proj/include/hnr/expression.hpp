#ifndef HNR_EXPRESSION_HPP
#define HNR_EXPRESSION_HPP

#include <string>
#include <string_view>

#include "hnr/algebra.hpp"
#include "hnr/basis.hpp"

namespace hnr {

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := 't'uint | 'T'uint | 'g'uint | 'e'uint | 'b[' uint (',' uint)* ']'
///           | rational | '(' expr ')'
///   rational := '-'? uint ('/' uint)?
/// Whitespace is ignored. Throws SyntaxError (with the offset) on
/// malformed text and IndexOutOfRange for generators outside the context.
Element parse_element(std::string_view text, const AlgebraPtr& alg);

/// Canonical text in the requested basis, e.g. "3/2*b[1,2]*g1 - b[2,2]".
/// The output parses back to the same element.
std::string format_element(const Element& x, Basis basis = Basis::bg);

}  // namespace hnr

#endif  // HNR_EXPRESSION_HPP
