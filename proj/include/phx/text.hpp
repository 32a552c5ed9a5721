#ifndef PHX_TEXT_HPP
#define PHX_TEXT_HPP

// Text grammar:
//
//   expression := "{}" | union
//   union      := conj ("|" conj)*
//   conj       := "[" [term ("&" term)*] "]"
//   term       := NAME "=" LABEL
//               | NAME "!=" "{" LABEL ("," LABEL)* "}"
//               | NAME "in" "{" LABEL ("," LABEL)* "}"
//
// NAME and LABEL are identifiers ([A-Za-z0-9_.-]+) or double-quoted strings
// with \" and \\ escapes. "[]" is the universe, "{}" the empty category.

#include "phx/expression.hpp"
#include "phx/polyhierarchy.hpp"

#include <string>
#include <string_view>

namespace phx {

/// Throws SyntaxError, UnknownCriterion or UnknownBranch. A conjunction with
/// "in" terms becomes a branch-union collection; a union containing one is
/// expanded to polynomial form.
Expression parse(std::string_view text, const GeneratingPolyhierarchy& gp);

/// Attribute list for object assignment: "C1=2,C3=1", "" or a bracketed
/// conjunction of positive terms.
SimpleCollection parse_assignment(std::string_view text, const GeneratingPolyhierarchy& gp);

std::string format(const Expression& e, const GeneratingPolyhierarchy& gp);
std::string format(const Attribute& a, const GeneratingPolyhierarchy& gp);

/// Returns `text` unchanged if it is a bare identifier, otherwise quoted.
std::string quote_if_needed(std::string_view text);

} // namespace phx

#endif
