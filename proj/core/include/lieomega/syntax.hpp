#pragma once

// Text forms. Words are primes separated by spaces, an operator applied to
// its arguments is written P(u, v); bracket trees write a bracket as (a b);
// polynomials are sums of terms "3/2*l^2*(x2 x1)", where l is lambda. The
// star of a star-word and the slot of a marked tree print as '*'.

#include <string>
#include <string_view>
#include <vector>

#include "lieomega/lie_poly.hpp"

namespace lieomega {

std::string to_string(const OmegaWord& u);
std::string to_string(const StarWord& pi);
std::string to_string(const Tree& t);
/// Terms in descending order, one term per power of lambda; "0" for zero.
std::string to_string(const LiePoly& p);
std::string to_string(const AssocPoly& p);

/// All of these throw ParseError with the byte offset of the problem.
OmegaWord parse_word(std::string_view text, const Alphabet& alphabet);
Tree parse_tree(std::string_view text, const Alphabet& alphabet);
LiePoly parse_poly(std::string_view text, const Alphabet& alphabet);
/// A word with exactly one '*' standing for the hole.
StarWord parse_star_word(std::string_view text, const Alphabet& alphabet);
Rational parse_rational(std::string_view text);
/// A polynomial in l, as printed by Coefficient::to_string.
Coefficient parse_coefficient(std::string_view text);

/// One polynomial per nonempty line; '#' starts a comment. The message of a
/// ParseError names the line.
std::vector<LiePoly> parse_rules(std::string_view text, const Alphabet& alphabet);

}  // namespace lieomega
