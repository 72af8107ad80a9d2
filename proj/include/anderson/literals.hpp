#pragma once

#include <string>
#include <string_view>

#include "anderson/loc_ideal.hpp"

namespace anderson {

/// "Z6", "Z4xZ9" (case-insensitive, 'x' separates factors).
RingSpec parse_ring(std::string_view text);
std::string format_ring(const RingSpec& ring);

/// "5" for single-factor rings, "1:0:2" coordinate tuples for products.
/// A plain integer over a product ring embeds diagonally.
RingElem parse_elem(const RingSpec& ring, std::string_view text);
std::string format_elem(const RingElem& x);

/// "2X^2+X+3"; product-ring coefficients are parenthesized: "(1:0)X^2".
Poly parse_poly(const RingSpec& ring, std::string_view text);
std::string format_poly(const Poly& p);

/// "A", "Abar", "N", "U", "Utilde" (case-insensitive).
MultSetKind parse_kind(std::string_view text);
std::string format_kind(MultSetKind kind);

/// "(X+2)/(2X+1)@Z6:A"; the denominator part may be omitted for p/1.
LocElem parse_fraction(std::string_view text);
std::string format_fraction(const LocElem& x);

/// "(g1,g2)" extension of (g1,g2); "(g1,g2)+X" the I-plus-X shape;
/// "[p1; p2]" a General-shape ideal with polynomial generators.
LocIdeal parse_ideal_spec(const RingSpec& ring, std::string_view text,
                          MembershipPolicy policy = {});
std::string format_ideal_spec(const LocIdeal& ideal);

}  // namespace anderson
