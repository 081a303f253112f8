#pragma once

#include "fpb/diagram.hpp"
#include "fpb/laurent.hpp"

namespace fpb {

// Kauffman bracket in the variable A, normalized so the unknot has bracket 1.
// The sweep engine contracts the diagram left to right over noncrossing
// matchings of the frontier; cost is polynomial in the crossing number for
// bounded frontier width.
LaurentPoly sweep_bracket(const std::vector<SweepEvent>& events);
LaurentPoly kauffman_bracket(const ArcDiagram& d);

// Plain 2^c Kauffman state sum over a segment-wired diagram; throws above 24
// crossings.
LaurentPoly naive_bracket(const CrossingDiagram& d);

// Jones polynomial of a knot in t, from a normalized bracket and the writhe;
// throws if the corrected exponents are not multiples of four (links).
LaurentPoly jones_from_bracket(const LaurentPoly& bracket_a, int writhe);
LaurentPoly jones(const ArcDiagram& d);

}  // namespace fpb
