#pragma once

#include <vector>

#include "fpb/diagram.hpp"
#include "fpb/invariants.hpp"
#include "fpb/laurent.hpp"

namespace fpb {

// Over/under visit sequence decoded from a DT sequence (signs pending
// realization, so GaussEntry::sign is 0).
GaussCode gauss_from_dt(const std::vector<int>& dt);

// Planar realization of a knot Gauss code: searches the 2^(c-1) local
// rotation choices for one whose face count satisfies Euler's formula, then
// derives the crossing signs.  The result is well defined up to mirror
// image.  Throws std::invalid_argument if the code is not realizable.
CrossingDiagram realize_gauss(const GaussCode& gauss);
CrossingDiagram realize_dt(const std::vector<int>& dt);

// Alexander polynomial from the Wirtinger presentation (Fox calculus,
// fraction-free elimination), symmetric-normalized with Delta(1) = 1.
LaurentPoly alexander_from_diagram(const CrossingDiagram& d);

// Knot signature via the Goeritz matrix with the Gordon-Litherland
// correction term.  Sign is meaningful only up to the realization's mirror
// ambiguity.
int signature_from_diagram(const CrossingDiagram& d);

// Invariant factors of H_1 of the double branched cover, from the Goeritz
// matrix of the same checkerboard coloring.
std::vector<long long> torsion_from_diagram(const CrossingDiagram& d);

LaurentPoly jones_from_diagram(const CrossingDiagram& d);

// Mirror-canonical invariant tuple; agrees with fingerprint(code) whenever
// the diagram presents the same knot as the code.
Fingerprint fingerprint_from_diagram(const CrossingDiagram& d);

}  // namespace fpb
