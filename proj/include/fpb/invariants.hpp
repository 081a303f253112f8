#pragma once

#include <string>
#include <vector>

#include "fpb/basket.hpp"
#include "fpb/laurent.hpp"

namespace fpb {

// Mirror-insensitive invariant tuple used for classification.  jones_canon is
// the lexicographically smaller of V(q) and V(1/q); alexander is the
// symmetric normalization with Delta(1) = 1; signature_abs drops the sign
// lost by mirroring; torsion lists the invariant factors (> 1, in
// divisibility order) of the first homology of the double branched cover,
// which separates knots the other four fields cannot (the group's order is
// the determinant, but its factor structure is extra information).
struct Fingerprint {
    LaurentPoly jones_canon;
    LaurentPoly alexander;
    long long determinant = 1;
    int signature_abs = 0;
    std::vector<long long> torsion;

    bool operator==(const Fingerprint& o) const = default;
};

// det(V - t V^T), normalized to the symmetric representative with
// Delta(1) = 1.  Throws if the determinant vanishes or Delta(1) is not a
// unit (the input was not a knot Seifert matrix).
LaurentPoly alexander_from_seifert(const std::vector<std::vector<int>>& v);
int signature_from_seifert(const std::vector<std::vector<int>>& v);

// Invariant factors of H_1 of the double branched cover, presented by
// V + V^T.
std::vector<long long> torsion_from_seifert(const std::vector<std::vector<int>>& v);

LaurentPoly alexander(const BasketCode& code);
long long determinant(const BasketCode& code);
int signature(const BasketCode& code);

LaurentPoly jones_canonical(const LaurentPoly& jones);

// Knots only; throws on codes with more than one boundary component.
Fingerprint fingerprint(const BasketCode& code);

std::string fingerprint_key(const Fingerprint& f);

}  // namespace fpb
