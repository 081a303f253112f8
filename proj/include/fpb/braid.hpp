#pragma once

#include <string>
#include <vector>

#include "fpb/basket.hpp"

namespace fpb {

// A braid word on a fixed strand count; letters are signed generator indices
// (+i for sigma_i, -i for its inverse).
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const BraidWord& o) const = default;
};

// Accepts either signed integers ("2 -1 -2 -2 -2 -1") or s-tokens with a
// prime for the inverse ("s2 s1' s2' s2' s2' s1'").
BraidWord parse_braid(const std::string& text, int strands);
std::string braid_to_string(const BraidWord& braid);

// Number of components of the braid closure (cycles of the underlying
// permutation).
int closed_components(const BraidWord& braid);

// Braid-to-basket conversion: the first strands-1 letters must touch every
// generator exactly once and are absorbed into the disk; every later letter
// becomes one band, or three when its sign matches the prefix letter of the
// same generator (a page-swap pair flips the plumbing sense).  The returned
// code has |W| + 2p bands.
BasketCode fhk_code(const BraidWord& braid);

// m + 2p for a word in the normal form sigma_{n-1} ... sigma_1 W, where m =
// |W| and p counts positive letters of W.  Throws if the word does not start
// with that positive descending prefix.
int bound_fhk(const BraidWord& braid);

// The band-count bound m + n - 1 - 4*gamma + 2*sum ps(sigma_i^{eps_i}),
// evaluated verbatim: ps counts occurrences of a signed letter, gamma counts
// generators appearing with both signs, and eps_i is +1 when
// 1 <= ps(sigma_i) <= ps(sigma_i^-1) or ps(sigma_i^-1) = 0, else -1.
int bound_kim(const BraidWord& braid);

}  // namespace fpb
