#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace fpb {

// A flat plumbing basket code: a double-occurrence word over band labels
// 1..n.  Position order is the order of band feet along the disk boundary;
// the label of a band is its page, and where two bands cross in projection
// the higher page lies in front.
struct BasketCode {
    std::vector<int> word;

    int bands() const { return static_cast<int>(word.size() / 2); }
    bool operator==(const BasketCode& o) const = default;
    bool operator<(const BasketCode& o) const { return word < o.word; }
};

struct SurfaceStats {
    int n = 0;
    int euler = 1;
    int mu = 1;
    int genus = 0;
};

// Composition of the four code symmetries: cyclic start shift, reading
// reversal, page rotation (sigma^m) and page reversal (tau).  Position maps
// are applied before label maps; the two kinds commute.
struct SymmetryElement {
    int start_rotation = 0;
    bool reading_reversed = false;
    int page_rotation = 0;
    bool page_reversed = false;
};

// Accepts a digit string for n <= 9 or a bracketed/space/comma separated
// integer list.  Throws std::invalid_argument on malformed input or a word
// that is not a double-occurrence word over 1..n.
BasketCode parse_code(const std::string& text);
std::string code_to_string(const BasketCode& code);
void validate_code(const BasketCode& code);

bool interleaved(const BasketCode& code, int a, int b);

// Number of boundary components of the basket surface, by traversal of the
// disk-boundary arcs and band edges.
int component_count(const BasketCode& code);

SurfaceStats surface_stats(const BasketCode& code);

// (2n)!/2^n
std::uint64_t code_count(int n);

// Emits every length-2n double-occurrence word over {1..n} in lexicographic
// order; returns the total.  n must be in [0, 8].
std::uint64_t enumerate_codes(int n, const std::function<void(const BasketCode&)>& fn);

// As above but restricted to words extending the given prefix.
void enumerate_codes_with_prefix(int n, const std::vector<int>& prefix,
                                 const std::function<void(const BasketCode&)>& fn);

BasketCode symmetry_apply(const BasketCode& code, const SymmetryElement& g);
std::vector<BasketCode> symmetry_orbit(const BasketCode& code);
BasketCode canonical_form(const BasketCode& code);
void canonical_form_inplace(const BasketCode& code, BasketCode& out, BasketCode& scratch);

// Type I move sites: unordered pairs {a, b} where the cyclic word contains
// the consecutive factor "b a b" — band b's two feet immediately flank one
// foot of band a, so the pair deplumbs away.  With page_refined set, a site
// is kept only if no band interleaving a has page strictly between page(a)
// and page(b).  The shipped default (unrefined) was fixed by calibrating the
// 6-band census stage counts and checked by fingerprint preservation.
inline constexpr bool kTypeOnePageRefined = false;
std::vector<std::pair<int, int>> find_type_one_moves(const BasketCode& code,
                                                     bool page_refined = kTypeOnePageRefined);
bool has_type_one_move(const BasketCode& code, bool page_refined = kTypeOnePageRefined);
BasketCode apply_type_one(const BasketCode& code, std::pair<int, int> move);
BasketCode reduce_type_one(const BasketCode& code);

// Seifert matrix of the basket surface: zero diagonal, and for an
// interleaved pair with pages i < j a single entry V[i][j] = -1 when band i's
// first foot precedes band j's, +1 otherwise.
std::vector<std::vector<int>> seifert_matrix(const BasketCode& code);

}  // namespace fpb
