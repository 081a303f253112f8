#include "fpb/invariants.hpp"

#include <cstdlib>
#include <stdexcept>

#include "fpb/bracket.hpp"
#include "fpb/diagram.hpp"
#include "fpb/intmath.hpp"

namespace fpb {

namespace {

// Determinant of a Laurent-polynomial matrix by subset dynamic programming
// over columns; fine for the small matrices a basket produces.
LaurentPoly poly_det(const std::vector<std::vector<LaurentPoly>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return LaurentPoly(1);
    std::vector<LaurentPoly> dp(1u << n);
    dp[0] = LaurentPoly(1);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int row = __builtin_popcount(mask) - 1;
        LaurentPoly acc;
        int sign = 1;
        for (int col = 0; col < n; ++col) {
            if (!((mask >> col) & 1u)) continue;
            if (!m[row][col].is_zero()) {
                LaurentPoly term = m[row][col] * dp[mask & ~(1u << col)];
                acc = sign > 0 ? acc + term : acc - term;
            }
            sign = -sign;
        }
        dp[mask] = acc;
    }
    return dp[(1u << n) - 1];
}

}  // namespace

LaurentPoly alexander_from_seifert(const std::vector<std::vector<int>>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(v[i].size()) != n)
            throw std::invalid_argument("alexander: matrix not square");
        for (int j = 0; j < n; ++j) {
            LaurentPoly e;
            if (v[i][j]) e.set_coeff(0, v[i][j]);
            if (v[j][i]) e.set_coeff(1, e.coeff(1) - v[j][i]);
            m[i][j] = e;
        }
    }
    LaurentPoly p = poly_det(m);
    if (p.is_zero()) throw std::invalid_argument("alexander: determinant vanishes (link input?)");
    int lo = p.min_exp(), hi = p.max_exp();
    if ((lo + hi) % 2 != 0)
        throw std::logic_error("alexander: no symmetric normalization");
    p = p.shifted(-(lo + hi) / 2);
    long long at_one = p.evaluate(1);
    if (at_one == -1)
        p = -p;
    else if (at_one != 1)
        throw std::invalid_argument("alexander: Delta(1) is not a unit (link input?)");
    return p;
}

int signature_from_seifert(const std::vector<std::vector<int>>& v) {
    const size_t n = v.size();
    std::vector<std::vector<long long>> s(n, std::vector<long long>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) s[i][j] = static_cast<long long>(v[i][j]) + v[j][i];
    return symmetric_signature(std::move(s));
}

std::vector<long long> torsion_from_seifert(const std::vector<std::vector<int>>& v) {
    const size_t n = v.size();
    std::vector<std::vector<long long>> s(n, std::vector<long long>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) s[i][j] = static_cast<long long>(v[i][j]) + v[j][i];
    return invariant_factors(std::move(s));
}

LaurentPoly alexander(const BasketCode& code) {
    return alexander_from_seifert(seifert_matrix(code));
}

long long determinant(const BasketCode& code) {
    return std::llabs(alexander(code).evaluate(-1));
}

int signature(const BasketCode& code) {
    return signature_from_seifert(seifert_matrix(code));
}

LaurentPoly jones_canonical(const LaurentPoly& jones) {
    LaurentPoly inv = jones.inverted();
    return inv.lex_less(jones) ? inv : jones;
}

Fingerprint fingerprint(const BasketCode& code) {
    if (component_count(code) != 1)
        throw std::invalid_argument("fingerprint: code bounds a link, not a knot");
    Fingerprint f;
    const std::vector<std::vector<int>> v = seifert_matrix(code);
    f.alexander = alexander_from_seifert(v);
    f.determinant = std::llabs(f.alexander.evaluate(-1));
    f.signature_abs = std::abs(signature_from_seifert(v));
    f.torsion = torsion_from_seifert(v);
    f.jones_canon = jones_canonical(jones(build_arc_diagram(code)));
    return f;
}

std::string fingerprint_key(const Fingerprint& f) {
    std::string h;
    for (long long d : f.torsion) h += std::to_string(d) + ".";
    if (h.empty()) h = "1";
    return "J=" + f.jones_canon.to_string("q") + ";A=" + f.alexander.to_string("t") +
           ";D=" + std::to_string(f.determinant) + ";S=" + std::to_string(f.signature_abs) +
           ";H=" + h;
}

}  // namespace fpb
