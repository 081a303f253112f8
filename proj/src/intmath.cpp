#include "fpb/intmath.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace fpb {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct Frac {
    i128 num = 0, den = 1;

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) {
            den = 1;
            return;
        }
        i128 g = gcd128(num, den);
        num /= g;
        den /= g;
    }
    Frac() = default;
    Frac(i128 n) : num(n) {}
    Frac(i128 n, i128 d) : num(n), den(d) { reduce(); }
    Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
    Frac operator-(const Frac& o) const { return Frac(num * o.den - o.num * den, den * o.den); }
    Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
    Frac operator/(const Frac& o) const { return Frac(num * o.den, den * o.num); }
    bool zero() const { return num == 0; }
    int sign() const { return num == 0 ? 0 : (num > 0 ? 1 : -1); }
};

}  // namespace

int symmetric_signature(std::vector<std::vector<long long>> m) {
    const size_t n = m.size();
    std::vector<std::vector<Frac>> a(n, std::vector<Frac>(n));
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("symmetric_signature: not square");
        for (size_t j = 0; j < n; ++j) {
            if (m[i][j] != m[j][i]) throw std::invalid_argument("symmetric_signature: not symmetric");
            a[i][j] = Frac(m[i][j]);
        }
    }

    int sig = 0;
    for (size_t k = 0; k < n; ++k) {
        if (a[k][k].zero()) {
            size_t j = k + 1;
            for (; j < n; ++j)
                if (!a[j][j].zero()) break;
            if (j < n) {
                std::swap(a[k], a[j]);
                for (size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][j]);
            } else {
                // all remaining diagonal entries are zero
                size_t r = k, c = 0;
                bool found = false;
                for (r = k; r < n && !found; ++r)
                    for (c = r + 1; c < n; ++c)
                        if (!a[r][c].zero()) {
                            found = true;
                            break;
                        }
                if (!found) break;  // remaining block is zero
                --r;
                // add row/col c into row/col r to expose a nonzero pivot
                for (size_t i = 0; i < n; ++i) a[r][i] = a[r][i] + a[c][i];
                for (size_t i = 0; i < n; ++i) a[i][r] = a[i][r] + a[i][c];
                if (r != k) {
                    std::swap(a[k], a[r]);
                    for (size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][r]);
                }
            }
        }
        if (a[k][k].zero()) break;
        sig += a[k][k].sign();
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i][k].zero()) continue;
            Frac f = a[i][k] / a[k][k];
            for (size_t j = k; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
            for (size_t j = k; j < n; ++j) a[j][i] = a[j][i] - f * a[j][k];
        }
    }
    return sig;
}

std::vector<long long> invariant_factors(std::vector<std::vector<long long>> m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("invariant_factors: not square");
    std::vector<long long> diag;
    for (int k = 0; k < n; ++k) {
        int pi = -1, pj = -1;
        for (int i = k; i < n && pi < 0; ++i)
            for (int j = k; j < n; ++j)
                if (m[i][j]) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        std::swap(m[k], m[pi]);
        for (int i = 0; i < n; ++i) std::swap(m[i][k], m[i][pj]);
        bool again = true;
        while (again) {
            again = false;
            for (int i = k + 1; i < n; ++i) {
                long long q = m[i][k] / m[k][k];
                if (q)
                    for (int j = k; j < n; ++j) m[i][j] -= q * m[k][j];
                if (m[i][k]) {
                    std::swap(m[k], m[i]);
                    again = true;
                }
            }
            for (int j = k + 1; j < n; ++j) {
                long long q = m[k][j] / m[k][k];
                if (q)
                    for (int i = k; i < n; ++i) m[i][j] -= q * m[i][k];
                if (m[k][j]) {
                    for (int i = 0; i < n; ++i) std::swap(m[i][k], m[i][j]);
                    again = true;
                }
            }
        }
        diag.push_back(std::llabs(m[k][k]));
    }
    // enforce d1 | d2 | ... by repeated gcd/lcm exchanges
    for (size_t a = 0; a < diag.size(); ++a)
        for (size_t b = a + 1; b < diag.size(); ++b) {
            long long g = std::gcd(diag[a], diag[b]);
            long long l = g ? diag[a] / g * diag[b] : 0;
            diag[a] = g;
            diag[b] = l;
        }
    std::vector<long long> out;
    for (long long d : diag)
        if (d > 1) out.push_back(d);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fpb
