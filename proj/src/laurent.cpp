#include "fpb/laurent.hpp"

#include <sstream>

namespace fpb {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("laurent: coefficient overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("laurent: coefficient overflow");
    return r;
}

}  // namespace

LaurentPoly::LaurentPoly(long long constant) {
    if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(long long coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[exp] = coeff;
    return p;
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw std::logic_error("laurent: min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw std::logic_error("laurent: max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

long long LaurentPoly::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? 0 : it->second;
}

void LaurentPoly::set_coeff(int exp, long long c) {
    if (c == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = c;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.coeffs_) r.set_coeff(e, checked_add(r.coeff(e), c));
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, c1] : coeffs_)
        for (auto& [e2, c2] : o.coeffs_)
            r.set_coeff(e1 + e2, checked_add(r.coeff(e1 + e2), checked_mul(c1, c2)));
    return r;
}

LaurentPoly LaurentPoly::shifted(int dexp) const {
    LaurentPoly r;
    for (auto& [e, c] : coeffs_) r.coeffs_[e + dexp] = c;
    return r;
}

LaurentPoly LaurentPoly::inverted() const {
    LaurentPoly r;
    for (auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly r(1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

long long LaurentPoly::evaluate(long long x) const {
    if (is_zero()) return 0;
    if ((x == 0 && min_exp() < 0)) throw std::domain_error("laurent: evaluate at 0 with negative exponent");
    long long acc = 0;
    for (auto& [e, c] : coeffs_) {
        long long term = c;
        long long base = x, n = e;
        if (n < 0) {
            if (x != 1 && x != -1) throw std::domain_error("laurent: negative exponent at non-unit");
            base = x;  // x^-1 == x for units
            n = -n;
        }
        for (long long i = 0; i < n; ++i) term = checked_mul(term, base);
        acc = checked_add(acc, term);
    }
    return acc;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::domain_error("laurent: division by zero");
    LaurentPoly rem = *this, quot;
    const int dmax = d.max_exp();
    const long long dlead = d.coeff(dmax);
    const int qlow = is_zero() ? 0 : min_exp() - d.min_exp();
    while (!rem.is_zero()) {
        const int rmax = rem.max_exp();
        const long long rlead = rem.coeff(rmax);
        if (rlead % dlead != 0) throw std::domain_error("laurent: inexact division");
        if (rmax - dmax < qlow) throw std::domain_error("laurent: inexact division");
        LaurentPoly m = monomial(rlead / dlead, rmax - dmax);
        quot = quot + m;
        rem = rem - m * d;
        if (!rem.is_zero() && rem.max_exp() >= rmax)
            throw std::logic_error("laurent: division does not terminate");
    }
    return quot;
}

bool LaurentPoly::lex_less(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return !is_zero() < !o.is_zero();
    if (span() != o.span()) return span() < o.span();
    auto a = terms(), b = o.terms();
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int ea = a[i].first - min_exp(), eb = b[i].first - o.min_exp();
        if (ea != eb) return ea < eb;
        if (a[i].second != b[i].second) return a[i].second < b[i].second;
    }
    if (a.size() != b.size()) return a.size() < b.size();
    return min_exp() < o.min_exp();
}

std::vector<std::pair<int, long long>> LaurentPoly::terms() const {
    return {coeffs_.begin(), coeffs_.end()};
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, c] : coeffs_) {
        long long a = c;
        if (first) {
            if (a < 0) out << "-";
        } else {
            out << (a < 0 ? "-" : "+");
        }
        first = false;
        long long mag = a < 0 ? -a : a;
        if (mag != 1 || e == 0) out << mag;
        if (e != 0) {
            out << var;
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace fpb
