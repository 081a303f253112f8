#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpb {

// Exact one-variable integer Laurent polynomial.  The variable meaning is
// contextual (t for Alexander, A for the bracket, q for Jones); exponents may
// be negative.  No zero coefficients are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(long long constant);
    static LaurentPoly monomial(long long coeff, int exp);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    int min_exp() const;  // throws on zero polynomial
    int max_exp() const;
    int span() const { return is_zero() ? 0 : max_exp() - min_exp(); }
    long long coeff(int exp) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return coeffs_ != o.coeffs_; }

    LaurentPoly shifted(int dexp) const;       // multiply by x^dexp
    LaurentPoly inverted() const;              // x -> x^-1
    LaurentPoly pow(unsigned k) const;

    // Evaluate at an integer point; throws on overflow.
    long long evaluate(long long x) const;

    // Exact division; throws if the divisor does not divide evenly.
    LaurentPoly divided_by(const LaurentPoly& d) const;

    // Coefficient vector ordered by ascending exponent, for lexicographic
    // comparison of mirror images.  Compares (span, coeff vector, min_exp).
    bool lex_less(const LaurentPoly& o) const;

    // Text form like "-t^-4+t^-3+t^-1".
    std::string to_string(const std::string& var) const;
    // [[exp, coeff], ...] ascending by exponent.
    std::vector<std::pair<int, long long>> terms() const;

    void set_coeff(int exp, long long c);

private:
    std::map<int, long long> coeffs_;
};

}  // namespace fpb
