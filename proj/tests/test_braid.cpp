#include "doctest.h"

#include <algorithm>
#include <random>

#include "fpb/basket.hpp"
#include "fpb/braid.hpp"
#include "fpb/invariants.hpp"
#include "fpb/laurent.hpp"

using namespace fpb;

namespace {

using Mat = std::vector<std::vector<LaurentPoly>>;

Mat identity(int k) {
    Mat m(k, std::vector<LaurentPoly>(k));
    for (int i = 0; i < k; ++i) m[i][i] = LaurentPoly(1);
    return m;
}

Mat mul(const Mat& a, const Mat& b) {
    int k = static_cast<int>(a.size());
    Mat r(k, std::vector<LaurentPoly>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) r[i][j] = r[i][j] + a[i][l] * b[l][j];
    return r;
}

// reduced Burau image of a single generator
Mat burau_gen(int strands, int letter) {
    int k = strands - 1;
    int i = std::abs(letter);
    Mat m = identity(k);
    LaurentPoly t = LaurentPoly::monomial(1, 1);
    if (letter > 0) {
        m[i - 1][i - 1] = -t;
        if (i - 2 >= 0) m[i - 1][i - 2] = t;
        if (i < k) m[i - 1][i] = LaurentPoly(1);
    } else {
        LaurentPoly tinv = LaurentPoly::monomial(1, -1);
        m[i - 1][i - 1] = -tinv;
        if (i - 2 >= 0) m[i - 1][i - 2] = LaurentPoly(1);
        if (i < k) m[i - 1][i] = tinv;
    }
    return m;
}

LaurentPoly det2(const Mat& m) {
    if (m.size() == 1) return m[0][0];
    REQUIRE(m.size() == 2);
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

// Alexander polynomial of the closure, up to units, via the Burau quotient
LaurentPoly burau_alexander(const BraidWord& b) {
    Mat rho = identity(b.strands - 1);
    for (int letter : b.letters) rho = mul(rho, burau_gen(b.strands, letter));
    Mat diff = rho;
    for (size_t i = 0; i < diff.size(); ++i) diff[i][i] = diff[i][i] - LaurentPoly(1);
    LaurentPoly num = det2(diff);
    LaurentPoly cyc;
    for (int i = 0; i < b.strands; ++i) cyc.set_coeff(i, 1);
    // clear denominators before exact division
    int shift = std::min(num.is_zero() ? 0 : num.min_exp(), 0);
    return num.shifted(-shift + b.strands).divided_by(cyc);
}

bool same_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a == b;
    LaurentPoly c = b.shifted(a.min_exp() - b.min_exp());
    return c == a || c == -a;
}

}  // namespace

TEST_CASE("parse braid") {
    BraidWord b = parse_braid("2 -1 -2 -2 -2 -1", 3);
    CHECK(b.letters == std::vector<int>{2, -1, -2, -2, -2, -1});
    CHECK(parse_braid("s2 s1' s2' s2' s2' s1'", 3) == b);
    CHECK(parse_braid("", 3).letters.empty());
    CHECK_THROWS_AS(parse_braid("3", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("0", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("x1", 3), std::invalid_argument);
    CHECK(braid_to_string(b) == "2 -1 -2 -2 -2 -1");
}

TEST_CASE("closed components") {
    CHECK(closed_components(parse_braid("", 3)) == 3);
    CHECK(closed_components(parse_braid("1", 2)) == 1);
    CHECK(closed_components(parse_braid("2 -1 -2 -2 -2 -1", 3)) == 1);
    CHECK(closed_components(parse_braid("1 1", 2)) == 2);
}

TEST_CASE("fhk conversion") {
    BasketCode c = fhk_code(parse_braid("2 -1 -2 -2 -2 -1", 3));
    CHECK(c.word == std::vector<int>{1, 2, 3, 4, 5, 6, 4, 5, 1, 2, 3, 6});

    CHECK(fhk_code(parse_braid("2 1", 3)).bands() == 0);
    CHECK(fhk_code(parse_braid("", 5)).bands() == 0);

    CHECK_THROWS_AS(fhk_code(parse_braid("1 1 2", 3)), std::invalid_argument);
    CHECK_THROWS_AS(fhk_code(parse_braid("1", 3)), std::invalid_argument);
}

TEST_CASE("fhk band count is |W| plus twice the sign matches") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 200; ++trial) {
        int strands = 2 + static_cast<int>(rng() % 3);
        BraidWord b;
        b.strands = strands;
        std::vector<int> gens;
        for (int g = strands - 1; g >= 1; --g) gens.push_back(g);
        std::shuffle(gens.begin(), gens.end(), rng);
        for (int g : gens) b.letters.push_back(rng() % 2 ? g : -g);
        int extra = static_cast<int>(rng() % 5);
        int p = 0;
        for (int j = 0; j < extra; ++j) {
            int g = 1 + static_cast<int>(rng() % (strands - 1));
            int s = rng() % 2 ? 1 : -1;
            b.letters.push_back(s * g);
            int prefix_sign = 0;
            for (int i = 0; i < strands - 1; ++i)
                if (std::abs(b.letters[i]) == g) prefix_sign = b.letters[i] > 0 ? 1 : -1;
            if (s == prefix_sign) ++p;
        }
        BasketCode c = fhk_code(b);
        CHECK(c.bands() == extra + 2 * p);
        CHECK(component_count(c) == closed_components(b));
    }
}

TEST_CASE("fhk closure invariants match the basket") {
    // sigma_1^3 closes to a trefoil
    BasketCode tref = fhk_code(parse_braid("1 1 1", 2));
    CHECK(tref.bands() == 6);
    CHECK(fingerprint(tref) == fingerprint(parse_code("12341234")));

    CHECK(alexander(fhk_code(parse_braid("2 -1 -2 -2 -2 -1", 3))) ==
          alexander(parse_code("123124563456")));  // both 5_2
}

TEST_CASE("burau oracle agrees with the seifert alexander") {
    CHECK(same_up_to_units(burau_alexander(parse_braid("1 1 1", 2)),
                           alexander(parse_code("12341234"))));

    std::mt19937 rng(707);
    int tested = 0;
    while (tested < 40) {
        BraidWord b;
        b.strands = 3;
        b.letters = {rng() % 2 ? 2 : -2, rng() % 2 ? 1 : -1};
        int extra = 1 + static_cast<int>(rng() % 5);
        for (int j = 0; j < extra; ++j) {
            int g = 1 + static_cast<int>(rng() % 2);
            b.letters.push_back(rng() % 2 ? g : -g);
        }
        if (closed_components(b) != 1) continue;
        ++tested;
        CHECK(same_up_to_units(burau_alexander(b), alexander(fhk_code(b))));
    }
}

TEST_CASE("bound fhk") {
    CHECK(bound_fhk(parse_braid("1 1 1", 2)) == 6);
    CHECK(bound_fhk(parse_braid("2 1 1 -2", 3)) == 4);
    CHECK(bound_fhk(parse_braid("2 1", 3)) == 0);
    CHECK_THROWS_AS(bound_fhk(parse_braid("1 2", 3)), std::invalid_argument);
    CHECK_THROWS_AS(bound_fhk(parse_braid("-2 1 1", 3)), std::invalid_argument);
}

TEST_CASE("bound kim") {
    CHECK(bound_kim(parse_braid("1 1 1", 2)) == 10);
    CHECK(bound_kim(parse_braid("1 2", 3)) == 8);
    CHECK(bound_kim(parse_braid("1 -1", 2)) == 1);
}
