#include "doctest.h"

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>

#include "fpb/basket.hpp"
#include "fpb/braid.hpp"
#include "fpb/invariants.hpp"
#include "fpb/reference.hpp"

using namespace fpb;

#ifndef FPB_DATA_DIR
#define FPB_DATA_DIR "data"
#endif

namespace {

const std::string kTablePath = std::string(FPB_DATA_DIR) + "/reference_knots.tsv";

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        path = std::string("/tmp/fpb_ref_test_") + std::to_string(::getpid()) + "_" +
               std::to_string(counter()++) + ".tsv";
        std::ofstream(path) << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

const ReferenceTable& shipped_table() {
    static ReferenceTable t = load_table(kTablePath);
    return t;
}

}  // namespace

TEST_CASE("load reference parses sources") {
    TempFile f("# comment\n\nunknot\tdt:\n3_1\tdt:4 6 2\ngranny\tbraid:1 2 2 2 1 1@3\n");
    auto sources = load_reference(f.path);
    REQUIRE(sources.size() == 3);
    CHECK(sources[0].name == "unknot");
    CHECK(sources[1].source == "dt:4 6 2");
    CHECK(sources[2].source == "braid:1 2 2 2 1 1@3");
}

TEST_CASE("load reference rejects bad input") {
    TempFile dup("3_1\tdt:4 6 2\n3_1\tcode:12341234\n");
    CHECK_THROWS_AS(load_reference(dup.path), std::invalid_argument);

    TempFile notab("3_1 dt:4 6 2\n");
    CHECK_THROWS_AS(load_reference(notab.path), std::invalid_argument);

    TempFile badkind("3_1\tgauss:O1+\n");
    CHECK_THROWS_AS(load_reference(badkind.path), std::invalid_argument);

    CHECK_THROWS_AS(load_reference("/nonexistent/file.tsv"), std::invalid_argument);
}

TEST_CASE("build table rejects fingerprint collisions") {
    TempFile alias("3_1\tdt:4 6 2\ntrefoil\tcode:12341234\n");
    CHECK_THROWS_AS(build_table(load_reference(alias.path)), std::runtime_error);
}

TEST_CASE("dt, braid and code sources agree") {
    TempFile f("3_1\tdt:4 6 2\n");
    ReferenceTable t = build_table(load_reference(f.path));
    REQUIRE(t.entries.size() >= 1);
    CHECK(t.entries[0].fingerprint == fingerprint(parse_code("12341234")));
    CHECK(t.entries[0].fingerprint ==
          fingerprint(fhk_code(parse_braid("1 1 1", 2))));
}

TEST_CASE("shipped table is complete and distinct") {
    const ReferenceTable& t = shipped_table();
    std::set<std::string> names;
    int primes = 0;
    for (const auto& e : t.entries) {
        CHECK(names.insert(e.name).second);
        if (!e.composite) ++primes;
    }
    CHECK(primes == 29);  // unknot + 3_1 + 4_1 + the 26 primes with fpbk == 6
    for (const char* need :
         {"unknot", "3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "7_6", "7_7", "8_1", "8_3",
          "8_12", "8_20", "8_21", "9_42", "9_44", "9_46", "9_48", "10_132", "10_136", "10_137",
          "10_140", "11n_38", "12n_462", "13n_973", "14n_17954", "15n_45460", "16n_246032",
          "3_1#3_1", "3_1#3_1*", "3_1#4_1", "4_1#4_1"})
        CHECK(names.count(need) == 1);
}

TEST_CASE("lookup maps reference codes to names") {
    const ReferenceTable& t = shipped_table();
    CHECK(lookup(t, fingerprint(parse_code("123456123456"))) == "5_1");
    CHECK(lookup(t, fingerprint(parse_code("123124653465"))) == "6_1");
    CHECK(lookup(t, fingerprint(parse_code("123124563456"))) == "5_2");
    CHECK(lookup(t, fingerprint(parse_code("123124563564"))) == "unknot");
    CHECK(lookup(t, fingerprint(parse_code("135264135264"))) == "14n_17954");
    CHECK(lookup(t, fingerprint(parse_code("136254136254"))) == "16n_246032");

    Fingerprint bogus;
    bogus.determinant = 999;
    CHECK(lookup(t, bogus) == "unknown");
}

TEST_CASE("double-cover torsion separates 12n_462 from 4_1#4_1") {
    const ReferenceTable& t = shipped_table();
    Fingerprint prime = fingerprint(parse_code("124361546253"));
    Fingerprint sum = fingerprint(parse_code("124631546253"));
    // same Jones, Alexander, determinant and |signature| ...
    CHECK(prime.jones_canon == sum.jones_canon);
    CHECK(prime.alexander == sum.alexander);
    CHECK(prime.determinant == 25);
    CHECK(sum.determinant == 25);
    // ... but Z/25 vs Z/5 + Z/5 homology of the double branched cover
    CHECK(prime.torsion == std::vector<long long>{25});
    CHECK(sum.torsion == std::vector<long long>{5, 5});
    CHECK(lookup(t, prime) == "12n_462");
    CHECK(lookup(t, sum) == "4_1#4_1");
}

TEST_CASE("composite synthesis matches honest connected sums") {
    const ReferenceTable& t = shipped_table();

    // granny and square knots as braid closures of sigma_1^3 sigma_2^(+-3)
    Fingerprint granny = fingerprint(fhk_code(parse_braid("1 2 2 2 1 1", 3)));
    Fingerprint square = fingerprint(fhk_code(parse_braid("1 -2 -2 -2 1 1", 3)));
    CHECK(granny.signature_abs == 4);
    CHECK(square.signature_abs == 0);
    std::string gname = lookup(t, granny), sname = lookup(t, square);
    CHECK(gname.substr(0, 7) == "3_1#3_1");
    CHECK(sname.substr(0, 7) == "3_1#3_1");
    CHECK(gname != sname);
    CHECK(find_entry(t, granny)->composite);

    // boundary connected sum of basket codes concatenates the words
    CHECK(lookup(t, fingerprint(parse_code("1234123456785678"))) == gname);
    CHECK(lookup(t, fingerprint(parse_code("1243124356785678"))).substr(0, 7) == "3_1#4_1");
}

TEST_CASE("table cache round-trips") {
    TempFile f("unknot\tdt:\n3_1\tdt:4 6 2\n4_1\tdt:4 6 8 2\n");
    std::string cache = f.path + ".cache.json";
    ReferenceTable fresh = build_table(load_reference(f.path), cache);
    ReferenceTable cached = build_table(load_reference(f.path), cache);
    REQUIRE(fresh.entries.size() == cached.entries.size());
    for (size_t i = 0; i < fresh.entries.size(); ++i) {
        CHECK(fresh.entries[i].name == cached.entries[i].name);
        CHECK(fresh.entries[i].fingerprint == cached.entries[i].fingerprint);
        CHECK(fresh.entries[i].jones_signed == cached.entries[i].jones_signed);
    }
    std::remove(cache.c_str());
}
