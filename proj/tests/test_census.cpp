#include "doctest.h"

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "fpb/basket.hpp"
#include "fpb/census.hpp"
#include "fpb/reference.hpp"

using namespace fpb;

#ifndef FPB_DATA_DIR
#define FPB_DATA_DIR "data"
#endif

namespace {

const ReferenceTable& table() {
    static ReferenceTable t = load_table(std::string(FPB_DATA_DIR) + "/reference_knots.tsv");
    return t;
}

void check_identities(const CensusReport& r) {
    CHECK(r.total == r.link_codes + r.knot_codes);
    CHECK(r.knot_codes == r.type_one_reducible + r.surviving);
    std::uint64_t classified = 0;
    for (const auto& [name, c] : r.class_counts) classified += c;
    CHECK(classified == r.surviving);
}

}  // namespace

TEST_CASE("census n=0..1") {
    CensusReport r0 = run_census(0, table());
    CHECK(r0.total == 1);
    CHECK(r0.knot_codes == 1);
    CHECK(r0.surviving == 1);
    CHECK(r0.class_counts == std::map<std::string, std::uint64_t>{{"unknot", 1}});
    CHECK(report_csv(r0) == "unknot,1\n");
    check_identities(r0);

    CensusReport r1 = run_census(1, table());
    CHECK(r1.total == 1);       // the word 11
    CHECK(r1.link_codes == 1);  // two boundary components
    CHECK(r1.knot_codes == 0);
    check_identities(r1);
}

TEST_CASE("census n=2..4 small oracles") {
    CensusReport r2 = run_census(2, table());
    CHECK(r2.total == 6);
    CHECK(r2.link_codes == 4);
    CHECK(r2.knot_codes == 2);
    // both knot codes (1212 and 2121) deplumb away entirely, so the
    // survivor table is empty and every knot class is the unknot
    CHECK(r2.type_one_reducible == 2);
    CHECK(r2.class_counts.empty());
    enumerate_codes(2, [&](const BasketCode& c) {
        if (component_count(c) != 1) return;
        CHECK(classify_code(reduce_type_one(c), table()) == "unknot");
    });
    check_identities(r2);

    CensusReport r3 = run_census(3, table());
    CHECK(r3.total == 90);
    CHECK(r3.knot_codes == 0);  // parity: knots need an even band count
    check_identities(r3);

    CensusReport r4 = run_census(4, table());
    CHECK(r4.total == 2520);
    for (const auto& [name, c] : r4.class_counts) {
        bool expected = name == "unknot" || name == "3_1" || name == "4_1";
        CHECK(expected);
    }
    CHECK(r4.class_counts.count("3_1") == 1);
    CHECK(r4.class_counts.count("4_1") == 1);
    check_identities(r4);
}

TEST_CASE("census thread-count determinism") {
    CensusOptions one, four, eight;
    one.threads = 1;
    four.threads = 4;
    eight.threads = 8;
    CensusReport a = run_census(4, table(), one);
    CensusReport b = run_census(4, table(), four);
    CensusReport c = run_census(4, table(), eight);
    CHECK(report_csv(a) == report_csv(b));
    CHECK(report_csv(a) == report_csv(c));
    CHECK(report_json(a) == report_json(b));
    CHECK(report_json(a) == report_json(c));
}

TEST_CASE("census resume reproduces an uninterrupted run") {
    std::string path = "/tmp/fpb_census_resume_" + std::to_string(::getpid()) + ".txt";
    std::remove(path.c_str());

    CensusOptions opt;
    opt.threads = 2;
    opt.resume_path = path;
    CensusReport full = run_census(4, table(), opt);

    // rerun from the completed file: all chunks skipped, same report
    CensusReport resumed = run_census(4, table(), opt);
    CHECK(report_json(full) == report_json(resumed));

    // truncate to a partial file with a corrupt trailing line
    {
        std::ifstream in(path);
        std::string line, kept;
        int n = 0;
        while (std::getline(in, line) && n < 3) {
            kept += line + "\n";
            ++n;
        }
        std::ofstream out(path);
        out << kept << "chunk 1 garbage\n";
    }
    CensusReport partial = run_census(4, table(), opt);
    CHECK(report_json(full) == report_json(partial));
    std::remove(path.c_str());
}

TEST_CASE("classify code") {
    CHECK(classify_code(parse_code("123124563456"), table()) == "5_2");
    CHECK(classify_code(parse_code("135264135264"), table()) == "14n_17954");
    CHECK(classify_code(parse_code("123124563564"), table()) == "unknot");
    CHECK_THROWS_AS(classify_code(parse_code("1122"), table()), std::invalid_argument);
}

TEST_CASE("fpbk lookup") {
    CHECK(fpbk_lookup("unknot") == std::vector<int>{0});
    CHECK(fpbk_lookup("3_1") == std::vector<int>{4});
    CHECK(fpbk_lookup("4_1") == std::vector<int>{4});
    CHECK(fpbk_lookup("8_1") == std::vector<int>{6});
    CHECK(fpbk_lookup("9_44") == std::vector<int>{6});
    CHECK(fpbk_lookup("16n_246032") == std::vector<int>{6});
    CHECK(fpbk_lookup("7_2") == std::vector<int>{8});
    CHECK(fpbk_lookup("9_2") == std::vector<int>{8, 10});
    CHECK_THROWS_AS(fpbk_lookup("10_1"), std::invalid_argument);
}

TEST_CASE("emit report") {
    CensusReport r = run_census(2, table());
    std::string base = "/tmp/fpb_census_emit_" + std::to_string(::getpid());
    emit_report(r, "csv", base + ".csv");
    emit_report(r, "json", base + ".json");
    std::ifstream csv(base + ".csv"), json(base + ".json");
    std::string cs((std::istreambuf_iterator<char>(csv)), std::istreambuf_iterator<char>());
    std::string js((std::istreambuf_iterator<char>(json)), std::istreambuf_iterator<char>());
    CHECK(cs == report_csv(r));
    CHECK(js == report_json(r));
    CHECK_THROWS_AS(emit_report(r, "xml", base + ".xml"), std::invalid_argument);
    std::remove((base + ".csv").c_str());
    std::remove((base + ".json").c_str());
}
