#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fpb/basket.hpp"
#include "fpb/reference.hpp"

namespace fpb {

struct CensusOptions {
    // 0: take FPB_THREADS from the environment, else hardware concurrency.
    int threads = 0;
    // Number of leading word positions fixed per work chunk; chunks are the
    // valid prefixes of that length, enumerated independently.
    int chunk_prefix = 2;
    // When nonempty, one line is appended per finished chunk and completed
    // chunks are skipped on a rerun; a corrupt line is discarded with a
    // warning on stderr.
    std::string resume_path;
};

// Aggregate result of one census run.  class_counts keys are reference names
// for prime classes, "composite:<name>" for synthesized connected sums, and
// "unknown" for fingerprints outside the table.
struct CensusReport {
    int n = 0;
    std::uint64_t total = 0;
    std::uint64_t link_codes = 0;
    std::uint64_t knot_codes = 0;
    std::uint64_t type_one_reducible = 0;
    std::uint64_t surviving = 0;
    std::map<std::string, std::uint64_t> class_counts;

    // Run metadata; deliberately excluded from emitted reports so that the
    // same census is byte-identical across thread configurations.
    int threads_used = 1;
    int chunks = 1;
    double elapsed_seconds = 0.0;
};

// Enumerates all (2n)!/2^n double-occurrence words, buckets them into
// links / Type-I-reducible knots / surviving knots, and classifies each
// surviving symmetry class once against the table.  Deterministic for a
// given (n, table) regardless of thread count.
CensusReport run_census(int n, const ReferenceTable& table, const CensusOptions& options = {});

// lookup(table, fingerprint(code)); throws std::invalid_argument on a
// multi-component code.
std::string classify_code(const BasketCode& code, const ReferenceTable& table);

// Flat plumbing basket numbers established by the classification theorems:
// a single value for settled names, a candidate set (e.g. {8, 10}) where the
// theorems leave two options.  Throws std::invalid_argument for names the
// theorems do not cover.
std::vector<int> fpbk_lookup(const std::string& name);

// "name,count" rows sorted by name; no header.  Byte-deterministic.
std::string report_csv(const CensusReport& report);
// JSON mirror of the counting fields and class map.  Byte-deterministic.
std::string report_json(const CensusReport& report);
// format is "csv" or "json"; throws on unknown format or I/O failure.
void emit_report(const CensusReport& report, const std::string& format, const std::string& path);

}  // namespace fpb
