#pragma once

#include <string>
#include <vector>

#include "fpb/invariants.hpp"
#include "fpb/laurent.hpp"

namespace fpb {

// One reference knot: a name, the source it was computed from ("dt:...",
// "braid:<word>@<strands>" or "code:<basket word>"), and its invariants.
// jones_signed / signature_signed keep one consistent chirality of the
// representative (well defined up to a global mirror), which is what
// composite synthesis needs to pair Jones products with signature sums.
struct ReferenceEntry {
    std::string name;
    std::string source;
    bool composite = false;
    Fingerprint fingerprint;
    LaurentPoly jones_signed;
    int signature_signed = 0;
};

struct ReferenceTable {
    std::vector<ReferenceEntry> entries;
};

// Parses a reference source file: one "name <tab> source" line per knot,
// blank lines and #-comments ignored.  Throws std::invalid_argument on a
// malformed line or a duplicate name.  Fingerprints are not yet computed.
std::vector<ReferenceEntry> load_reference(const std::string& path);

// Computes the invariants of one source entry in place.
void compute_entry(ReferenceEntry& entry);

// Connected sums K1#K2 over all unordered prime pairs whose Alexander
// half-spans sum to at most max_genus (a basket with n bands has genus
// <= n/2, so larger sums cannot occur in the census).  Both relative
// chiralities are emitted — "A#B" and, when its fingerprint differs,
// "A#B*" — using multiplicativity of Jones/Alexander/determinant and
// additivity of the signature.
std::vector<ReferenceEntry> synth_connected_sums(const std::vector<ReferenceEntry>& primes,
                                                 int max_genus = 3);

// Builds the full table: computes every source fingerprint, appends
// synthesized composites (factors restricted to 3_1 and 4_1 when present —
// the only factors whose sums occur in a 6-band census — since wider factor
// sets contain fingerprint-identical distinct sums), and verifies pairwise
// distinctness (throws std::runtime_error on a collision).  When cache_path
// is nonempty, a JSON cache keyed by a content hash of the sources is
// consulted and refreshed.
ReferenceTable build_table(std::vector<ReferenceEntry> sources,
                           const std::string& cache_path = "");

// Convenience: load_reference + build_table.
ReferenceTable load_table(const std::string& path, const std::string& cache_path = "");

// Name of the entry with this fingerprint, or "unknown".
std::string lookup(const ReferenceTable& table, const Fingerprint& fp);
const ReferenceEntry* find_entry(const ReferenceTable& table, const Fingerprint& fp);

}  // namespace fpb
