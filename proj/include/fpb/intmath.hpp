#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fpb {

// Signature (#positive - #negative eigenvalues) of a symmetric integer
// matrix, by exact congruence diagonalization over the rationals.
int symmetric_signature(std::vector<std::vector<long long>> m);

// Nontrivial invariant factors (those > 1, in divisibility order) of the
// abelian group presented by a square integer matrix, via Smith reduction.
std::vector<long long> invariant_factors(std::vector<std::vector<long long>> m);

}  // namespace fpb
