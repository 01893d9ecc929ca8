#pragma once

#include <cstdint>
#include <vector>

#include "lflab/tower.hpp"

namespace lflab {

struct GridPoint {
    i64 p, e, f, t, b;
};

// All valid (p,e,f,t,b): d = ef | p-1, 0 <= t < e with gcd(t,e) = 1,
// b in {-1, 1..2p} with gcd(b,p) = 1 and ell = b + pt/e > 0.
std::vector<GridPoint> grid_points(const std::vector<i64>& primes);

// Deterministic random (gamma, mu, beta) over kappa = F_p: unit series with at
// most 3 terms, beta = pi^{-b} * unit; mu resampled until its residue has
// quotient order f.  Same (point, variant, seed) always yields the same params.
ExtensionParams random_params(const GridPoint& pt, i64 variant, std::uint64_t seed = 0x5eed);

}  // namespace lflab
