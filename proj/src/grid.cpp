#include "lflab/grid.hpp"

#include <numeric>
#include <random>

namespace lflab {

std::vector<GridPoint> grid_points(const std::vector<i64>& primes) {
    std::vector<GridPoint> out;
    for (i64 p : primes) {
        for (i64 e = 1; e <= p - 1; ++e)
            for (i64 f = 1; e * f <= p - 1; ++f) {
                if ((p - 1) % (e * f) != 0) continue;
                for (i64 t = 0; t < e; ++t) {
                    if (std::gcd(t, e) != 1) continue;
                    for (i64 b = -1; b <= 2 * p; ++b) {
                        if (b == 0) continue;
                        if (b % p == 0) continue;
                        if (e * b + p * t <= 0) continue;
                        out.push_back({p, e, f, t, b});
                    }
                }
            }
    }
    return out;
}

namespace {

LaurentSeries random_unit(std::mt19937_64& rng, const FieldPtr& kappa, i64 v0) {
    const i64 p = kappa->p;
    std::vector<FFElem> coeffs;
    coeffs.push_back(FFElem::from_int(kappa, 1 + static_cast<i64>(rng() % (p - 1))));
    i64 extra = static_cast<i64>(rng() % 3);  // up to 2 higher-order terms
    for (i64 k = 0; k < extra; ++k) {
        i64 gap = 1 + static_cast<i64>(rng() % 3);
        while (gap-- > 1) coeffs.push_back(FFElem::zero(kappa));
        coeffs.push_back(FFElem::from_int(kappa, 1 + static_cast<i64>(rng() % (p - 1))));
    }
    return LaurentSeries::make(kappa, v0, std::move(coeffs));
}

}  // namespace

ExtensionParams random_params(const GridPoint& pt, i64 variant, std::uint64_t seed) {
    FieldPtr kappa = FieldDesc::prime_field(pt.p);
    std::uint64_t key = seed;
    for (i64 v : {pt.p, pt.e, pt.f, pt.t, pt.b, variant}) {
        key ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (key << 6) + (key >> 2);
    }
    std::mt19937_64 rng(key);
    LaurentSeries gamma = random_unit(rng, kappa, 0);
    LaurentSeries mu = random_unit(rng, kappa, 0);
    for (int tries = 0; quotient_order(mu.leading(), pt.f) != pt.f; ++tries) {
        if (tries > 1000) throw InternalError("random_params: no mu of quotient order f");
        mu = random_unit(rng, kappa, 0);
    }
    LaurentSeries beta = random_unit(rng, kappa, -pt.b);
    return ExtensionParams::make(pt.p, kappa, pt.e, pt.f, pt.t, pt.b, std::move(gamma),
                                 std::move(mu), std::move(beta));
}

}  // namespace lflab
