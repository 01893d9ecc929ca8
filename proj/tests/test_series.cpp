#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lflab/series.hpp"

using namespace lflab;

namespace {

LaurentSeries from_ints(const FieldPtr& F, i64 v, std::vector<i64> cs,
                        i64 prec = LaurentSeries::kExactPrec) {
    std::vector<FFElem> coeffs;
    for (i64 c : cs) coeffs.push_back(FFElem::from_int(F, c));
    return LaurentSeries::make(F, v, std::move(coeffs), prec);
}

}  // namespace

TEST_CASE("exact ring arithmetic") {
    auto F5 = FieldDesc::prime_field(5);
    LaurentSeries a = from_ints(F5, 0, {1, 1});   // 1 + pi
    LaurentSeries b = from_ints(F5, 0, {1, -1});  // 1 - pi
    CHECK(a * b == from_ints(F5, 0, {1, 0, -1}));  // 1 - pi^2
    CHECK((a * b).is_exact());

    auto F2 = FieldDesc::prime_field(2);
    LaurentSeries c = from_ints(F2, -2, {1});
    CHECK((c + c).is_exact_zero());
}

TEST_CASE("valuations") {
    auto F7 = FieldDesc::prime_field(7);
    CHECK(LaurentSeries::pi(F7).valuation() == 1);
    CHECK(from_ints(F7, 3, {1}).valuation() == 3);
    CHECK(from_ints(F7, -5, {2, 0, 0, 0, 0, 0, 1}).valuation() == -5);

    LaurentSeries a = from_ints(F7, 0, {1, 1}, 6);
    LaurentSeries diff = a - LaurentSeries::one(F7) - LaurentSeries::pi(F7);
    CHECK(diff.is_zero());
    CHECK(!diff.is_exact());
    CHECK_THROWS_AS(diff.valuation(), PrecisionError);
    try {
        diff.valuation();
    } catch (const PrecisionError& e) {
        CHECK(e.bound == 6);
    }
}

TEST_CASE("inverses and division") {
    auto F3 = FieldDesc::prime_field(3);
    LaurentSeries a = from_ints(F3, 0, {1, 1});  // 1 + pi
    LaurentSeries inv = a.inv(4);
    CHECK(inv.coeff(0) == FFElem::from_int(F3, 1));
    CHECK(inv.coeff(1) == FFElem::from_int(F3, -1));
    CHECK(inv.coeff(2) == FFElem::from_int(F3, 1));
    CHECK(inv.coeff(3) == FFElem::from_int(F3, -1));
    CHECK(inv.prec() == 4);
    // monomial inverses stay exact
    LaurentSeries m = from_ints(F3, -4, {2});
    CHECK(m.inv(8).is_exact());
    CHECK(m.inv(8) * m == LaurentSeries::one(F3));
    CHECK_THROWS_AS(LaurentSeries::zero(F3).inv(4), PrecisionError);
}

TEST_CASE("tame roots") {
    auto F5 = FieldDesc::prime_field(5);
    CHECK(tame_root(LaurentSeries::one(F5), 3, 16) == LaurentSeries::one(F5));
    LaurentSeries s = from_ints(F5, 0, {1, 1});
    CHECK(agree_to(tame_root(s * s, 2, 16), s, 8));
    try {
        tame_root(from_ints(F5, 1, {2}), 2, 16);
        CHECK(false);
    } catch (const RootError& e) {
        CHECK(e.code == RootError::Code::valuation);
    }
    try {
        tame_root(from_ints(F5, 2, {2}), 2, 16);  // 2 is not a square mod 5
        CHECK(false);
    } catch (const RootError& e) {
        CHECK(e.code == RootError::Code::residue);
    }
    CHECK_THROWS_AS(tame_root(LaurentSeries::one(F5), 5 * 3, 8), ParamError);
}

TEST_CASE("tame root round trip, 100 random monic units") {
    auto F7 = FieldDesc::prime_field(7);
    std::mt19937_64 rng(20240817);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<i64> cs{1};  // leading 1 so the canonical root is s itself
        int extra = static_cast<int>(rng() % 4);
        for (int k = 0; k < extra; ++k) cs.push_back(static_cast<i64>(rng() % 7));
        i64 v = static_cast<i64>(rng() % 9) - 4;
        i64 d = (iter % 2) ? 2 : 3;
        LaurentSeries s = from_ints(F7, v * d, cs);
        CHECK(agree_to(tame_root(s.pow(d, 32), d, 32), s, 8));
    }
}

TEST_CASE("ultrametric and multiplicativity on random pairs") {
    auto F5 = FieldDesc::prime_field(5);
    std::mt19937_64 rng(97);
    for (int iter = 0; iter < 200; ++iter) {
        auto rand_series = [&] {
            std::vector<i64> cs{1 + static_cast<i64>(rng() % 4)};
            int extra = static_cast<int>(rng() % 3);
            for (int k = 0; k < extra; ++k) cs.push_back(static_cast<i64>(rng() % 5));
            return from_ints(F5, static_cast<i64>(rng() % 11) - 5, cs);
        };
        LaurentSeries a = rand_series(), b = rand_series();
        CHECK((a * b).valuation() == a.valuation() + b.valuation());
        LaurentSeries sum = a + b;
        if (sum.known_nonzero()) {
            CHECK(sum.valuation() >= std::min(a.valuation(), b.valuation()));
            if (a.valuation() != b.valuation())
                CHECK(sum.valuation() == std::min(a.valuation(), b.valuation()));
        }
    }
}
