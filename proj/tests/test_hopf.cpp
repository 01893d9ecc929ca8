#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lflab/hopf.hpp"
#include "lflab/linalg.hpp"

using namespace lflab;

namespace {

TowerPtr simple_tower(i64 p, i64 e, i64 f, i64 t, i64 b, i64 mu_res = 1) {
    auto F = FieldDesc::prime_field(p);
    return Tower::build(ExtensionParams::make(
        p, F, e, f, t, b, LaurentSeries::one(F), LaurentSeries::monomial(F, mu_res, 0),
        LaurentSeries::monomial(F, 1, -b)));
}

}  // namespace

TEST_CASE("Theta(0) is the sum of the nontrivial sigma powers") {
    auto tw = simple_tower(5, 2, 1, 1, 3);
    GroupRingElem th = Theta(tw, 0);
    CHECK(th.coeff(0).is_zero());
    for (i64 j = 1; j < 5; ++j) CHECK(agree(th.coeff(j), tw->one()));
}

TEST_CASE("Psi for p=3, d=2 matches the direct expansion") {
    auto tw = simple_tower(3, 2, 1, 1, 1);
    GroupRingElem Psi = psi(tw, 1);
    // Psi = -(1/y)(sigma + rho0^{-1} sigma^2), rho0 = 2, rho0^{-1} = 2
    TowerElement yinv = tw->y_pow(-1);
    CHECK(Psi.coeff(0).is_zero());
    CHECK(agree(Psi.coeff(1), -yinv));
    CHECK(agree(Psi.coeff(2), (-yinv).scaled_int(2)));
}

TEST_CASE("theta equals Theta for a single coset (s = 1)") {
    auto tw = simple_tower(5, 4, 1, 1, 3);  // d = p-1
    for (i64 i = 0; i < 4; ++i) CHECK(agree(theta(tw, i, 0), Theta(tw, i)));
    CHECK_THROWS_AS(theta(tw, 4, 0), DomainError);
}

TEST_CASE("basis change between theta and Theta spans (p=5, d=2, s=2)") {
    auto tw = simple_tower(5, 2, 1, 1, 3);
    const auto& P = tw->params();
    FFElem rho0 = FFElem::from_int(P.kappa, primitive_root(5));
    // s y theta(1,a) = sum_b rho0^{-a(1+2b)} y Theta(1+2b), b in {0,1}
    for (i64 a = 0; a < 2; ++a) {
        GroupRingElem lhs = theta(tw, 1, a).scaled(tw->y()).scaled_int(P.s);
        GroupRingElem rhs = Theta(tw, 1).scaled(tw->y()).scaled(rho0.pow(-a)) +
                            Theta(tw, 3).scaled(tw->y()).scaled(rho0.pow(-3 * a));
        CHECK(agree(lhs, rhs));
    }
}

TEST_CASE("tau-fixedness") {
    auto tw = simple_tower(5, 2, 2, 1, 3, 2);
    CHECK(tau_fixed(GroupRingElem::one(tw)));
    CHECK(!tau_fixed(GroupRingElem::sigma_power(tw, 1)));
    for (i64 j = 1; j <= 4; ++j) CHECK(tau_fixed(psi(tw, j)));
}

TEST_CASE("Psi acts as d/dx on powers of x") {
    for (auto tw : {simple_tower(3, 2, 1, 1, 1), simple_tower(5, 2, 2, 1, 3, 2),
                    simple_tower(7, 6, 1, 1, 2)}) {
        const auto& P = tw->params();
        GroupRingElem Psi = psi(tw, 1);
        CHECK(act(Psi, tw->one()).is_zero());
        for (i64 i = 1; i <= P.p - 1; ++i)
            CHECK(agree(act(Psi, tw->x().pow(i)), tw->x().pow(i - 1).scaled_int(i)));
        // iterated: Psi^j x^j = j!
        GroupRingElem h = Psi;
        i64 fact = 1;
        for (i64 j = 1; j <= P.p - 1; ++j) {
            fact = fact * j % P.p;
            CHECK(agree(act(h, tw->x().pow(j)), tw->one().scaled_int(fact)));
            h = h * Psi;
        }
        CHECK_THROWS_AS(act(Psi, tw->y()), SupportError);
    }
}

TEST_CASE("power identity with the adjusted Psi_{p-1}") {
    for (auto tw : {simple_tower(3, 2, 1, 1, 1), simple_tower(5, 2, 2, 1, 3, 2)}) {
        const auto& P = tw->params();
        for (i64 i = 1; i <= P.p - 1; ++i) {
            auto rep = power_identity(tw, i);
            CHECK(rep.equal);
            if (i < P.p - 1) {
                CHECK(rep.unadjusted_defect.is_zero());
            } else {
                // relative to the naive -Theta(0)/y^{p-1}, the defect is alpha^{-s}
                GroupRingElem want = GroupRingElem::one(tw).scaled(
                    tw->from_K(P.alpha.pow(-P.s, tw->prec_len())));
                CHECK(agree(rep.unadjusted_defect, want));
            }
        }
    }
}

TEST_CASE("Psi^p = 0 in characteristic p") {
    auto tw = simple_tower(5, 2, 1, 1, 3);
    CHECK(psi(tw, 1).pow(5).is_zero());
}

TEST_CASE("counit and antipode") {
    auto tw = simple_tower(5, 2, 2, 1, 3, 2);
    GroupRingElem Psi = psi(tw, 1);
    CHECK(counit(Psi).is_zero());
    CHECK(agree(antipode(Psi), -Psi));
    CHECK(agree(counit(GroupRingElem::sigma_power(tw, 3)), tw->one()));
    // Psi_{p-1} has augmentation 0
    CHECK(counit(psi(tw, 4)).is_zero());
}

TEST_CASE("{1, Psi, ..., Psi^{p-1}} is K-linearly independent") {
    auto tw = simple_tower(5, 2, 1, 1, 3);
    const auto& P = tw->params();
    linalg::Mat m;
    GroupRingElem h = GroupRingElem::one(tw);
    for (i64 k = 0; k < P.p; ++k) {
        linalg::Row row;
        for (i64 j = 0; j < P.p; ++j)
            for (i64 jj = 0; jj < P.p; ++jj)
                for (i64 ii = 0; ii < P.d; ++ii) row.push_back(h.coeff(j).coeff(jj, ii));
        m.push_back(std::move(row));
        h = h * psi(tw, 1);
    }
    CHECK(linalg::rank(std::move(m), tw->prec_len()) == P.p);
}

TEST_CASE("measuring identity (comultiplication surrogate, d = p-1)") {
    auto tw = simple_tower(5, 4, 1, 1, 3);  // s = 1
    const auto& P = tw->params();
    GroupRingElem Psi = psi(tw, 1);
    LaurentSeries alpha_s = P.alpha.pow(P.s, tw->prec_len());
    // C(p,i)/p = (p-1)...(p-i+1)/i! = (-1)^{i-1}/i mod p
    auto binom_over_p = [&](i64 i) {
        i64 iinv = 1;
        for (i64 x = 1; x < P.p; ++x)
            if (i * x % P.p == 1) iinv = x;
        return ((i % 2 == 1 ? 1 : P.p - 1) * iinv) % P.p;
    };
    std::vector<GroupRingElem> pw{GroupRingElem::one(tw)};
    for (i64 k = 1; k < P.p; ++k) pw.push_back(pw.back() * Psi);
    for (i64 a = 0; a <= 2; ++a)
        for (i64 c = 0; c <= 2; ++c) {
            TowerElement u = tw->x().pow(a), v = tw->x().pow(c);
            TowerElement lhs = act(Psi, u * v);
            TowerElement rhs = act(Psi, u) * v + u * act(Psi, v);
            for (i64 i = 1; i <= P.p - 1; ++i) {
                TowerElement term = act(pw[static_cast<size_t>(i)], u) *
                                    act(pw[static_cast<size_t>(P.p - i)], v);
                rhs = rhs - term.scaled(alpha_s).scaled_int(binom_over_p(i));
            }
            CHECK(agree(lhs, rhs));
        }
}

TEST_CASE("lemma 3.2 brute force") {
    CHECK(lemma32(5, 1).equal);
    CHECK(lemma32(7, 3).equal);
    auto r32 = lemma32(3, 2);
    CHECK(!r32.equal);
    CHECK(r32.defect == std::vector<i64>{1, 0, 0});
    for (i64 p : {3, 5, 7, 11, 13}) {
        for (i64 i = 1; i <= p - 2; ++i) CHECK(lemma32(p, i).equal);
        auto edge = lemma32(p, p - 1);
        CHECK(!edge.equal);
        std::vector<i64> want(static_cast<size_t>(p), 0);
        want[0] = 1;  // the constant defect matching the adjusted Psi_{p-1}
        CHECK(edge.defect == want);
    }
}
