#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lflab/modstruct.hpp"

using namespace lflab;

namespace {

TowerPtr simple_tower(i64 p, i64 e, i64 f, i64 t, i64 b, i64 mu_res = 1) {
    auto F = FieldDesc::prime_field(p);
    return Tower::build(ExtensionParams::make(
        p, F, e, f, t, b, LaurentSeries::one(F), LaurentSeries::monomial(F, mu_res, 0),
        LaurentSeries::monomial(F, 1, -b)));
}

}  // namespace

TEST_CASE("associated-order exponent vectors") {
    CHECK(assoc_order(5, 3, 0).d_vec == std::vector<i64>{0, 0, -1, -2, -3});
    CHECK(assoc_order(5, 2, 2).d_vec == std::vector<i64>{0, 0, 0, -1, -1});
    // b = p-1, n = 0: the exponents step down by one at each j
    for (i64 p : {3, 5, 7}) {
        auto ob = assoc_order(p, p - 1, 0);
        for (i64 j = 0; j < p; ++j) CHECK(ob.d_vec[static_cast<size_t>(j)] == -j);
    }
}

TEST_CASE("shifting b by p shifts d_j by -j and nothing else") {
    for (i64 b : {1, 2, 3, 4}) {
        for (i64 n = -3; n < 8; ++n) {
            auto ob = assoc_order(5, b, n);
            auto ob2 = assoc_order(5, b + 5, n);
            CHECK(ob.b_bar == ob2.b_bar);
            for (i64 j = 0; j < 5; ++j)
                CHECK(ob2.d_vec[static_cast<size_t>(j)] ==
                      ob.d_vec[static_cast<size_t>(j)] - j);
            auto v = freeness_bruteforce(5, b, n);
            auto v2 = freeness_bruteforce(5, b + 5, n);
            CHECK(v.free == v2.free);
            CHECK(v.n_generators == v2.n_generators);
            CHECK(v.embedding_dim == v2.embedding_dim);
        }
    }
}

TEST_CASE("ring closure of the exponent vector") {
    for (i64 p : {3, 5, 7})
        for (i64 b = 1; b < p; ++b)
            for (i64 n = -p; n < 2 * p; ++n) {
                auto d = assoc_order(p, b, n).d_vec;
                for (i64 j1 = 0; j1 < p; ++j1)
                    for (i64 j2 = 0; j1 + j2 < p; ++j2)
                        CHECK(d[static_cast<size_t>(j1)] + d[static_cast<size_t>(j2)] >=
                              d[static_cast<size_t>(j1 + j2)]);
            }
}

TEST_CASE("closed-form freeness criteria") {
    auto v1 = freeness_paper(5, 2, 0);  // b_bar = 2 divides 4
    REQUIRE(v1.has_value());
    CHECK(v1->free);
    auto v2 = freeness_paper(5, 3, 0);  // 3 does not divide 4
    REQUIRE(v2.has_value());
    CHECK(!v2->free);
    auto v3 = freeness_paper(7, 6, 0);
    REQUIRE(v3.has_value());
    CHECK(v3->free);
    auto v4 = freeness_paper(5, 3, 3);  // n = b_bar
    REQUIRE(v4.has_value());
    CHECK(v4->free);
    auto v5 = freeness_paper(5, 4, 5);  // n = 0 mod p and b_bar = p-1 divides p-1
    REQUIRE(v5.has_value());
    CHECK(v5->free);
    auto v6 = freeness_paper(5, 2, 3);  // n = b_bar + 1 with b_bar < p-1
    REQUIRE(v6.has_value());
    CHECK(!v6->free);
    CHECK(!freeness_paper(3, 2, 1).has_value());  // residue not covered
    CHECK(!freeness_paper(5, 3, 1).has_value());
}

TEST_CASE("brute-force freeness and generator counts") {
    auto v1 = freeness_bruteforce(5, 3, 3);
    CHECK(v1.free);
    CHECK(v1.n_generators == 1);
    auto v2 = freeness_bruteforce(5, 3, 0);
    CHECK(!v2.free);
    CHECK(v2.n_generators == 2);
    auto v3 = freeness_bruteforce(3, 2, 1);
    CHECK(!v3.free);
    CHECK(v3.n_generators == 2);
    // free modules always have embedding_dim <= p (A is generated by Psi over O_K
    // only in special cases, so just sanity-bound it)
    CHECK(v1.embedding_dim >= 1);
    CHECK(v2.embedding_dim >= 1);
}

TEST_CASE("paper criteria agree with brute force on covered residues") {
    for (i64 p : {3, 5, 7})
        for (i64 b = 1; b < p; ++b) {
            auto rr = reconcile(p, b, -2 * p, 2 * p);
            for (const auto& d : rr.disagreements) MESSAGE(d);
            CHECK(rr.pass);
        }
}

TEST_CASE("certified exponents on live towers") {
    CHECK(certify_order(simple_tower(5, 2, 1, 1, 3), 0));
    CHECK(certify_order(simple_tower(5, 2, 1, 1, 3), 3));
    CHECK(certify_order(simple_tower(5, 2, 1, 1, 3), -4));
    CHECK(certify_order(simple_tower(3, 2, 1, 1, 1), 1));
    CHECK(certify_order(simple_tower(5, 2, 2, 1, 3, 2), 2));
    CHECK(certify_order(simple_tower(7, 3, 1, 2, 4), 0));
}
