#include "lflab/galois.hpp"

#include <algorithm>

namespace lflab {

Automorphism Automorphism::identity(const TowerPtr& tw) { return {tw, tw->x(), tw->y()}; }

Automorphism Automorphism::sigma(const TowerPtr& tw) { return {tw, tw->sigma_x(), tw->y()}; }

Automorphism Automorphism::tau(const TowerPtr& tw) { return {tw, tw->x(), tw->tau_y()}; }

Automorphism compose(const Automorphism& a, const Automorphism& b) {
    return {a.tw, a.apply(b.image_x), a.apply(b.image_y)};
}

Automorphism auto_pow(const Automorphism& a, i64 n) {
    if (n < 0) throw DomainError("auto_pow: negative exponent");
    Automorphism acc = Automorphism::identity(a.tw);
    for (i64 k = 0; k < n; ++k) acc = compose(a, acc);
    return acc;
}

RelationsReport verify_relations(const TowerPtr& tw) {
    const auto& P = tw->params();
    Automorphism s = Automorphism::sigma(tw);
    Automorphism t = Automorphism::tau(tw);
    Automorphism id = Automorphism::identity(tw);

    auto same = [&](const Automorphism& u, const Automorphism& v) {
        return agree(u.image_x, v.image_x) && agree(u.image_y, v.image_y);
    };

    RelationsReport rep;
    rep.sigma_p = same(auto_pow(s, P.p), id);
    rep.tau_d = same(auto_pow(t, P.d), id);
    // tau sigma = sigma^r tau on generators
    rep.conj = same(compose(t, s), compose(auto_pow(s, P.r), t));
    return rep;
}

i64 break_via_action(const TowerElement& z) {
    const auto tw = z.tower();
    i64 vz = valuation_M(z);
    if (vz % tw->params().p == 0) throw DomainError("break_via_action: p | v_M(z)");
    TowerElement w = Automorphism::sigma(tw).apply(z) - z;
    if (w.is_zero()) throw DomainError("break_via_action: z is fixed by sigma");
    return valuation_M(w) - vz;
}

TraceIdealCheck trace_ideal_check(const TowerPtr& tw, i64 n) {
    const auto& P = tw->params();
    const i64 ep = P.e * P.p;

    // inertia unit u = y^e / (pi^t gamma); u-powers span the residue extension
    TowerElement u = tw->y_pow(P.e) *
                     tw->from_K(LaurentSeries::monomial(P.kappa, P.gamma_res.inv(), -P.t));
    std::vector<TowerElement> upow;
    upow.push_back(tw->one());
    for (i64 a = 1; a < P.f; ++a) upow.push_back(upow.back() * u);

    auto element_of_valuation = [&](i64 c) {
        for (i64 j = 0; j < P.p; ++j)
            for (i64 i = 0; i < P.e; ++i) {
                i64 v = -P.e * P.b * j + P.p * P.t * i;
                if ((c - v) % ep != 0) continue;
                i64 k = (c - v) / ep;
                return tw->monomial(j, i, LaurentSeries::monomial(P.kappa, 1, k));
            }
        throw InternalError("no monomial of the requested valuation");
    };

    bool have = false;
    i64 rmin = 0;
    for (i64 c = n; c < n + P.e; ++c) {
        TowerElement m = element_of_valuation(c);
        for (i64 a = 0; a < P.f; ++a) {
            TowerElement tr = trace(upow[static_cast<size_t>(a)] * m, SubExt::M_over_L);
            if (tr.is_zero()) continue;
            i64 v = valuation_in(tr, Level::L).as_integer();
            if (!have || v < rmin) rmin = v;
            have = true;
        }
    }
    if (!have) throw InternalError("trace of the spanning set vanished identically");

    i64 expect = (n + P.e - 1) / P.e;  // ceil for n >= 0
    if (n < 0) expect = -((-n) / P.e);
    return {n, rmin, rmin == expect};
}

}  // namespace lflab
