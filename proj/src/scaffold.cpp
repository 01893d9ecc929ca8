#include "lflab/scaffold.hpp"

#include "lflab/hopf.hpp"

namespace lflab {

namespace {

i64 mod_pos(i64 a, i64 p) {
    i64 r = a % p;
    return r < 0 ? r + p : r;
}

}  // namespace

i64 ScaffoldData::a(i64 t) const {
    return a_table[static_cast<size_t>(mod_pos(t, tw->params().p))];
}

i64 ScaffoldData::f(i64 t) const { return (t + a(t) * b) / tw->params().p; }

TowerElement ScaffoldData::lambda(i64 t) const {
    TowerElement lam = tw->monomial(a(t), 0, LaurentSeries::monomial(tw->params().kappa, 1, f(t)));
    if (!(valuation_in(lam, Level::L) == Rational(t)))
        throw InternalError("lambda_t: certified valuation mismatch");
    return lam;
}

ScaffoldData build_scaffold(const TowerPtr& tw) {
    const i64 p = tw->params().p;
    const i64 b = tw->params().b;
    i64 binv = 0;
    for (i64 x = 1; x < p; ++x)
        if (mod_pos(b * x, p) == 1) binv = x;
    ScaffoldData sd;
    sd.tw = tw;
    sd.b = b;
    sd.a_table.resize(static_cast<size_t>(p));
    for (i64 t = 0; t < p; ++t) sd.a_table[static_cast<size_t>(t)] = mod_pos(-t * binv, p);
    return sd;
}

std::vector<ScaffoldCheck> verify_scaffold(const TowerPtr& tw, i64 lo, i64 hi) {
    ScaffoldData sd = build_scaffold(tw);
    GroupRingElem Psi = psi(tw, 1);
    std::vector<ScaffoldCheck> out;
    for (i64 t = lo; t < hi; ++t) {
        TowerElement got = act(Psi, sd.lambda(t));
        TowerElement want =
            sd.a(t) >= 1 ? sd.lambda(t + sd.b).scaled_int(sd.a(t)) : tw->zero();
        out.push_back({t, agree(got, want)});
    }
    return out;
}

Tolerance tolerance(i64 char_K, i64 p, const Rational& ell, std::optional<i64> vK_p) {
    if (char_K == p) return {true, 0};
    if (char_K != 0) throw ParamError("tolerance: characteristic must be 0 or p");
    if (!vK_p) throw ParamError("tolerance: char 0 requires vK_p");
    Rational vLp(p * *vK_p);
    if (!(ell < vLp / Rational(p - 1)))
        throw ParamError("tolerance: ell >= v_L(p)/(p-1) violates the ramification bound");
    Rational tol = vLp - Rational(p - 1) * ell;
    if (!tol.is_integer()) throw InternalError("tolerance: non-integral value");
    return {false, tol.as_integer()};
}

}  // namespace lflab
