#include "lflab/modstruct.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "lflab/hopf.hpp"
#include "lflab/scaffold.hpp"

namespace lflab {

namespace {

i64 mod_pos(i64 a, i64 p) {
    i64 r = a % p;
    return r < 0 ? r + p : r;
}

i64 floordiv(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::vector<i64> a_table(i64 p, i64 b) {
    i64 binv = 0;
    for (i64 x = 1; x < p; ++x)
        if (mod_pos(b * x, p) == 1) binv = x;
    if (binv == 0) throw ParamError("modstruct: gcd(b, p) != 1");
    std::vector<i64> a(static_cast<size_t>(p));
    for (i64 t = 0; t < p; ++t) a[static_cast<size_t>(t)] = mod_pos(-t * binv, p);
    return a;
}

}  // namespace

OrderBasis assoc_order(i64 p, i64 b, i64 n) {
    auto a = a_table(p, b);
    OrderBasis ob;
    ob.n = n;
    ob.b = b;
    ob.b_bar = mod_pos(b, p);
    ob.d_vec.assign(static_cast<size_t>(p), 0);
    for (i64 j = 1; j < p; ++j) {
        i64 best = std::numeric_limits<i64>::max();
        for (i64 t = n; t < n + p; ++t)
            if (a[static_cast<size_t>(mod_pos(t, p))] >= j)
                best = std::min(best, floordiv(t + j * b - n, p));
        ob.d_vec[static_cast<size_t>(j)] = -best;
    }
    return ob;
}

std::optional<Verdict> freeness_paper(i64 p, i64 b, i64 n) {
    i64 b_bar = mod_pos(b, p);
    i64 nb = mod_pos(n, p);
    std::optional<bool> free;
    if (nb == b_bar)
        free = true;
    else if (nb == 0)
        free = (p - 1) % b_bar == 0;
    else if (nb == mod_pos(b_bar + 1, p))
        free = b_bar == p - 1;
    if (!free) return std::nullopt;
    return Verdict{nb, b_bar, *free, *free ? 1 : -1, -1, "paper-criterion"};
}

Verdict freeness_bruteforce(i64 p, i64 b, i64 n) {
    auto a = a_table(p, b);
    OrderBasis ob = assoc_order(p, b, n);
    const auto& d = ob.d_vec;

    // the unique candidate generator class: a(t*) = p-1, i.e. t* = b mod p
    i64 t_star = n + mod_pos(b - n, p);
    bool free = true;
    for (i64 j = 0; j < p; ++j) {
        i64 reach = d[static_cast<size_t>(j)] * p + t_star + j * b;
        i64 want = n + mod_pos(t_star + j * b - n, p);
        if (reach < want) throw InternalError("generator reach below the ideal floor");
        if (reach != want) {
            free = false;
            break;
        }
    }

    // Nakayama: dim P^n / M.P^n per valuation class mod p
    const i64 inf = std::numeric_limits<i64>::max();
    std::vector<i64> mprime(static_cast<size_t>(p), inf);
    auto update = [&](i64 v) {
        size_t c = static_cast<size_t>(mod_pos(v, p));
        mprime[c] = std::min(mprime[c], v);
    };
    for (i64 t = n; t < n + p; ++t) {
        update(t + p);  // pi * lambda_t
        for (i64 j = 1; j < p; ++j)
            if (a[static_cast<size_t>(mod_pos(t, p))] >= j)
                update(d[static_cast<size_t>(j)] * p + t + j * b);  // pi^{d_j} Psi^j lambda_t
    }
    i64 n_gen = 0;
    for (i64 c = 0; c < p; ++c) {
        i64 floor_v = n + mod_pos(c - n, p);
        i64 mv = mprime[static_cast<size_t>(c)];
        if (mv == inf || mv < floor_v || (mv - floor_v) % p != 0)
            throw InternalError("Nakayama valuation model inconsistency");
        n_gen += (mv - floor_v) / p;
    }
    if (free != (n_gen == 1))
        throw InternalError("freeness flag disagrees with the Nakayama count");

    // embedding dimension dim M/M^2 from the exponent model of the maximal ideal
    i64 edim = 1;  // the j = 0 slot: e_0 = 1, e'_0 = 2
    for (i64 j = 1; j < p; ++j) {
        i64 ej = d[static_cast<size_t>(j)];
        i64 ejp = 1 + ej;
        for (i64 j1 = 1; j1 < j; ++j1)
            ejp = std::min(ejp, d[static_cast<size_t>(j1)] + d[static_cast<size_t>(j - j1)]);
        if (ejp < ej) throw InternalError("maximal ideal not closed under products");
        edim += ejp - ej;
    }

    return Verdict{mod_pos(n, p), ob.b_bar, free, n_gen, edim, "brute-force"};
}

ReconcileResult reconcile(i64 p, i64 b, i64 n_lo, i64 n_hi) {
    ReconcileResult res{true, {}};
    for (i64 n = n_lo; n < n_hi; ++n) {
        auto paper = freeness_paper(p, b, n);
        if (!paper) continue;
        Verdict bf = freeness_bruteforce(p, b, n);
        if (paper->free != bf.free) {
            res.pass = false;
            std::ostringstream os;
            os << "p=" << p << " b=" << b << " n=" << n << ": paper says "
               << (paper->free ? "free" : "not free") << ", brute force says "
               << (bf.free ? "free" : "not free") << " (n_generators=" << bf.n_generators << ")";
            res.disagreements.push_back(os.str());
        }
    }
    return res;
}

bool certify_order(const TowerPtr& tw, i64 n) {
    const auto& P = tw->params();
    OrderBasis ob = assoc_order(P.p, P.b, n);
    ScaffoldData sd = build_scaffold(tw);
    GroupRingElem Psi = psi(tw, 1);
    GroupRingElem h = GroupRingElem::one(tw);
    for (i64 j = 0; j < P.p; ++j) {
        i64 dj = ob.d_vec[static_cast<size_t>(j)];
        i64 vmin = std::numeric_limits<i64>::max();
        for (i64 t = n; t < n + P.p; ++t) {
            TowerElement w = act(h, sd.lambda(t));
            if (w.is_zero()) continue;
            i64 v = dj * P.p + valuation_in(w, Level::L).as_integer();
            if (v < n) throw InternalError("certify_order: pi^{d_j} Psi^j leaves P^n");
            vmin = std::min(vmin, v);
        }
        if (vmin == std::numeric_limits<i64>::max())
            throw InternalError("certify_order: Psi^j annihilated the spanning set");
        if (j >= 1 && vmin - P.p >= n)
            throw InternalError("certify_order: d_j not maximal");
        h = h * Psi;
    }
    return true;
}

}  // namespace lflab
