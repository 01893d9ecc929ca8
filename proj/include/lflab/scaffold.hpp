#pragma once

#include <optional>
#include <vector>

#include "lflab/rational.hpp"
#include "lflab/tower.hpp"

namespace lflab {

// Shift bookkeeping a(t) = -t b^{-1} mod p, f_t = (t + a(t) b)/p, and the valued
// basis lambda_t = x^{a(t)} pi_K^{f_t} of L with v_L(lambda_t) = t.
struct ScaffoldData {
    TowerPtr tw;
    i64 b;
    std::vector<i64> a_table;  // a(t) for t = 0..p-1

    i64 a(i64 t) const;        // any integer t
    i64 f(i64 t) const;        // t = -a(t) b + f(t) p
    i64 bfun(i64 s) const { return s * b; }
    TowerElement lambda(i64 t) const;  // v_L = t, certified on construction
};

ScaffoldData build_scaffold(const TowerPtr& tw);

struct ScaffoldCheck {
    i64 t;
    bool pass;
};

// Psi.lambda_t == a(t) lambda_{t+b} (0 when a(t) = 0), exactly, for t in [lo, hi).
std::vector<ScaffoldCheck> verify_scaffold(const TowerPtr& tw, i64 lo, i64 hi);

struct Tolerance {
    bool infinite;
    i64 value;  // meaningful when !infinite
};

// char p: infinite.  char 0: v_L(p) - (p-1) ell with v_L(p) = p * vK_p;
// ParamError if ell >= v_L(p)/(p-1).
Tolerance tolerance(i64 char_K, i64 p, const Rational& ell, std::optional<i64> vK_p);

}  // namespace lflab
