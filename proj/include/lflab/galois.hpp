#pragma once

#include <vector>

#include "lflab/tower.hpp"

namespace lflab {

// Automorphism of M/K stored by generator images; composition is substitution.
struct Automorphism {
    TowerPtr tw;
    TowerElement image_x, image_y;

    TowerElement apply(const TowerElement& z) const { return tw->apply_hom(z, image_x, image_y); }

    static Automorphism identity(const TowerPtr& tw);
    static Automorphism sigma(const TowerPtr& tw);  // x -> x + y, y -> y
    static Automorphism tau(const TowerPtr& tw);    // x -> x, y -> rho*y
};

Automorphism compose(const Automorphism& a, const Automorphism& b);  // a after b
Automorphism auto_pow(const Automorphism& a, i64 n);                 // n >= 0

struct RelationsReport {
    bool sigma_p;  // sigma^p = id
    bool tau_d;    // tau^d = id
    bool conj;     // tau sigma tau^{-1} = sigma^r
    bool all() const { return sigma_p && tau_d && conj; }
};

// Checks the group presentation on the generators x, y.
RelationsReport verify_relations(const TowerPtr& tw);

// v_M((sigma - 1)z) - v_M(z); for z = x this is the break b' = eb + pt of M/M'.
// DomainError if sigma fixes z or p | v_M(z).
i64 break_via_action(const TowerElement& z);

struct TraceIdealCheck {
    i64 n;
    i64 r;  // observed: min v_L over Tr_{M/L} of a spanning set of P_M^n
    bool pass;  // r == ceil(n/e)
};

// Tr_{M/L}(P_M^n) = P_L^{ceil(n/e)}: traces the O_K-spanning set
// {u^a x^j y^i pi^k} of valuation >= n, u the inertia unit y^e/(pi^t gamma).
TraceIdealCheck trace_ideal_check(const TowerPtr& tw, i64 n);

}  // namespace lflab
