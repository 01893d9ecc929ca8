#pragma once

#include <optional>
#include <vector>

#include "lflab/ffield.hpp"
#include "lflab/rational.hpp"

namespace lflab {

// Parameter-level ramification data; characteristic-agnostic (char_K is 0 or p,
// char 0 carries vK_p = v_K(p)).  No tower is needed in this module.
struct RamParams {
    i64 p;
    i64 e, f, t, b;
    i64 char_K;               // 0 or p
    std::optional<i64> vK_p;  // required when char_K = 0

    i64 d() const { return e * f; }
};

// ParamError naming the violated clause.
void validate(const RamParams& rp);

Rational ram_number(const RamParams& rp);  // ell = b + pt/e
i64 b_prime(const RamParams& rp);          // e*b + p*t
i64 diff_exp(const RamParams& rp);         // (ell + 1)(p - 1), exact integer

enum class Convention { Serre, Artin };
enum class Ext { L_over_K, M_over_K, M_over_Mprime };

struct HerbrandFunction {
    std::vector<std::pair<Rational, Rational>> vertices;
    Rational terminal_slope;

    Rational eval(const Rational& x) const;  // piecewise-linear evaluation
};

HerbrandFunction herbrand(const RamParams& rp, Ext ext, Convention conv);

// Serre -> Artin adds 1, Artin -> Serre subtracts 1.
Rational convert_convention(const Rational& v, Convention from, Convention to);

// ell < v_L(p)/(p-1) - 2 in char 0; always true in char p.
bool scaffold_condition(const RamParams& rp);

}  // namespace lflab
