#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lflab/ffield.hpp"

namespace lflab {

// Truncated Laurent series over a finite field: the exact model of K = kappa((pi)).
//
// A series is known modulo pi^prec.  Series built from finitely many monomials are
// exact (prec = kExactPrec) and stay exact under ring operations; truncation enters
// only through inversion.  Precision combines pessimistically (min rule).
class LaurentSeries {
  public:
    static constexpr i64 kExactPrec = (INT64_MAX / 4);

    LaurentSeries() = default;

    static LaurentSeries zero(const FieldPtr& f);                // exact zero
    static LaurentSeries zero_mod(const FieldPtr& f, i64 prec);  // zero to precision
    static LaurentSeries one(const FieldPtr& f);
    static LaurentSeries pi(const FieldPtr& f);  // the uniformizer
    static LaurentSeries monomial(const FieldPtr& f, const FFElem& c, i64 v);
    static LaurentSeries monomial(const FieldPtr& f, i64 c, i64 v);
    // coeffs[k] multiplies pi^{v+k}
    static LaurentSeries make(const FieldPtr& f, i64 v, std::vector<FFElem> coeffs,
                              i64 prec = kExactPrec);

    const FieldPtr& field() const { return field_; }
    bool known_nonzero() const { return !c_.empty(); }
    bool is_zero() const { return c_.empty(); }        // zero to known precision
    bool is_exact() const { return prec_ == kExactPrec; }
    bool is_exact_zero() const { return c_.empty() && is_exact(); }
    i64 prec() const { return prec_; }

    // Valuation of the leading term; PrecisionError if zero to precision.
    i64 valuation() const;
    FFElem leading() const;  // coefficient at the valuation
    FFElem coeff(i64 k) const;
    i64 top_exponent() const;  // largest exponent with a nonzero known coefficient

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries operator-() const;
    LaurentSeries scaled(const FFElem& c) const;
    LaurentSeries scaled_int(i64 n) const;
    LaurentSeries shifted(i64 k) const;  // multiply by pi^k

    // Inverse computed to `len` coefficients past the leading term (and never beyond
    // what the operand's own precision supports).
    LaurentSeries inv(i64 len) const;
    LaurentSeries div(const LaurentSeries& b, i64 len) const;
    LaurentSeries pow(i64 n, i64 len) const;  // negative n allowed for nonzero series

    LaurentSeries truncated(i64 prec) const;

    // Exact same represented object (field, valuation, coefficients, precision).
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);
    friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }

    std::string str() const;

  private:
    void normalize();

    FieldPtr field_;
    i64 v_ = 0;                // valuation offset; meaningful when c_ nonempty
    std::vector<FFElem> c_;    // c_[0] != 0 when nonempty
    i64 prec_ = kExactPrec;
};

// d-th root with gcd(d, p) = 1 via Newton iteration; RootError with a distinguished
// code when the valuation is not divisible by d or the leading coefficient has no
// d-th root in the coefficient field.
LaurentSeries tame_root(const LaurentSeries& a, i64 d, i64 len);

// a == b at least to precision `guard` past min valuation (or exactly).
bool agree_to(const LaurentSeries& a, const LaurentSeries& b, i64 guard);

}  // namespace lflab
