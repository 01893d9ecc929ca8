#include "lflab/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lflab {

namespace {

i64 sat_add(i64 a, i64 b) {
    if (a >= LaurentSeries::kExactPrec || b >= LaurentSeries::kExactPrec)
        return LaurentSeries::kExactPrec;
    return std::min(a + b, LaurentSeries::kExactPrec);
}

void check_same_field(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.field()->p != b.field()->p || a.field()->modulus != b.field()->modulus)
        throw DomainError("field mismatch in series arithmetic");
}

}  // namespace

void LaurentSeries::normalize() {
    // drop coefficients at or beyond the precision bound
    if (prec_ < kExactPrec) {
        while (!c_.empty() && v_ + static_cast<i64>(c_.size()) > prec_) c_.pop_back();
    }
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        v_ += static_cast<i64>(lead);
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) v_ = 0;
}

LaurentSeries LaurentSeries::zero(const FieldPtr& f) {
    LaurentSeries s;
    s.field_ = f;
    return s;
}

LaurentSeries LaurentSeries::zero_mod(const FieldPtr& f, i64 prec) {
    LaurentSeries s;
    s.field_ = f;
    s.prec_ = prec;
    return s;
}

LaurentSeries LaurentSeries::one(const FieldPtr& f) { return monomial(f, 1, 0); }

LaurentSeries LaurentSeries::pi(const FieldPtr& f) { return monomial(f, 1, 1); }

LaurentSeries LaurentSeries::monomial(const FieldPtr& f, const FFElem& c, i64 v) {
    LaurentSeries s;
    s.field_ = f;
    s.v_ = v;
    if (!c.is_zero()) s.c_ = {c};
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::monomial(const FieldPtr& f, i64 c, i64 v) {
    return monomial(f, FFElem::from_int(f, c), v);
}

LaurentSeries LaurentSeries::make(const FieldPtr& f, i64 v, std::vector<FFElem> coeffs,
                                  i64 prec) {
    LaurentSeries s;
    s.field_ = f;
    s.v_ = v;
    s.c_ = std::move(coeffs);
    s.prec_ = prec;
    s.normalize();
    return s;
}

i64 LaurentSeries::valuation() const {
    if (c_.empty())
        throw PrecisionError(prec_, "valuation of a series that is zero mod pi^" +
                                        (is_exact() ? std::string("inf") : std::to_string(prec_)));
    return v_;
}

FFElem LaurentSeries::leading() const {
    valuation();  // throws on zero
    return c_[0];
}

FFElem LaurentSeries::coeff(i64 k) const {
    if (c_.empty() || k < v_ || k >= v_ + static_cast<i64>(c_.size()))
        return FFElem::zero(field_);
    return c_[static_cast<size_t>(k - v_)];
}

i64 LaurentSeries::top_exponent() const {
    valuation();
    return v_ + static_cast<i64>(c_.size()) - 1;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    check_same_field(a, b);
    LaurentSeries r;
    r.field_ = a.field_;
    r.prec_ = std::min(a.prec_, b.prec_);
    if (a.c_.empty() && b.c_.empty()) return r;
    i64 lo = a.c_.empty() ? b.v_ : (b.c_.empty() ? a.v_ : std::min(a.v_, b.v_));
    i64 hi_a = a.c_.empty() ? lo : a.v_ + static_cast<i64>(a.c_.size());
    i64 hi_b = b.c_.empty() ? lo : b.v_ + static_cast<i64>(b.c_.size());
    i64 hi = std::max(hi_a, hi_b);
    r.v_ = lo;
    r.c_.reserve(static_cast<size_t>(hi - lo));
    for (i64 k = lo; k < hi; ++k) r.c_.push_back(a.coeff(k) + b.coeff(k));
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    check_same_field(a, b);
    // the product of x (known mod pi^Na) and y is known mod pi^{min(vx+Ny, vy+Nx)}
    i64 va = a.c_.empty() ? a.prec_ : a.v_;
    i64 vb = b.c_.empty() ? b.prec_ : b.v_;
    i64 prec = std::min(sat_add(va, b.prec_), sat_add(vb, a.prec_));
    LaurentSeries r;
    r.field_ = a.field_;
    r.prec_ = prec;
    if (a.c_.empty() || b.c_.empty()) return r;
    size_t n = a.c_.size(), m = b.c_.size();
    r.v_ = a.v_ + b.v_;
    i64 len = static_cast<i64>(n + m - 1);
    if (prec < LaurentSeries::kExactPrec) len = std::min(len, prec - r.v_);
    if (len <= 0) {
        r.v_ = 0;
        return r;
    }
    std::vector<FFElem> out(static_cast<size_t>(len), FFElem::zero(a.field_));
    for (size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        size_t jmax = std::min(m, static_cast<size_t>(len) - i);
        for (size_t j = 0; j < jmax; ++j) {
            if (b.c_[j].is_zero()) continue;
            out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        }
    }
    r.c_ = std::move(out);
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::scaled(const FFElem& c) const {
    if (c.is_zero()) return zero(field_);
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = x * c;
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::scaled_int(i64 n) const { return scaled(FFElem::from_int(field_, n)); }

LaurentSeries LaurentSeries::shifted(i64 k) const {
    LaurentSeries r = *this;
    r.v_ += k;
    r.prec_ = sat_add(r.prec_, k);
    return r;
}

LaurentSeries LaurentSeries::inv(i64 len) const {
    if (c_.empty())
        throw PrecisionError(prec_, "inverse of a series that is zero to precision");
    const i64 v = v_;
    if (c_.size() == 1 && is_exact())  // monomial inverses are exact
        return monomial(field_, c_[0].inv(), -v);
    i64 out_prec = std::min(is_exact() ? kExactPrec : prec_ - 2 * v, sat_add(-v, len));
    i64 n_out = len;
    FFElem lead_inv = c_[0].inv();
    std::vector<FFElem> out;
    out.reserve(static_cast<size_t>(n_out));
    out.push_back(lead_inv);
    for (i64 n = 1; n < n_out; ++n) {
        FFElem acc = FFElem::zero(field_);
        i64 kmax = std::min<i64>(n, static_cast<i64>(c_.size()) - 1);
        for (i64 k = 1; k <= kmax; ++k) acc = acc + c_[static_cast<size_t>(k)] * out[static_cast<size_t>(n - k)];
        out.push_back(-(lead_inv * acc));
    }
    return make(field_, -v, std::move(out), out_prec);
}

LaurentSeries LaurentSeries::div(const LaurentSeries& b, i64 len) const { return *this * b.inv(len); }

LaurentSeries LaurentSeries::pow(i64 n, i64 len) const {
    if (n < 0) return inv(len).pow(-n, len);
    LaurentSeries acc = one(field_);
    LaurentSeries base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

LaurentSeries LaurentSeries::truncated(i64 prec) const {
    LaurentSeries r = *this;
    r.prec_ = std::min(r.prec_, prec);
    r.normalize();
    return r;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.field_->p != b.field_->p || a.field_->modulus != b.field_->modulus) return false;
    if (a.prec_ != b.prec_ || a.c_.size() != b.c_.size()) return false;
    if (!a.c_.empty() && a.v_ != b.v_) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (!(a.c_[i] == b.c_[i])) return false;
    return true;
}

std::string LaurentSeries::str() const {
    std::ostringstream os;
    if (c_.empty()) {
        os << "0";
    } else {
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (os.tellp() > 0) os << " + ";
            os << c_[i].str() << "*pi^" << (v_ + static_cast<i64>(i));
        }
    }
    if (!is_exact()) os << " + O(pi^" << prec_ << ")";
    return os.str();
}

LaurentSeries tame_root(const LaurentSeries& a, i64 d, i64 len) {
    if (d <= 0) throw ParamError("tame_root: d must be positive");
    if (a.field()->p % d == 0 || std::gcd(d, a.field()->p) != 1)
        throw ParamError("tame_root: d must be prime to the characteristic");
    i64 v = a.valuation();
    if (v % d != 0)
        throw RootError(RootError::Code::valuation,
                        "tame_root: valuation " + std::to_string(v) + " not divisible by " +
                            std::to_string(d));
    auto lc_root = nth_root_in_field(a.leading(), d);
    if (!lc_root)
        throw RootError(RootError::Code::residue,
                        "tame_root: leading coefficient is not a d-th power in the residue field");
    LaurentSeries s = LaurentSeries::monomial(a.field(), *lc_root, v / d);
    // Newton iteration on f(s) = s^d - a; quadratic convergence since gcd(d,p)=1.
    for (int iter = 0; iter < 64; ++iter) {
        LaurentSeries err = s.pow(d, len) - a;
        if (err.is_zero()) break;
        LaurentSeries deriv = s.pow(d - 1, len).scaled_int(d);
        s = s - err.div(deriv, len);
        s = s.truncated(sat_add(s.is_zero() ? 0 : s.valuation(), len));
    }
    return s;
}

bool agree_to(const LaurentSeries& a, const LaurentSeries& b, i64 guard) {
    LaurentSeries d = a - b;
    if (!d.is_zero()) return false;
    if (d.is_exact()) return true;
    i64 base_a = a.is_zero() ? a.prec() : a.valuation();
    i64 base_b = b.is_zero() ? b.prec() : b.valuation();
    i64 base = std::min(base_a, base_b);
    if (base >= LaurentSeries::kExactPrec) return true;
    return d.prec() >= base + guard;
}

}  // namespace lflab
