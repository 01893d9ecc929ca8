#include "lflab/tower.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lflab/linalg.hpp"

namespace lflab {

namespace {

i64 mod_pos(i64 a, i64 p) {
    i64 r = a % p;
    return r < 0 ? r + p : r;
}

i64 inv_mod(i64 a, i64 p) {
    a = mod_pos(a, p);
    for (i64 x = 1; x < p; ++x)
        if (mod_pos(a * x, p) == 1) return x;
    throw DomainError("inv_mod: not invertible");
}

}  // namespace

ExtensionParams ExtensionParams::make(i64 p, FieldPtr kappa, i64 e, i64 f, i64 t, i64 b,
                                      LaurentSeries gamma, LaurentSeries mu,
                                      LaurentSeries beta) {
    if (!kappa || kappa->p != p) throw ParamError("kappa must be a residue field of characteristic p");
    if (!is_prime(p)) throw ParamError("p is not prime");
    if (e < 1 || f < 1) throw ParamError("e and f must be positive");
    i64 d = e * f;
    if ((p - 1) % d != 0) throw ParamError("d = ef does not divide p-1");
    if (t < 0 || t >= e) throw ParamError("t out of range [0, e)");
    if (std::gcd(t, e) != 1) throw ParamError("gcd(t, e) != 1");
    if (mod_pos(b, p) == 0) throw ParamError("gcd(b, p) != 1");
    if (e * b + p * t <= 0) throw ParamError("ell = b + pt/e is not positive");
    if (!gamma.known_nonzero() || gamma.valuation() != 0)
        throw ParamError("gamma is not a unit");
    if (!mu.known_nonzero() || mu.valuation() != 0) throw ParamError("mu is not a unit");
    if (quotient_order(mu.leading(), f) != f)
        throw ParamError("residue of mu does not have order f in kappa^x/(kappa^x)^f");
    if (!beta.known_nonzero() || beta.valuation() != -b)
        throw ParamError("v_K(beta) != -b");

    ExtensionParams out;
    out.p = p;
    out.kappa = std::move(kappa);
    out.e = e;
    out.f = f;
    out.t = t;
    out.b = b;
    out.gamma = std::move(gamma);
    out.mu = std::move(mu);
    out.beta = std::move(beta);
    out.d = d;
    out.s = (p - 1) / d;
    out.r = element_of_order(p, d);
    out.rho = FFElem::from_int(out.kappa, out.r);
    out.gamma_res = out.gamma.leading();
    out.mu_res = out.mu.leading();
    out.alpha = LaurentSeries::monomial(out.kappa, out.gamma_res.pow(f) * out.mu_res, f * t);
    return out;
}

NewtonPolygon NewtonPolygon::from_points(std::vector<std::pair<i64, i64>> points) {
    std::sort(points.begin(), points.end());
    NewtonPolygon np;
    auto& h = np.vertices;
    for (const auto& pt : points) {
        while (h.size() >= 2) {
            // pop while the middle point is not strictly below the chord
            auto [x1, y1] = h[h.size() - 2];
            auto [x2, y2] = h[h.size() - 1];
            // cross of (x2-x1, y2-y1) and (pt.x-x1, pt.y-y1); <= 0 means (x2,y2)
            // lies on or above the segment from (x1,y1) to pt
            i64 cross = (x2 - x1) * (pt.second - y1) - (y2 - y1) * (pt.first - x1);
            if (cross <= 0)
                h.pop_back();
            else
                break;
        }
        h.push_back(pt);
    }
    for (size_t i = 0; i + 1 < h.size(); ++i)
        np.slopes.push_back(Rational(h[i + 1].second - h[i].second, h[i + 1].first - h[i].first));
    return np;
}

TowerElement::TowerElement(TowerPtr tw, std::vector<LaurentSeries> coeffs)
    : tw_(std::move(tw)), c_(std::move(coeffs)) {}

const LaurentSeries& TowerElement::coeff(i64 j, i64 i) const {
    return c_[static_cast<size_t>(j * tw_->params().d + i)];
}

bool TowerElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const LaurentSeries& s) { return s.is_zero(); });
}

bool TowerElement::in_L() const {
    const i64 d = tw_->params().d;
    for (size_t k = 0; k < c_.size(); ++k)
        if (static_cast<i64>(k) % d != 0 && c_[k].known_nonzero()) return false;
    return true;
}

bool TowerElement::in_Mprime() const {
    const i64 d = tw_->params().d;
    for (size_t k = 0; k < c_.size(); ++k)
        if (static_cast<i64>(k) >= d && c_[k].known_nonzero()) return false;
    return true;
}

bool TowerElement::in_K() const {
    for (size_t k = 1; k < c_.size(); ++k)
        if (c_[k].known_nonzero()) return false;
    return true;
}

LaurentSeries TowerElement::as_K() const {
    if (!in_K()) throw SubfieldError("element does not lie in K");
    return c_[0];
}

static void check_same_tower(const TowerElement& a, const TowerElement& b) {
    if (a.tower() != b.tower()) throw DomainError("tower mismatch");
}

TowerElement operator+(const TowerElement& a, const TowerElement& b) {
    check_same_tower(a, b);
    TowerElement r = a;
    for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = r.c_[k] + b.c_[k];
    return r;
}

TowerElement TowerElement::operator-() const {
    TowerElement r = *this;
    for (auto& s : r.c_) s = -s;
    return r;
}

TowerElement operator-(const TowerElement& a, const TowerElement& b) { return a + (-b); }

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
    check_same_tower(a, b);
    const auto& P = a.tw_->params();
    const i64 p = P.p, d = P.d;
    std::vector<LaurentSeries> acc(static_cast<size_t>(p * d), LaurentSeries::zero(P.kappa));
    const auto& xpow = a.tw_->xpow_table();
    for (i64 j1 = 0; j1 < p; ++j1)
        for (i64 i1 = 0; i1 < d; ++i1) {
            const LaurentSeries& c1 = a.coeff(j1, i1);
            if (!c1.known_nonzero() && c1.is_exact()) continue;
            for (i64 j2 = 0; j2 < p; ++j2)
                for (i64 i2 = 0; i2 < d; ++i2) {
                    const LaurentSeries& c2 = b.coeff(j2, i2);
                    if (!c2.known_nonzero() && c2.is_exact()) continue;
                    LaurentSeries cs = c1 * c2;
                    i64 i = i1 + i2;
                    if (i >= d) {
                        cs = cs * P.alpha;
                        i -= d;
                    }
                    i64 j = j1 + j2;
                    if (j < p) {
                        size_t k = static_cast<size_t>(j * d + i);
                        acc[k] = acc[k] + cs;
                    } else {
                        const auto& row = xpow[static_cast<size_t>(j - p)];
                        for (i64 jj = 0; jj < p; ++jj) {
                            if (!row[static_cast<size_t>(jj)].known_nonzero()) continue;
                            size_t k = static_cast<size_t>(jj * d + i);
                            acc[k] = acc[k] + cs * row[static_cast<size_t>(jj)];
                        }
                    }
                }
        }
    return TowerElement(a.tw_, std::move(acc));
}

TowerElement TowerElement::scaled(const LaurentSeries& c) const {
    TowerElement r = *this;
    for (auto& s : r.c_) s = s * c;
    return r;
}

TowerElement TowerElement::scaled(const FFElem& c) const {
    TowerElement r = *this;
    for (auto& s : r.c_) s = s.scaled(c);
    return r;
}

TowerElement TowerElement::scaled_int(i64 n) const {
    return scaled(FFElem::from_int(tw_->params().kappa, n));
}

TowerElement TowerElement::pow(i64 n) const {
    if (n < 0) throw DomainError("TowerElement::pow: negative exponent");
    TowerElement acc = tw_->one();
    TowerElement base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool operator==(const TowerElement& a, const TowerElement& b) {
    if (a.tw_ != b.tw_) return false;
    for (size_t k = 0; k < a.c_.size(); ++k)
        if (a.c_[k] != b.c_[k]) return false;
    return true;
}

std::string TowerElement::str() const {
    const auto& P = tw_->params();
    std::ostringstream os;
    bool first = true;
    for (i64 j = 0; j < P.p; ++j)
        for (i64 i = 0; i < P.d; ++i) {
            const auto& c = coeff(j, i);
            if (!c.known_nonzero() && c.is_exact()) continue;
            if (!first) os << "  +  ";
            first = false;
            os << "(" << c.str() << ")";
            if (j) os << "*x^" << j;
            if (i) os << "*y^" << i;
        }
    if (first) os << "0";
    return os.str();
}

TowerPtr Tower::build(ExtensionParams params, std::optional<i64> prec_len) {
    auto tw = std::shared_ptr<Tower>(new Tower());
    const i64 p = params.p;
    tw->prec_len_ =
        prec_len.value_or(64 + 4 * (std::abs(params.b) + p * params.t + p));

    // Newton polygon of g(X) = X^p - alpha^s X - beta
    LaurentSeries alpha_s = params.alpha.pow(params.s, tw->prec_len_);
    std::vector<std::pair<i64, i64>> pts;
    pts.emplace_back(0, (-params.beta).valuation());
    if (alpha_s.known_nonzero()) pts.emplace_back(1, alpha_s.valuation());
    pts.emplace_back(p, 0);
    tw->polygon_ = NewtonPolygon::from_points(std::move(pts));
    if (!tw->polygon_.single_segment() || tw->polygon_.slopes[0] != Rational(params.b, p))
        throw InternalError(
            "defining polynomial does not have a single Newton segment of slope b/p");

    // x^{p+k} on the basis {x^j}, from x^p = alpha^s x + beta
    const i64 d = params.d;
    std::vector<LaurentSeries> cur(static_cast<size_t>(p), LaurentSeries::zero(params.kappa));
    cur[0] = params.beta;
    cur[1] = alpha_s;
    tw->xpow_.push_back(cur);
    for (i64 k = 1; k <= p - 2; ++k) {
        std::vector<LaurentSeries> next(static_cast<size_t>(p),
                                        LaurentSeries::zero(params.kappa));
        // multiply by x: shift, folding the x^p term back in
        LaurentSeries top = cur[static_cast<size_t>(p - 1)];
        for (i64 j = p - 1; j >= 1; --j) next[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)];
        if (top.known_nonzero()) {
            next[0] = next[0] + top * params.beta;
            next[1] = next[1] + top * alpha_s;
        }
        tw->xpow_.push_back(next);
        cur = std::move(next);
    }
    (void)d;
    tw->params_ = std::move(params);
    return tw;
}

TowerElement Tower::zero() const {
    const i64 n = params_.p * params_.d;
    return TowerElement(shared_from_this(),
                        std::vector<LaurentSeries>(static_cast<size_t>(n),
                                                   LaurentSeries::zero(params_.kappa)));
}

TowerElement Tower::monomial(i64 j, i64 i, const LaurentSeries& c) const {
    if (j < 0 || j >= params_.p || i < 0 || i >= params_.d)
        throw DomainError("monomial index out of range");
    TowerElement z = zero();
    z.c_[static_cast<size_t>(j * params_.d + i)] = c;
    return z;
}

TowerElement Tower::one() const { return from_K(LaurentSeries::one(params_.kappa)); }

TowerElement Tower::x() const { return monomial(1, 0, LaurentSeries::one(params_.kappa)); }

TowerElement Tower::y() const {
    if (params_.d == 1) return from_K(params_.alpha);  // y = alpha lies in K
    return monomial(0, 1, LaurentSeries::one(params_.kappa));
}

TowerElement Tower::pi_K() const { return from_K(LaurentSeries::pi(params_.kappa)); }

TowerElement Tower::from_K(const LaurentSeries& c) const { return monomial(0, 0, c); }

TowerElement Tower::y_pow(i64 k) const {
    const i64 d = params_.d;
    i64 i = mod_pos(k, d);
    i64 q = (k - i) / d;  // y^k = alpha^q y^i
    LaurentSeries aq = params_.alpha.pow(q, prec_len_);
    if (d == 1) return from_K(aq);
    return monomial(0, i, aq);
}

TowerElement Tower::apply_hom(const TowerElement& z, const TowerElement& img_x,
                              const TowerElement& img_y) const {
    const i64 p = params_.p, d = params_.d;
    std::vector<TowerElement> xp, yp;
    xp.reserve(static_cast<size_t>(p));
    yp.reserve(static_cast<size_t>(d));
    xp.push_back(one());
    for (i64 j = 1; j < p; ++j) xp.push_back(xp.back() * img_x);
    yp.push_back(one());
    for (i64 i = 1; i < d; ++i) yp.push_back(yp.back() * img_y);
    TowerElement acc = zero();
    for (i64 j = 0; j < p; ++j)
        for (i64 i = 0; i < d; ++i) {
            const LaurentSeries& c = z.coeff(j, i);
            if (!c.known_nonzero() && c.is_exact()) continue;
            acc = acc + (xp[static_cast<size_t>(j)] * yp[static_cast<size_t>(i)]).scaled(c);
        }
    return acc;
}

TowerElement Tower::sigma_x() const { return x() + y(); }

TowerElement Tower::tau_y() const { return y().scaled(params_.rho); }

i64 valuation_M(const TowerElement& a) {
    const auto& P = a.tower()->params();
    const i64 ep = P.e * P.p;
    bool have = false;
    i64 vmin = 0;
    i64 unknown_bound = LaurentSeries::kExactPrec;
    for (i64 j = 0; j < P.p; ++j)
        for (i64 i = 0; i < P.d; ++i) {
            const LaurentSeries& c = a.coeff(j, i);
            i64 shift = -P.e * P.b * j + P.p * P.t * i;
            if (c.known_nonzero()) {
                i64 v = ep * c.valuation() + shift;
                if (!have || v < vmin) vmin = v;
                have = true;
            } else if (!c.is_exact()) {
                unknown_bound = std::min(unknown_bound, ep * c.prec() + shift);
            }
        }
    if (!have)
        throw PrecisionError(unknown_bound, "valuation of tower element zero to precision");
    if (unknown_bound <= vmin)
        throw PrecisionError(unknown_bound,
                             "tower element valuation not resolvable at working precision");
    return vmin;
}

Rational valuation_in(const TowerElement& a, Level level) {
    const auto& P = a.tower()->params();
    switch (level) {
        case Level::M:
            return Rational(valuation_M(a));
        case Level::L:
            if (!a.in_L()) throw SubfieldError("element not in L");
            return Rational(valuation_M(a), P.e);
        case Level::Mprime:
            if (!a.in_Mprime()) throw SubfieldError("element not in M'");
            return Rational(valuation_M(a), P.p);
        case Level::K:
            if (!a.in_K()) throw SubfieldError("element not in K");
            return Rational(valuation_M(a), P.e * P.p);
    }
    throw DomainError("bad level");
}

i64 valuation_via_norm(const TowerElement& a) {
    const auto& P = a.tower()->params();
    const auto tw = a.tower();
    const i64 n = P.p * P.d;
    // multiplication matrix of a on the K-basis {x^j y^i}
    linalg::Mat m(static_cast<size_t>(n));
    for (i64 j = 0; j < P.p; ++j)
        for (i64 i = 0; i < P.d; ++i) {
            TowerElement col = a * tw->monomial(j, i, LaurentSeries::one(P.kappa));
            size_t ci = static_cast<size_t>(j * P.d + i);
            for (i64 row = 0; row < n; ++row) {
                i64 rj = row / P.d, ri = row % P.d;
                if (m[static_cast<size_t>(row)].empty())
                    m[static_cast<size_t>(row)].resize(static_cast<size_t>(n),
                                                       LaurentSeries::zero(P.kappa));
                m[static_cast<size_t>(row)][ci] = col.coeff(rj, ri);
            }
        }
    LaurentSeries det = linalg::det(std::move(m), tw->prec_len());
    i64 vk = det.valuation();  // throws PrecisionError if unresolved
    if (vk % P.f != 0) throw InternalError("norm valuation not divisible by f");
    return vk / P.f;
}

TowerElement norm(const TowerElement& a, SubExt sub) {
    const auto tw = a.tower();
    const auto& P = tw->params();
    auto sigma_orbit_product = [&](const TowerElement& z) {
        TowerElement acc = tw->one();
        for (i64 i = 0; i < P.p; ++i)
            acc = acc * tw->apply_hom(z, tw->x() + tw->y().scaled_int(i), tw->y());
        return acc;
    };
    auto tau_orbit_product = [&](const TowerElement& z) {
        TowerElement acc = tw->one();
        for (i64 k = 0; k < P.d; ++k)
            acc = acc * tw->apply_hom(z, tw->x(), tw->y().scaled(P.rho.pow(k)));
        return acc;
    };
    switch (sub) {
        case SubExt::M_over_Mprime: {
            TowerElement r = sigma_orbit_product(a);
            if (!r.in_Mprime()) throw InternalError("norm M/M' left M'");
            return r;
        }
        case SubExt::M_over_L: {
            TowerElement r = tau_orbit_product(a);
            if (!r.in_L()) throw InternalError("norm M/L left L");
            return r;
        }
        case SubExt::L_over_K: {
            if (!a.in_L()) throw SubfieldError("norm L/K: element not in L");
            TowerElement r = sigma_orbit_product(a);
            if (!r.in_K()) throw InternalError("norm L/K left K");
            return r;
        }
        case SubExt::Mprime_over_K: {
            if (!a.in_Mprime()) throw SubfieldError("norm M'/K: element not in M'");
            TowerElement r = tau_orbit_product(a);
            if (!r.in_K()) throw InternalError("norm M'/K left K");
            return r;
        }
        case SubExt::M_over_K:
            return norm(norm(a, SubExt::M_over_Mprime), SubExt::Mprime_over_K);
    }
    throw DomainError("bad sub-extension");
}

TowerElement trace(const TowerElement& a, SubExt sub) {
    const auto tw = a.tower();
    const auto& P = tw->params();
    auto sigma_orbit_sum = [&](const TowerElement& z) {
        TowerElement acc = tw->zero();
        for (i64 i = 0; i < P.p; ++i)
            acc = acc + tw->apply_hom(z, tw->x() + tw->y().scaled_int(i), tw->y());
        return acc;
    };
    auto tau_orbit_sum = [&](const TowerElement& z) {
        TowerElement acc = tw->zero();
        for (i64 k = 0; k < P.d; ++k)
            acc = acc + tw->apply_hom(z, tw->x(), tw->y().scaled(P.rho.pow(k)));
        return acc;
    };
    switch (sub) {
        case SubExt::M_over_Mprime: {
            TowerElement r = sigma_orbit_sum(a);
            if (!r.in_Mprime()) throw InternalError("trace M/M' left M'");
            return r;
        }
        case SubExt::M_over_L: {
            TowerElement r = tau_orbit_sum(a);
            if (!r.in_L()) throw InternalError("trace M/L left L");
            return r;
        }
        case SubExt::L_over_K: {
            if (!a.in_L()) throw SubfieldError("trace L/K: element not in L");
            TowerElement r = sigma_orbit_sum(a);
            if (!r.in_K()) throw InternalError("trace L/K left K");
            return r;
        }
        case SubExt::Mprime_over_K: {
            if (!a.in_Mprime()) throw SubfieldError("trace M'/K: element not in M'");
            TowerElement r = tau_orbit_sum(a);
            if (!r.in_K()) throw InternalError("trace M'/K left K");
            return r;
        }
        case SubExt::M_over_K:
            return trace(trace(a, SubExt::M_over_Mprime), SubExt::Mprime_over_K);
    }
    throw DomainError("bad sub-extension");
}

std::vector<LaurentSeries> min_poly(const TowerElement& a) {
    const auto tw = a.tower();
    const auto& P = tw->params();
    const i64 n = P.p * P.d;
    const i64 len = tw->prec_len();

    struct EchRow {
        std::vector<LaurentSeries> v;
        std::vector<LaurentSeries> comb;
        size_t pivot;
    };
    std::vector<EchRow> rows;

    auto flatten = [&](const TowerElement& z) {
        std::vector<LaurentSeries> v;
        v.reserve(static_cast<size_t>(n));
        for (i64 j = 0; j < P.p; ++j)
            for (i64 i = 0; i < P.d; ++i) v.push_back(z.coeff(j, i));
        return v;
    };

    TowerElement power = tw->one();
    for (i64 k = 0; k <= n; ++k) {
        std::vector<LaurentSeries> w = flatten(power);
        std::vector<LaurentSeries> comb(static_cast<size_t>(k + 1),
                                        LaurentSeries::zero(P.kappa));
        comb[static_cast<size_t>(k)] = LaurentSeries::one(P.kappa);
        for (const auto& row : rows) {
            if (!w[row.pivot].known_nonzero()) continue;
            LaurentSeries factor = w[row.pivot].div(row.v[row.pivot], len);
            for (size_t c = 0; c < w.size(); ++c) w[c] = w[c] - factor * row.v[c];
            for (size_t c = 0; c < row.comb.size(); ++c)
                comb[c] = comb[c] - factor * row.comb[c];
        }
        bool zero = std::all_of(w.begin(), w.end(),
                                [](const LaurentSeries& s) { return s.is_zero(); });
        if (zero) return comb;  // monic: the a^k coefficient was never touched
        // pivot on minimal valuation
        size_t piv = 0;
        bool have = false;
        i64 best = 0;
        for (size_t c = 0; c < w.size(); ++c) {
            if (!w[c].known_nonzero()) continue;
            i64 v = w[c].valuation();
            if (!have || v < best) {
                piv = c;
                best = v;
                have = true;
            }
        }
        rows.push_back({std::move(w), std::move(comb), piv});
        power = power * a;
    }
    throw InternalError("min_poly: no dependence found within [M:K]");
}

TowerElement uniformizer_L(const TowerPtr& tw) {
    const auto& P = tw->params();
    i64 a1 = mod_pos(-inv_mod(P.b, P.p), P.p);
    i64 f1 = (1 + a1 * P.b) / P.p;
    TowerElement lam =
        tw->monomial(a1, 0, LaurentSeries::monomial(P.kappa, 1, f1));
    if (!(valuation_in(lam, Level::L) == Rational(1)))
        throw InternalError("uniformizer_L: v_L(lambda_1) != 1");
    return lam;
}

i64 different_exponent_exact(const TowerPtr& tw) {
    const auto& P = tw->params();
    TowerElement lam = uniformizer_L(tw);
    i64 a1 = mod_pos(-inv_mod(P.b, P.p), P.p);
    i64 f1 = (1 + a1 * P.b) / P.p;
    // g = prod over the p roots x + iy of X^p - alpha^s X - beta, so
    // g'(lambda_1) = prod_{i>0} (lambda_1 - (x+iy)^{a(1)} pi^{f_1}); certify the
    // roots first, then the product stays in exact sparse arithmetic.
    LaurentSeries alpha_s = P.alpha.pow(P.s, tw->prec_len());
    TowerElement acc = tw->one();
    for (i64 i = 1; i < P.p; ++i) {
        TowerElement root = tw->x() + tw->y().scaled_int(i);
        TowerElement check = root.pow(P.p) - root.scaled(alpha_s) - tw->from_K(P.beta);
        if (!check.is_zero())
            throw InternalError("different_exponent: x + iy is not a root of the defining polynomial");
        TowerElement conj =
            root.pow(a1).scaled(LaurentSeries::monomial(P.kappa, 1, f1));
        acc = acc * (lam - conj);
    }
    i64 vM = valuation_M(acc);
    if (vM % P.e != 0) throw InternalError("different_exponent: v_M(g'(lambda_1)) not in e*Z");
    return vM / P.e;
}

ExtensionParams classify(i64 p, const FieldPtr& kappa, const LaurentSeries& alpha,
                         const LaurentSeries& beta, i64 d) {
    if (d < 1 || (p - 1) % d != 0) throw ParamError("classify: d does not divide p-1");
    if (!beta.known_nonzero()) throw ParamError("classify: beta is zero");
    i64 b = -beta.valuation();
    if (mod_pos(b, p) == 0) throw ParamError("classify: gcd(b, p) != 1");
    if (!alpha.known_nonzero() || alpha.valuation() < 0)
        throw ParamError("classify: alpha is not integral");
    i64 w = alpha.valuation();
    // prefer maximal inertia when several factorizations are admissible
    for (i64 f = d; f >= 1; --f) {
        if (d % f != 0) continue;
        i64 e = d / f;
        if (w % f != 0) continue;
        i64 t = w / f;
        if (t < 0 || t >= e || std::gcd(t, e) != 1) continue;
        LaurentSeries u = alpha.shifted(-f * t);  // unit part
        if (quotient_order(u.leading(), f) != f) continue;
        if (e * b + p * t <= 0) continue;
        return ExtensionParams::make(p, kappa, e, f, t, b, LaurentSeries::one(kappa), u, beta);
    }
    throw ParamError("classify: no admissible (e,f,t) for the given alpha and d");
}

bool agree(const TowerElement& a, const TowerElement& b, i64 guard) {
    const auto& P = a.tower()->params();
    for (i64 j = 0; j < P.p; ++j)
        for (i64 i = 0; i < P.d; ++i)
            if (!agree_to(a.coeff(j, i), b.coeff(j, i), guard)) return false;
    return true;
}

}  // namespace lflab
