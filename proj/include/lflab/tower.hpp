#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "lflab/rational.hpp"
#include "lflab/series.hpp"

namespace lflab {

// The datum of a typical degree-p extension in normal form
//   x^p - alpha^s x = beta,   alpha = pi^{ft} gamma^f mu,
// together with the derived quantities.  gamma and mu are accepted as arbitrary
// unit series but canonically reduced to their residues, which is all the
// construction depends on; the residues used are recorded.
struct ExtensionParams {
    i64 p;
    FieldPtr kappa;
    i64 e, f, t, b;
    LaurentSeries gamma, mu, beta;

    // derived
    i64 d, s;
    i64 r;          // canonical integer of order d mod p
    FFElem rho;     // image of r in kappa
    FFElem gamma_res, mu_res;
    LaurentSeries alpha;  // pi^{ft} * gamma_res^f * mu_res

    Rational ell() const { return Rational(b) + Rational(p * t, e); }
    i64 b_prime() const { return e * b + p * t; }

    // Validates every constraint; ParamError names the violated clause.
    static ExtensionParams make(i64 p, FieldPtr kappa, i64 e, i64 f, i64 t, i64 b,
                                LaurentSeries gamma, LaurentSeries mu, LaurentSeries beta);
};

// Lower convex hull of (index, valuation) points of a polynomial over K.
struct NewtonPolygon {
    std::vector<std::pair<i64, i64>> vertices;
    std::vector<Rational> slopes;  // strictly increasing

    bool single_segment() const { return vertices.size() == 2; }

    // points: (index, valuation); zero coefficients omitted by the caller.
    static NewtonPolygon from_points(std::vector<std::pair<i64, i64>> points);
};

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

// Element of M = K(x,y) on the K-basis {x^j y^i : 0 <= j < p, 0 <= i < d},
// kept reduced via y^d = alpha and x^p = alpha^s x + beta.
class TowerElement {
  public:
    TowerElement() = default;
    TowerElement(TowerPtr tw, std::vector<LaurentSeries> coeffs);

    const TowerPtr& tower() const { return tw_; }
    const LaurentSeries& coeff(i64 j, i64 i) const;

    bool is_zero() const;  // zero to precision in every coefficient
    bool in_L() const;     // support only on y^0
    bool in_Mprime() const;
    bool in_K() const;
    LaurentSeries as_K() const;  // SubfieldError unless in_K

    friend TowerElement operator+(const TowerElement& a, const TowerElement& b);
    friend TowerElement operator-(const TowerElement& a, const TowerElement& b);
    friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
    TowerElement operator-() const;
    TowerElement scaled(const LaurentSeries& c) const;
    TowerElement scaled(const FFElem& c) const;
    TowerElement scaled_int(i64 n) const;
    TowerElement pow(i64 n) const;  // n >= 0

    friend bool operator==(const TowerElement& a, const TowerElement& b);
    friend bool operator!=(const TowerElement& a, const TowerElement& b) { return !(a == b); }

    std::string str() const;

  private:
    friend class Tower;
    TowerPtr tw_;
    std::vector<LaurentSeries> c_;  // index j*d + i
};

enum class Level { K, Mprime, L, M };
enum class SubExt { M_over_Mprime, M_over_L, L_over_K, Mprime_over_K, M_over_K };

class Tower : public std::enable_shared_from_this<Tower> {
  public:
    // Certifies the single-segment Newton polygon of the defining polynomial
    // (slope b/p, hence irreducible and totally ramified); InternalError if the
    // certificate fails, ParamError for bad params.
    static TowerPtr build(ExtensionParams params, std::optional<i64> prec_len = std::nullopt);

    const ExtensionParams& params() const { return params_; }
    const NewtonPolygon& defining_polygon() const { return polygon_; }
    i64 prec_len() const { return prec_len_; }

    TowerElement zero() const;
    TowerElement one() const;
    TowerElement x() const;
    TowerElement y() const;
    TowerElement pi_K() const;
    TowerElement from_K(const LaurentSeries& c) const;
    TowerElement monomial(i64 j, i64 i, const LaurentSeries& c) const;
    TowerElement y_pow(i64 k) const;  // any integer exponent

    // K-algebra homomorphism determined by x -> img_x, y -> img_y.
    TowerElement apply_hom(const TowerElement& z, const TowerElement& img_x,
                           const TowerElement& img_y) const;

    TowerElement sigma_x() const;  // x + y
    TowerElement tau_y() const;    // rho * y

    // x^{p+k} on the basis {x^j}, 0 <= k <= p-2
    const std::vector<std::vector<LaurentSeries>>& xpow_table() const { return xpow_; }

  private:
    Tower() = default;
    ExtensionParams params_;
    NewtonPolygon polygon_;
    i64 prec_len_ = 0;
    // x^{p+k} expressed on the basis {x^j}, coefficients in K, for 0 <= k <= p-2
    std::vector<std::vector<LaurentSeries>> xpow_;
};

// v_M via the leading-term rule on the monomial basis, exact because basis
// monomial valuations in a common class mod ep differ by powers of the
// inertia generator, whose residues are kappa-independent.
i64 valuation_M(const TowerElement& a);

// v at the requested level; SubfieldError if the element's support is not in
// that subfield.  Integer exactly when the level matches the natural field.
Rational valuation_in(const TowerElement& a, Level level);

// Independent valuation oracle: v_K(det of the dp x dp multiplication matrix)/f.
i64 valuation_via_norm(const TowerElement& a);

TowerElement norm(const TowerElement& a, SubExt sub);
TowerElement trace(const TowerElement& a, SubExt sub);

// Monic minimal polynomial of a over K, coefficients c[0..deg] with c[deg] = 1.
std::vector<LaurentSeries> min_poly(const TowerElement& a);

// lambda_1 = x^{a(1)} pi_K^{f_1}, the scaffold uniformizer of L; v_L = 1 certified.
TowerElement uniformizer_L(const TowerPtr& tw);

// v_L(g'(lambda_1)) for g the minimal polynomial of lambda_1 over K; equals
// (b+1)(p-1) + pt(p-1)/e.
i64 different_exponent_exact(const TowerPtr& tw);

// Inverse of build: given alpha, beta and d, extract (e,f,t,b) and assemble params.
ExtensionParams classify(i64 p, const FieldPtr& kappa, const LaurentSeries& alpha,
                         const LaurentSeries& beta, i64 d);

// coefficient-wise agreement to `guard` precision slots
bool agree(const TowerElement& a, const TowerElement& b, i64 guard = 8);

}  // namespace lflab
