#include "lflab/hopf.hpp"

#include <algorithm>
#include <sstream>

namespace lflab {

namespace {

i64 mod_pos(i64 a, i64 p) {
    i64 r = a % p;
    return r < 0 ? r + p : r;
}

void check_mprime(const TowerElement& c) {
    if (!c.in_Mprime()) throw SupportError("group-ring coefficient not in M'");
}

}  // namespace

GroupRingElem::GroupRingElem(TowerPtr tw, std::vector<TowerElement> coeffs)
    : tw_(std::move(tw)), a_(std::move(coeffs)) {
    if (static_cast<i64>(a_.size()) != tw_->params().p)
        throw DomainError("group-ring element needs exactly p coefficients");
    for (const auto& c : a_) check_mprime(c);
}

GroupRingElem GroupRingElem::zero(const TowerPtr& tw) {
    return GroupRingElem(tw, std::vector<TowerElement>(static_cast<size_t>(tw->params().p),
                                                       tw->zero()));
}

GroupRingElem GroupRingElem::one(const TowerPtr& tw) { return sigma_power(tw, 0); }

GroupRingElem GroupRingElem::sigma_power(const TowerPtr& tw, i64 j) {
    GroupRingElem h = zero(tw);
    h.a_[static_cast<size_t>(mod_pos(j, tw->params().p))] = tw->one();
    return h;
}

GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem r = a;
    for (size_t j = 0; j < r.a_.size(); ++j) r.a_[j] = r.a_[j] + b.a_[j];
    return r;
}

GroupRingElem GroupRingElem::operator-() const {
    GroupRingElem r = *this;
    for (auto& c : r.a_) c = -c;
    return r;
}

GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b) { return a + (-b); }

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    const i64 p = a.tw_->params().p;
    GroupRingElem r = GroupRingElem::zero(a.tw_);
    for (i64 j = 0; j < p; ++j) {
        if (a.a_[static_cast<size_t>(j)].is_zero()) continue;
        for (i64 k = 0; k < p; ++k) {
            if (b.a_[static_cast<size_t>(k)].is_zero()) continue;
            size_t m = static_cast<size_t>((j + k) % p);
            r.a_[m] = r.a_[m] + a.a_[static_cast<size_t>(j)] * b.a_[static_cast<size_t>(k)];
        }
    }
    return r;
}

GroupRingElem GroupRingElem::scaled(const TowerElement& c) const {
    check_mprime(c);
    GroupRingElem r = *this;
    for (auto& x : r.a_) x = x * c;
    return r;
}

GroupRingElem GroupRingElem::scaled(const FFElem& c) const {
    GroupRingElem r = *this;
    for (auto& x : r.a_) x = x.scaled(c);
    return r;
}

GroupRingElem GroupRingElem::scaled_int(i64 n) const {
    return scaled(FFElem::from_int(tw_->params().kappa, n));
}

GroupRingElem GroupRingElem::pow(i64 n) const {
    if (n < 0) throw DomainError("GroupRingElem::pow: negative exponent");
    GroupRingElem acc = one(tw_);
    GroupRingElem base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool GroupRingElem::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const TowerElement& c) { return c.is_zero(); });
}

std::string GroupRingElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < a_.size(); ++j) {
        if (a_[j].is_zero()) continue;
        if (!first) os << "  +  ";
        first = false;
        os << "[" << a_[j].str() << "]*sigma^" << j;
    }
    if (first) os << "0";
    return os.str();
}

bool agree(const GroupRingElem& a, const GroupRingElem& b, i64 guard) {
    if (a.tower() != b.tower()) return false;
    for (i64 j = 0; j < a.tower()->params().p; ++j)
        if (!agree(a.coeff(j), b.coeff(j), guard)) return false;
    return true;
}

GroupRingElem theta(const TowerPtr& tw, i64 i, i64 t) {
    const auto& P = tw->params();
    if (i < 0 || i >= P.d || t < 0 || t >= P.s) throw DomainError("theta: index out of range");
    i64 r0 = primitive_root(P.p);
    FFElem rho0 = FFElem::from_int(P.kappa, r0);
    GroupRingElem h = GroupRingElem::zero(tw);
    for (i64 k = 0; k < P.d; ++k) {
        i64 exp = 1;  // r0^{t+sk} mod p
        for (i64 m = 0; m < t + P.s * k; ++m) exp = exp * r0 % P.p;
        h = h + GroupRingElem::sigma_power(tw, exp).scaled(rho0.pow(i * P.s * k));
    }
    return h;
}

GroupRingElem Theta(const TowerPtr& tw, i64 i) {
    const auto& P = tw->params();
    i64 r0 = primitive_root(P.p);
    FFElem rho0 = FFElem::from_int(P.kappa, r0);
    GroupRingElem h = GroupRingElem::zero(tw);
    i64 exp = 1;
    for (i64 k = 0; k < P.p - 1; ++k) {
        h = h + GroupRingElem::sigma_power(tw, exp).scaled(rho0.pow(i * k));
        exp = exp * r0 % P.p;
    }
    return h;
}

GroupRingElem psi(const TowerPtr& tw, i64 j) {
    const auto& P = tw->params();
    if (j < 1 || j > P.p - 1) throw DomainError("psi: j out of range [1, p-1]");
    if (j <= P.p - 2) {
        // -y^{-j} sum_k rho0^{-jk} sigma^{r0^k} = -y^{-j} Theta(-j)
        return (-Theta(tw, mod_pos(-j, P.p - 1))).scaled(tw->y_pow(-j));
    }
    GroupRingElem h = Theta(tw, 0) - GroupRingElem::one(tw).scaled_int(P.p - 1);
    return (-h).scaled(tw->y_pow(-(P.p - 1)));
}

GroupRingElem tau_apply(const GroupRingElem& h) {
    const auto tw = h.tower();
    const auto& P = tw->params();
    std::vector<TowerElement> out(static_cast<size_t>(P.p), tw->zero());
    for (i64 j = 0; j < P.p; ++j) {
        TowerElement c = tw->apply_hom(h.coeff(j), tw->x(), tw->tau_y());
        size_t m = static_cast<size_t>(mod_pos(j * P.r, P.p));
        out[m] = out[m] + c;
    }
    return GroupRingElem(tw, std::move(out));
}

bool tau_fixed(const GroupRingElem& h) { return agree(tau_apply(h), h); }

TowerElement act(const GroupRingElem& h, const TowerElement& z) {
    const auto tw = h.tower();
    if (!z.in_L()) throw SupportError("act: operand not in L");
    TowerElement acc = tw->zero();
    for (i64 j = 0; j < tw->params().p; ++j) {
        const TowerElement& c = h.coeff(j);
        if (c.is_zero()) continue;
        acc = acc + c * tw->apply_hom(z, tw->x() + tw->y().scaled_int(j), tw->y());
    }
    if (!acc.in_L()) throw SupportError("act: result left L");
    return acc;
}

TowerElement counit(const GroupRingElem& h) {
    TowerElement acc = h.tower()->zero();
    for (i64 j = 0; j < h.tower()->params().p; ++j) acc = acc + h.coeff(j);
    return acc;
}

GroupRingElem antipode(const GroupRingElem& h) {
    const auto tw = h.tower();
    const i64 p = tw->params().p;
    std::vector<TowerElement> out(static_cast<size_t>(p), tw->zero());
    for (i64 j = 0; j < p; ++j) out[static_cast<size_t>(mod_pos(-j, p))] = h.coeff(j);
    return GroupRingElem(tw, std::move(out));
}

PowerIdentityReport power_identity(const TowerPtr& tw, i64 i) {
    const auto& P = tw->params();
    if (i < 1 || i > P.p - 1) throw DomainError("power_identity: i out of range");
    i64 fact = 1;
    for (i64 k = 2; k <= i; ++k) fact = fact * k % P.p;
    GroupRingElem lhs = psi(tw, 1).pow(i);
    GroupRingElem defect = lhs - psi(tw, i).scaled_int(fact);
    GroupRingElem un = GroupRingElem::zero(tw);
    if (i == P.p - 1)
        un = lhs - (-Theta(tw, 0)).scaled(tw->y_pow(-(P.p - 1))).scaled_int(fact);
    return {i, defect.is_zero(), defect, un};
}

Lemma32Result lemma32(i64 p, i64 i) {
    if (!is_prime(p)) throw ParamError("lemma32: p not prime");
    if (i < 1 || i > p - 1) throw ParamError("lemma32: i out of range");
    auto inv = [&](i64 a) {
        a = mod_pos(a, p);
        for (i64 x = 1; x < p; ++x)
            if (a * x % p == 1) return x;
        throw DomainError("lemma32: not invertible");
    };
    std::vector<i64> base(static_cast<size_t>(p), 0);
    for (i64 k = 1; k < p; ++k) base[static_cast<size_t>(k)] = mod_pos(-inv(k), p);
    std::vector<i64> lhs(static_cast<size_t>(p), 0);
    lhs[0] = 1;
    for (i64 rep = 0; rep < i; ++rep) {
        std::vector<i64> next(static_cast<size_t>(p), 0);
        for (i64 a = 0; a < p; ++a) {
            if (!lhs[static_cast<size_t>(a)]) continue;
            for (i64 b = 1; b < p; ++b) {
                size_t m = static_cast<size_t>((a + b) % p);
                next[m] = (next[m] + lhs[static_cast<size_t>(a)] * base[static_cast<size_t>(b)]) % p;
            }
        }
        lhs = std::move(next);
    }
    i64 fact = 1;
    for (i64 k = 2; k <= i; ++k) fact = fact * k % p;
    std::vector<i64> defect = lhs;
    for (i64 k = 1; k < p; ++k) {
        i64 ki = 1;
        for (i64 m = 0; m < i; ++m) ki = ki * inv(k) % p;  // 1/k^i
        i64 rhs = mod_pos(-fact * ki, p);
        defect[static_cast<size_t>(k)] = mod_pos(defect[static_cast<size_t>(k)] - rhs, p);
    }
    bool equal = std::all_of(defect.begin(), defect.end(), [](i64 c) { return c == 0; });
    return {equal, std::move(defect)};
}

}  // namespace lflab
