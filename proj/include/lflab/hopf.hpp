#pragma once

#include <vector>

#include "lflab/tower.hpp"

namespace lflab {

// Element sum a_j sigma^j of the group algebra M'[<sigma>], coefficients kept as
// tower elements with enforced M'-support.
class GroupRingElem {
  public:
    GroupRingElem() = default;
    GroupRingElem(TowerPtr tw, std::vector<TowerElement> coeffs);

    static GroupRingElem zero(const TowerPtr& tw);
    static GroupRingElem one(const TowerPtr& tw);
    static GroupRingElem sigma_power(const TowerPtr& tw, i64 j);

    const TowerPtr& tower() const { return tw_; }
    const TowerElement& coeff(i64 j) const { return a_[static_cast<size_t>(j)]; }

    friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b);
    friend GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b);
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
    GroupRingElem operator-() const;
    GroupRingElem scaled(const TowerElement& c) const;  // c in M'
    GroupRingElem scaled(const FFElem& c) const;
    GroupRingElem scaled_int(i64 n) const;
    GroupRingElem pow(i64 n) const;  // n >= 0

    bool is_zero() const;
    std::string str() const;

  private:
    TowerPtr tw_;
    std::vector<TowerElement> a_;  // size p
};

// coefficient-wise agreement
bool agree(const GroupRingElem& a, const GroupRingElem& b, i64 guard = 8);

// theta(i,t) = sum_{k<d} rho0^{isk} sigma^{r0^{t+sk}},  0 <= i < d, 0 <= t < s
GroupRingElem theta(const TowerPtr& tw, i64 i, i64 t);

// Theta(i) = sum_{k<p-1} rho0^{ik} sigma^{r0^k},  0 <= i < p-1 (index taken mod p-1)
GroupRingElem Theta(const TowerPtr& tw, i64 i);

// Psi_j, 1 <= j <= p-1: Psi_j = -y^{-j} sum_k rho0^{-jk} sigma^{r0^k} for j <= p-2,
// Psi_{p-1} = -(Theta(0) - (p-1))/y^{p-1}.  psi(tw, 1) is Psi itself.
GroupRingElem psi(const TowerPtr& tw, i64 j);

// semilinear conjugation tau . h . tau^{-1}
GroupRingElem tau_apply(const GroupRingElem& h);
bool tau_fixed(const GroupRingElem& h);

// (sum a_j sigma^j) . z = sum a_j sigma^j(z) for z in L; SupportError if the
// result leaves L (a bug, not a precision issue).
TowerElement act(const GroupRingElem& h, const TowerElement& z);

TowerElement counit(const GroupRingElem& h);    // eps(sigma^j) = 1
GroupRingElem antipode(const GroupRingElem& h); // S(sigma^j) = sigma^{-j}

struct PowerIdentityReport {
    i64 i;
    bool equal;                     // Psi^i == i! * Psi_i (adjusted at i = p-1)
    GroupRingElem defect;           // Psi^i - i! * Psi_i
    GroupRingElem unadjusted_defect;  // vs -Theta(0)/y^{p-1} at i = p-1; zero otherwise
};

PowerIdentityReport power_identity(const TowerPtr& tw, i64 i);

// Pure mod-p check of (-sum_{k=1}^{p-1} x^k/k)^i = -i! sum_k x^k/k^i mod (p, x^p-1);
// returns the defect polynomial LHS - RHS as coefficients of 1, x, ..., x^{p-1}.
struct Lemma32Result {
    bool equal;
    std::vector<i64> defect;
};
Lemma32Result lemma32(i64 p, i64 i);

}  // namespace lflab
