#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lflab/tower.hpp"

namespace lflab {

// Associated order A(n) = (+)_j pi_K^{d_j} O_K Psi^j of the ideal P_L^n, in the
// valuation-combinatorial model: d_j = -min floor((t + jb - n)/p) over the t in
// [n, n+p) with a(t) >= j.  Everything here is a pure function of (p, b, n); the
// exact-action certificate against a live tower is certify_order below.
struct OrderBasis {
    i64 n;
    i64 b;
    i64 b_bar;  // b mod p in (0, p)
    std::vector<i64> d_vec;  // d_0..d_{p-1}, d_0 = 0
};

struct Verdict {
    i64 n_mod_p;
    i64 b_bar;
    bool free;
    i64 n_generators;   // dim P^n / M.P^n
    i64 embedding_dim;  // dim M/M^2
    std::string source; // "paper-criterion" | "brute-force" | "both-agree"
};

OrderBasis assoc_order(i64 p, i64 b, i64 n);

// The closed-form criteria: n = b_bar -> free; n = 0 -> free iff b_bar | p-1;
// n = b_bar+1 -> free iff b_bar = p-1; other residues -> nullopt (not covered).
// Generator counts are not given by the criteria, so only `free` is meaningful;
// n_generators is 1 when free, -1 (unknown) otherwise.
std::optional<Verdict> freeness_paper(i64 p, i64 b, i64 n);

// Exhaustive generator test in the lambda-monomial valuation model, plus the
// Nakayama generator count and the embedding dimension.
Verdict freeness_bruteforce(i64 p, i64 b, i64 n);

struct ReconcileResult {
    bool pass;
    std::vector<std::string> disagreements;
};

// Every covered (p, b, n) with n in [n_lo, n_hi): paper and brute force agree.
ReconcileResult reconcile(i64 p, i64 b, i64 n_lo, i64 n_hi);

// Exact-action certificate on a live tower: each pi^{d_j} Psi^j preserves P^n on
// the lambda spanning set, and pi^{d_j - 1} Psi^j does not (for j with any
// admissible t).  Throws InternalError on certificate failure.
bool certify_order(const TowerPtr& tw, i64 n);

}  // namespace lflab
