#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lflab/errors.hpp"

namespace lflab {

using i64 = std::int64_t;

struct FieldDesc;
using FieldPtr = std::shared_ptr<const FieldDesc>;

// Description of F_{p^m} = F_p[X]/(modulus).  Immutable; shared by all elements.
struct FieldDesc {
    i64 p;
    int m;
    std::vector<i64> modulus;  // length m+1, monic, verified irreducible

    i64 q() const;  // p^m

    // F_p with canonical modulus X.
    static FieldPtr prime_field(i64 p);
    // F_{p^m} with the lexicographically least irreducible monic modulus
    // (coefficients compared as the base-p integer c_0 + c_1 p + ...).
    static FieldPtr extension(i64 p, int m);
    // Explicit modulus; rejected if p is not prime or modulus is reducible.
    static FieldPtr make(i64 p, int m, std::vector<i64> modulus);
};

// Immutable element of a FieldDesc field; equality is coefficient-wise.
struct FFElem {
    FieldPtr field;
    std::vector<i64> c;  // size m, entries in [0,p)

    static FFElem zero(const FieldPtr& f);
    static FFElem one(const FieldPtr& f);
    static FFElem from_int(const FieldPtr& f, i64 n);  // image of n in the prime subfield
    // Element with given coefficient vector (reduced mod p, padded/truncated to m).
    static FFElem make(const FieldPtr& f, std::vector<i64> coeffs);

    bool is_zero() const;
    bool is_one() const;

    friend FFElem operator+(const FFElem& a, const FFElem& b);
    friend FFElem operator-(const FFElem& a, const FFElem& b);
    friend FFElem operator*(const FFElem& a, const FFElem& b);
    FFElem operator-() const;
    friend bool operator==(const FFElem& a, const FFElem& b);
    friend bool operator!=(const FFElem& a, const FFElem& b) { return !(a == b); }

    FFElem pow(i64 n) const;  // n may be negative for nonzero elements
    FFElem inv() const;       // DomainError on zero

    std::string str() const;
};

bool is_prime(i64 n);

// Smallest g in [1,p) of multiplicative order p-1 mod p.
i64 primitive_root(i64 p);

// primitive_root(p)^((p-1)/d): the canonical residue of exact order d mod p.
// ParamError unless d | p-1.
i64 element_of_order(i64 p, i64 d);

i64 multiplicative_order(const FFElem& u);  // DomainError on zero

// Order of the class of u in kappa^x / (kappa^x)^f: least k >= 1 with u^k an f-th power.
i64 quotient_order(const FFElem& u, i64 f);

// Some n-th root of a in its field, by exhaustion; nullopt if none exists.
std::optional<FFElem> nth_root_in_field(const FFElem& a, i64 n);

}  // namespace lflab
