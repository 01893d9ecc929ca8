#include "lflab/ffield.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lflab {

namespace {

i64 mod(i64 a, i64 p) {
    i64 r = a % p;
    return r < 0 ? r + p : r;
}

// dense polynomial arithmetic over F_p, coefficient order c[0] + c[1] X + ...
using Poly = std::vector<i64>;

Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, i64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = mod(r[i + j] + a[i] * b[j], p);
    return poly_trim(r);
}

// remainder of a by monic f
Poly poly_rem(Poly a, const Poly& f, i64 p) {
    a = poly_trim(std::move(a));
    const size_t df = f.size() - 1;
    while (a.size() > df) {
        i64 lead = a.back();
        size_t shift = a.size() - 1 - df;
        for (size_t i = 0; i < df; ++i) a[shift + i] = mod(a[shift + i] - lead * f[i], p);
        a.pop_back();
        a = poly_trim(std::move(a));
    }
    return a;
}

Poly poly_powmod_x(i64 exp_base, i64 exp_pow, const Poly& f, i64 p) {
    // X^(exp_base^exp_pow) mod f, by iterated powering
    Poly x = poly_rem({0, 1}, f, p);
    Poly cur = x;
    for (i64 k = 0; k < exp_pow; ++k) {
        // cur <- cur^exp_base mod f
        Poly acc = {1};
        Poly base = cur;
        i64 e = exp_base;
        while (e > 0) {
            if (e & 1) acc = poly_rem(poly_mul(acc, base, p), f, p);
            base = poly_rem(poly_mul(base, base, p), f, p);
            e >>= 1;
        }
        cur = acc;
    }
    return cur;
}

Poly poly_gcd(Poly a, Poly b, i64 p) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        // make b monic
        i64 lead = b.back();
        if (lead != 1) {
            // lead^{-1} via Fermat
            i64 inv = 1, base = lead, e = p - 2;
            while (e > 0) {
                if (e & 1) inv = mod(inv * base, p);
                base = mod(base * base, p);
                e >>= 1;
            }
            for (auto& c : b) c = mod(c * inv, p);
        }
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool poly_irreducible(const Poly& f, i64 p) {
    const int m = static_cast<int>(f.size()) - 1;
    if (m < 1) return false;
    if (m == 1) return true;
    // X^{p^m} == X mod f, and gcd(X^{p^{m/l}} - X, f) constant for prime l | m
    Poly xq = poly_powmod_x(p, m, f, p);
    Poly x = poly_rem({0, 1}, f, p);
    if (poly_trim(xq) != poly_trim(x)) return false;
    std::vector<int> prime_divs;
    int mm = m;
    for (int l = 2; l <= mm; ++l) {
        if (mm % l != 0) continue;
        prime_divs.push_back(l);
        while (mm % l == 0) mm /= l;
    }
    for (int l : prime_divs) {
        Poly g = poly_powmod_x(p, m / l, f, p);
        // g - x
        Poly diff = g;
        diff.resize(std::max(diff.size(), x.size()), 0);
        for (size_t i = 0; i < x.size(); ++i) diff[i] = mod(diff[i] - x[i], p);
        Poly d = poly_gcd(f, diff, p);
        if (poly_trim(d).size() > 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

i64 FieldDesc::q() const {
    i64 r = 1;
    for (int i = 0; i < m; ++i) r *= p;
    return r;
}

FieldPtr FieldDesc::prime_field(i64 p) { return make(p, 1, {0, 1}); }

FieldPtr FieldDesc::extension(i64 p, int m) {
    if (!is_prime(p)) throw ParamError("field characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw ParamError("extension degree must be >= 1");
    if (m == 1) return prime_field(p);
    // enumerate monic degree-m polynomials by the base-p value of (c_0,...,c_{m-1})
    i64 count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (i64 code = 0; code < count; ++code) {
        Poly f(m + 1, 0);
        i64 c = code;
        for (int i = 0; i < m; ++i) {
            f[i] = c % p;
            c /= p;
        }
        f[m] = 1;
        if (poly_irreducible(f, p)) return make(p, m, f);
    }
    throw InternalError("no irreducible polynomial found");  // unreachable
}

FieldPtr FieldDesc::make(i64 p, int m, std::vector<i64> modulus) {
    if (!is_prime(p)) throw ParamError("field characteristic " + std::to_string(p) + " is not prime");
    if (m < 1 || static_cast<int>(modulus.size()) != m + 1)
        throw ParamError("modulus must have degree m");
    for (auto& c : modulus) c = mod(c, p);
    if (modulus[m] != 1) throw ParamError("modulus must be monic");
    if (!poly_irreducible(modulus, p)) throw ParamError("modulus is reducible");
    auto f = std::make_shared<FieldDesc>();
    f->p = p;
    f->m = m;
    f->modulus = std::move(modulus);
    return f;
}

static void check_same(const FFElem& a, const FFElem& b) {
    if (a.field->p != b.field->p || a.field->m != b.field->m ||
        a.field->modulus != b.field->modulus)
        throw DomainError("field mismatch in FFElem arithmetic");
}

FFElem FFElem::zero(const FieldPtr& f) { return {f, std::vector<i64>(f->m, 0)}; }

FFElem FFElem::one(const FieldPtr& f) { return from_int(f, 1); }

FFElem FFElem::from_int(const FieldPtr& f, i64 n) {
    std::vector<i64> c(f->m, 0);
    c[0] = mod(n, f->p);
    return {f, std::move(c)};
}

FFElem FFElem::make(const FieldPtr& f, std::vector<i64> coeffs) {
    coeffs.resize(f->m, 0);
    for (auto& x : coeffs) x = mod(x, f->p);
    return {f, std::move(coeffs)};
}

bool FFElem::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](i64 x) { return x == 0; });
}

bool FFElem::is_one() const {
    if (c[0] != 1) return false;
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

FFElem operator+(const FFElem& a, const FFElem& b) {
    check_same(a, b);
    FFElem r = a;
    for (int i = 0; i < a.field->m; ++i) r.c[i] = mod(r.c[i] + b.c[i], a.field->p);
    return r;
}

FFElem operator-(const FFElem& a, const FFElem& b) {
    check_same(a, b);
    FFElem r = a;
    for (int i = 0; i < a.field->m; ++i) r.c[i] = mod(r.c[i] - b.c[i], a.field->p);
    return r;
}

FFElem FFElem::operator-() const {
    FFElem r = *this;
    for (auto& x : r.c) x = mod(-x, field->p);
    return r;
}

FFElem operator*(const FFElem& a, const FFElem& b) {
    check_same(a, b);
    const i64 p = a.field->p;
    Poly prod = poly_mul(a.c, b.c, p);
    prod = poly_rem(std::move(prod), a.field->modulus, p);
    return FFElem::make(a.field, std::move(prod));
}

bool operator==(const FFElem& a, const FFElem& b) {
    return a.field->p == b.field->p && a.field->modulus == b.field->modulus && a.c == b.c;
}

FFElem FFElem::pow(i64 n) const {
    if (n < 0) return inv().pow(-n);
    FFElem acc = FFElem::one(field);
    FFElem base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

FFElem FFElem::inv() const {
    if (is_zero()) throw DomainError("inverse of zero field element");
    return pow(field->q() - 2);
}

std::string FFElem::str() const {
    if (field->m == 1) return std::to_string(c[0]);
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < field->m; ++i) os << (i ? "," : "") << c[i];
    os << "]";
    return os.str();
}

i64 primitive_root(i64 p) {
    if (!is_prime(p)) throw ParamError("primitive_root: " + std::to_string(p) + " is not prime");
    for (i64 g = 1; g < p; ++g) {
        i64 x = g % p, ord = 1;
        while (x != 1) {
            x = mod(x * g, p);
            ++ord;
        }
        if (ord == p - 1) return g;
    }
    throw InternalError("no primitive root found");  // unreachable for prime p
}

i64 element_of_order(i64 p, i64 d) {
    if (d <= 0 || (p - 1) % d != 0)
        throw ParamError("element_of_order: d = " + std::to_string(d) + " does not divide p-1");
    i64 g = primitive_root(p);
    i64 e = (p - 1) / d;
    i64 r = 1;
    for (i64 i = 0; i < e; ++i) r = mod(r * g, p);
    return r;
}

i64 multiplicative_order(const FFElem& u) {
    if (u.is_zero()) throw DomainError("order of zero");
    FFElem x = u;
    i64 ord = 1;
    while (!x.is_one()) {
        x = x * u;
        ++ord;
    }
    return ord;
}

i64 quotient_order(const FFElem& u, i64 f) {
    if (u.is_zero()) throw DomainError("quotient_order of zero");
    if (f < 1) throw ParamError("quotient_order: f must be >= 1");
    // u^k is an f-th power iff (q-1)/gcd(f,q-1) divides k * ind(u); exhaustion is simpler
    // and the fields here are tiny.
    const i64 q = u.field->q();
    auto is_fth_power = [&](const FFElem& z) {
        i64 g = std::gcd(f, q - 1);
        return z.pow((q - 1) / g).is_one();
    };
    FFElem x = u;
    for (i64 k = 1; k <= q - 1; ++k) {
        if (is_fth_power(x)) return k;
        x = x * u;
    }
    throw InternalError("quotient_order: no exponent found");  // unreachable
}

std::optional<FFElem> nth_root_in_field(const FFElem& a, i64 n) {
    const i64 q = a.field->q();
    if (q > 200000) throw DomainError("nth_root_in_field: field too large for exhaustion");
    if (a.is_zero()) return FFElem::zero(a.field);
    // enumerate all field elements via coefficient vectors
    std::vector<i64> c(a.field->m, 0);
    const i64 p = a.field->p;
    for (i64 code = 0; code < q; ++code) {
        i64 v = code;
        for (int i = 0; i < a.field->m; ++i) {
            c[i] = v % p;
            v /= p;
        }
        FFElem z = FFElem::make(a.field, c);
        if (!z.is_zero() && z.pow(n) == a) return z;
    }
    return std::nullopt;
}

}  // namespace lflab
