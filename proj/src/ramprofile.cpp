#include "lflab/ramprofile.hpp"

#include <numeric>

#include "lflab/ffield.hpp"

namespace lflab {

void validate(const RamParams& rp) {
    if (!is_prime(rp.p)) throw ParamError("validate: p is not prime");
    if (rp.char_K != 0 && rp.char_K != rp.p)
        throw ParamError("validate: characteristic must be 0 or p");
    if (rp.e < 1 || rp.f < 1) throw ParamError("validate: e, f must be positive");
    if ((rp.p - 1) % rp.d() != 0) throw ParamError("validate: d = ef does not divide p-1");
    if (rp.t < 0 || rp.t >= rp.e) throw ParamError("validate: t out of range [0, e)");
    if (std::gcd(rp.t, rp.e) != 1) throw ParamError("validate: gcd(t, e) != 1");
    if (rp.b % rp.p == 0) throw ParamError("validate: gcd(b, p) != 1");
    Rational ell = Rational(rp.b) + Rational(rp.p * rp.t, rp.e);
    if (!(Rational(0) < ell)) throw ParamError("validate: ell = b + pt/e is not positive");
    if (rp.char_K == 0) {
        if (!rp.vK_p) throw ParamError("validate: char 0 requires vK_p");
        Rational bound = Rational(rp.p * *rp.vK_p, rp.p - 1);  // v_L(p)/(p-1)
        if (!(ell < bound)) throw ParamError("validate: ell >= v_L(p)/(p-1)");
    }
}

Rational ram_number(const RamParams& rp) { return Rational(rp.b) + Rational(rp.p * rp.t, rp.e); }

i64 b_prime(const RamParams& rp) { return rp.e * rp.b + rp.p * rp.t; }

i64 diff_exp(const RamParams& rp) {
    Rational de = (ram_number(rp) + Rational(1)) * Rational(rp.p - 1);
    if (!de.is_integer()) throw InternalError("diff_exp: non-integral (e | p-1 should prevent this)");
    return de.as_integer();
}

Rational HerbrandFunction::eval(const Rational& x) const {
    if (vertices.empty()) throw DomainError("empty Herbrand function");
    if (x <= vertices.front().first) return vertices.front().second;  // diagonal start
    for (size_t k = 0; k + 1 < vertices.size(); ++k) {
        if (x <= vertices[k + 1].first) {
            Rational slope = (vertices[k + 1].second - vertices[k].second) /
                             (vertices[k + 1].first - vertices[k].first);
            return vertices[k].second + slope * (x - vertices[k].first);
        }
    }
    return vertices.back().second + terminal_slope * (x - vertices.back().first);
}

HerbrandFunction herbrand(const RamParams& rp, Ext ext, Convention conv) {
    validate(rp);
    HerbrandFunction h;
    Rational m1(-1);
    switch (ext) {
        case Ext::L_over_K: {
            Rational ell = ram_number(rp);
            h.vertices = {{m1, m1}, {ell, ell}};
            h.terminal_slope = Rational(1, rp.p);
            break;
        }
        case Ext::M_over_K: {
            Rational bp(b_prime(rp));
            h.vertices = {{m1, m1}, {Rational(0), Rational(0)}, {bp, ram_number(rp)}};
            h.terminal_slope = Rational(1, rp.e * rp.p);
            break;
        }
        case Ext::M_over_Mprime: {
            Rational bp(b_prime(rp));
            h.vertices = {{m1, m1}, {bp, bp}};
            h.terminal_slope = Rational(1, rp.p);
            break;
        }
    }
    if (conv == Convention::Artin) {
        for (auto& [x, y] : h.vertices) {
            x = x + Rational(1);
            y = y + Rational(1);
        }
    }
    return h;
}

Rational convert_convention(const Rational& v, Convention from, Convention to) {
    if (from == to) return v;
    return to == Convention::Artin ? v + Rational(1) : v - Rational(1);
}

bool scaffold_condition(const RamParams& rp) {
    if (rp.char_K == rp.p) return true;
    if (!rp.vK_p) throw ParamError("scaffold_condition: char 0 requires vK_p");
    Rational bound = Rational(rp.p * *rp.vK_p, rp.p - 1) - Rational(2);
    return ram_number(rp) < bound;
}

}  // namespace lflab
