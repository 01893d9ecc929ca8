#pragma once

#include <string>

#include <json.hpp>

#include "lflab/modstruct.hpp"
#include "lflab/ramprofile.hpp"
#include "lflab/tower.hpp"

namespace lflab {

// ordered_json keeps insertion order, making every report byte-deterministic
using Json = nlohmann::ordered_json;

Json field_to_json(const FieldDesc& f);        // {p, m, modulus}
FieldPtr field_from_json(const Json& j);

Json series_to_json(const LaurentSeries& s);   // {v, prec, coeffs}; prec null = exact
LaurentSeries series_from_json(const Json& j, const FieldPtr& f);

Json rational_to_json(const Rational& r);      // {num, den}

Json params_to_json(const ExtensionParams& P);
// Config schema {p, kappa, e, f, t, b, gamma, mu, beta}; unknown keys rejected.
ExtensionParams params_from_json(const Json& j);

Json order_basis_to_json(const OrderBasis& ob);
Json verdict_to_json(const Verdict& v);
Json herbrand_to_json(const HerbrandFunction& h);

// FNV-1a 64-bit content hash, for resumable sweep records
std::uint64_t fnv1a(const std::string& s);

}  // namespace lflab
