#pragma once

#include "symspec/construct.hpp"
#include "symspec/fourier.hpp"
#include "symspec/liftmat.hpp"
#include "symspec/optimize.hpp"

#include <json.hpp>

namespace symspec {

using Json = nlohmann::ordered_json;

/// "0x1f"
std::string mask_hex(Mask m);
Mask parse_mask_hex(std::string_view text);

Json to_json(const Measures& m);
Json to_json(const SpectralStats& s);
Json to_json(const LevelSpectrum& s);
Json to_json(const ApproxResult& r);
Json to_json(const MonEpsResult& r);
Json to_json(const LevelSupportResult& r);
/// Expanded terms always; factors when the polynomial was built as a product.
/// Symmetric polynomials also carry their level coefficients.
Json to_json(const SignPoly& p, const Caps& caps = default_caps);
Json to_json(const SignCertificate& c, const Caps& caps = default_caps);
Json to_json(const SignmonResult& r, const Caps& caps = default_caps);
Json to_json(const ReductionPlan& p);
Json to_json(const MatrixStats& s);
Json to_json(const FtoFReport& r);
Json to_json(const Bs92Result& r);

/// Inverse of to_json(SignPoly) for the expanded form.
SignPoly sign_poly_from_json(const Json& j);

}  // namespace symspec
