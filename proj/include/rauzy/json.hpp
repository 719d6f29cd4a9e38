#pragma once

#include <json.hpp>

#include "rauzy/diagram.hpp"
#include "rauzy/fg.hpp"
#include "rauzy/pa.hpp"
#include "rauzy/penner.hpp"
#include "rauzy/surface.hpp"

namespace rauzy {

using Json = nlohmann::json;

// {decimal, num, den}
Json to_json(const Rational& q);
Json to_json(const Integer& z);  // decimal string
// Row-major array of decimal strings.
Json to_json(const IntMatrix& m);
// {alphabet, top, bottom} with letter names.
Json to_json(const LabeledPermutation& p);
Json to_json(const SpectralBracket& b);
Json to_json(const EdgeRecord& e);
Json to_json(const AllowedPath& path);
Json to_json(const RauzyDiagram& d);
Json to_json(const PACertificate& c);
Json to_json(const FgReport& r);
Json to_json(const CentralReport& r);
Json to_json(const StretchReport& r);
Json to_json(const RotationReport& r);
Json to_json(const HgReport& r);
Json to_json(const std::vector<CheckItem>& items);

Json surface_json(const LabeledPermutation& p, const GluedSurface& s);

LabeledPermutation permutation_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);

// Structural check of a certificate document; throws Parse naming the first
// missing or mistyped field.
void validate_certificate_json(const Json& j);

}  // namespace rauzy
