#pragma once

#include <json.hpp>

#include "orlicz/young.hpp"

namespace orlicz {

using Json = nlohmann::json;

Json to_json(const Descriptor& d);
Json to_json(const YoungFunction& phi);

// Throws DescriptorError carrying the JSON path of the first defect.
Descriptor descriptor_from_json(const Json& j);
// Parses and validates; axiom failures raise ValidationError.
YoungFunction young_from_json(const Json& j);

// Decimal string or JSON number to double; locale independent.
double parse_decimal(const Json& j, const std::string& path);

// ExtReal as a JSON number, or the string "inf".
Json ext_json(ExtReal x);
Json number_json(double x);

}  // namespace orlicz
