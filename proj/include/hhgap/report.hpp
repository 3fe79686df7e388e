#pragma once

#include <string>

#include "json.hpp"

#include "hhgap/criteria.hpp"

namespace hhgap {

// nlohmann::json keeps object keys sorted, which the golden files rely on.
using json = nlohmann::json;

json descriptor_json(const ModuleDescriptor& d);
json table_json(const HochschildTable& t);
json verdict_json(const GapVerdict& v);
json complex_json(const FreeComplex& c);
json closedness_json(const ClosednessCertificate& cert);
json deviations_json(const Deviations& d);
json lower_bounds_json(const LowerBoundReport& rep);
json lambda_json(const LambdaReport& rep);

std::string complex_text(const FreeComplex& c);
std::string table_text(const HochschildTable& t);

uint64_t fnv1a(const std::string& bytes);
std::string fnv1a_hex(const std::string& bytes);

}  // namespace hhgap
