#pragma once

#include <json.hpp>

#include "kb/certify.hpp"
#include "kb/coloring.hpp"
#include "kb/cyclo.hpp"

namespace kb {

inline constexpr int kSchemaVersion = 1;

/// Exact serialization: modulus plus the full rational coefficient vector
/// (numerator/denominator strings, arbitrary precision).  An advisory
/// float rendering is attached for human consumption.
nlohmann::json cyclo_to_json(const CycloElem& x);
CycloElem cyclo_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const OrderCertificate& cert);
OrderCertificate certificate_from_json(const nlohmann::json& j);

/// Independent re-check of a serialized InfiniteOrder certificate from its
/// embedded exact scalars alone: det = 1, trace conjugation-fixed, and
/// sign_real(trace - dim) = +1.  No matrix is rebuilt.  Only InfiniteOrder
/// certificates carry self-contained evidence; other kinds throw.
bool reverify_certificate(const nlohmann::json& j);

nlohmann::json count_profile_to_json(const CountProfile& counts);

}  // namespace kb
