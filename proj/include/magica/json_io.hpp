#pragma once

#include <json.hpp>

#include "magica/freudenthal.hpp"

namespace magica {

/// Insertion-ordered JSON so serialized reports are byte stable.
using Json = nlohmann::ordered_json;

Json scalar_to_json(const GaussRat& x);
GaussRat scalar_from_json(const Json& j);

Json cd_to_json(const CdElement& x);
CdElement cd_from_json(const Json& j);

Json jordan_to_json(const JordanElement& a);
JordanElement jordan_from_json(const Json& j);

Json fts_to_json(const FtsVector& x);
FtsVector fts_from_json(const Json& j);

Json quartic_to_json(const QuarticCoeffs& qc);
QuarticCoeffs quartic_from_json(const Json& j);

}  // namespace magica
