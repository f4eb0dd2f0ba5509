// JSON encodings. Objects use sorted keys so dumps are byte-stable.
#pragma once

#include <json.hpp>

#include "gentor/alexander.hpp"
#include "gentor/gentorsion.hpp"
#include "gentor/tangles.hpp"

namespace gentor {

using Json = nlohmann::json;

/// Integer when it fits in 64 bits, decimal string otherwise.
Json to_json(const BigInt& x);
Json to_json(const IntPolynomial& p);
Json to_json(const GenTorsionCertificate& c);
Json to_json(const Verdict& v, const GroupPresentation& g);
Json to_json(const GenTorsionReport& r);
Json to_json(const CriteriaReport& r);
Json to_json(const ObstructionReport& r);

/// Throws DomainError on any schema or syntax problem.
GenTorsionCertificate certificate_from_json(const Json& j);

}  // namespace gentor
