#pragma once

#include <json.hpp>

#include "hyperred/congruence.hpp"
#include "hyperred/difference_space.hpp"
#include "hyperred/symmetric_reduction.hpp"

namespace hyperred {

// Polynomials travel as JSON arrays of "num/den" strings, ascending degree.
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json power_basis_to_json(const PowerBasisPoly& q);
PowerBasisPoly power_basis_from_json(const nlohmann::json& j);

nlohmann::json space_info_to_json(const SpaceInfo& info);

nlohmann::json certificate_to_json(const ReductionCertificate& cert);
ReductionCertificate certificate_from_json(const nlohmann::json& j);

// Full reduce-symmetric report: m, C, a, x, a_over_C, and the mapped
// certificate over the original variable.
nlohmann::json reduction_to_json(const TermSpec& spec, const IntegralReduction& red);

nlohmann::json report_to_json(const CongruenceReport& report);

nlohmann::json integrality_to_json(const std::vector<IntegralityEntry>& entries);

}  // namespace hyperred
