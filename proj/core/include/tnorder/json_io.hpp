#pragma once

// JSON (de)serialization for every file format the toolkit reads or
// writes. Numbers travel as decimal strings ("p/q" for non-integral
// rationals) so round-trips stay exact; readers also accept plain JSON
// integers for convenience. Malformed input raises ParseError.

#include <string>
#include <variant>

#include "tnorder/cost.hpp"
#include "tnorder/network.hpp"
#include "tnorder/reduction.hpp"
#include "tnorder/solver.hpp"

namespace tnorder {

std::string to_decimal_string(const Rational& value);
std::string to_decimal_string(const BigInt& value);
Rational rational_from_string(const std::string& text);
BigInt bigint_from_string(const std::string& text);

TensorNetwork network_from_json(const std::string& text);
std::string network_to_json(const TensorNetwork& net);

ContractionSequence sequence_from_json(const std::string& text);
std::string sequence_to_json(const ContractionSequence& seq);

std::string cost_report_to_json(const CostReport& report);
std::string solve_result_to_json(const SolveResult& result);
std::string decision_to_json(const Decision& decision);

/// Set-problem instances, tagged by their "problem" field:
/// partition | exact_partition | sp | ppf | sppf.
using ProblemInstance =
    std::variant<PartitionInstance, ExactPartitionInstance,
                 SubsetProductInstance, PPFInstance, SPPFInstance>;

ProblemInstance instance_from_json(const std::string& text);
std::string instance_to_json(const ProblemInstance& instance);

std::string certificate_to_json(const CmsToCms0Certificate& cert);
std::string certificate_to_json(const CmsToOmsCertificate& cert);
std::string certificate_to_json(const PartitionToExactCertificate& cert);
std::string certificate_to_json(const ExactToCms0Certificate& cert);
std::string certificate_to_json(const SpToPpfCertificate& cert);
std::string certificate_to_json(const PpfToSppfCertificate& cert);
std::string certificate_to_json(const SppfToOmsStarCertificate& cert);

}  // namespace tnorder
