#pragma once

// JSON and CSV serialization of the public result types. All indices in
// serialized output are 1-based; in-memory indices stay 0-based.

#include <string>

#include "json.hpp"

#include "chain3/chain.hpp"
#include "chain3/decompose.hpp"
#include "chain3/geometry.hpp"
#include "chain3/matrix.hpp"
#include "chain3/oracle.hpp"

namespace chain3 {

using json = nlohmann::ordered_json;

json matrix_json(const BinaryMatrix& m);
json occurrence_json(const std::string& pattern_name, const Occurrence& occ);
json ordering_json(const Permutation& row_order, const Permutation& col_order);
json threshold_json(const ThresholdRepresentation& rep);
json decomposition_json(const TripleDecomposition& dec);
json certificate_json(const DimensionCertificate& cert);
json model_json(const OrthantModel& model);
std::string model_csv(const OrthantModel& model);
json report_json(const CrossValidationReport& report);

}  // namespace chain3
