#pragma once

#include <cstddef>
#include <string>

#include "json.hpp"

#include "degsplit/graph.hpp"
#include "degsplit/numerics.hpp"
#include "degsplit/orientation.hpp"
#include "degsplit/partitioner.hpp"
#include "degsplit/report.hpp"

namespace degsplit {

using Json = nlohmann::json;

/// Rounds to 12 significant digits so that serialized floats are stable.
double round_sig12(double x);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

Json to_json(const VertexSet& s);
Json structure_to_json(const Claim1Structure& s);
Json calibration_to_json(const Calibration& cal);
Json partition_to_json(const Graph& g, std::size_t k, const PartitionResult& r);
Json failure_to_json(const FailureReport& f);
Json report_to_json(const Report& r);

/// Reads an id array member; throws InvalidArgument when missing or malformed.
VertexSet vertex_set_member(const Json& j, const std::string& key);

std::string case_name(Case c);

}  // namespace degsplit
