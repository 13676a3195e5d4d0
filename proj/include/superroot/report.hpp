#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "superroot/coords.hpp"
#include "superroot/eals.hpp"
#include "superroot/graded.hpp"
#include "superroot/osp.hpp"
#include "superroot/repn.hpp"
#include "superroot/rootsys.hpp"

namespace superroot {

inline constexpr const char* kToolName = "superroot";
inline constexpr const char* kToolVersion = "1.0.0";

// FNV-1a over the bytes, rendered as 16 lowercase hex digits.
std::string fnv1a64_hex(const std::string& bytes);

// Canonical rendering: two-space indent, object keys sorted, trailing newline.
// Reports carry no timing data, so equal inputs give equal bytes.
std::string canonical_dump(const nlohmann::json& j);

// Common report head: tool, version, command, the raw inputs, and one
// combined hash folded over the sorted "key=value" lines.
nlohmann::json make_envelope(const std::string& command,
                             const std::map<std::string, std::string>& inputs);

std::string scalar_str(const Scalar& v);
Scalar scalar_parse(const std::string& s);

nlohmann::json svec_to_json(const SVec<int>& v);
SVec<int> svec_from_json(const nlohmann::json& j);

Sym sym_from_label(const std::string& s);
nlohmann::json weight_to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);

nlohmann::json rootset_to_json(const RootSet& rs);
RootSet rootset_from_json(const nlohmann::json& j);

nlohmann::json spmat_to_json(const SpMat& a);
SpMat spmat_from_json(const nlohmann::json& j);

// Modules carry their size parameters so a file round-trips on its own.
nlohmann::json module_to_json(const Module& mod, int m, int n);
Module module_from_json(const nlohmann::json& j, int& m, int& n);

nlohmann::json coordinate_data_to_json(const CoordinateData& d);
CoordinateData coordinate_data_from_json(const nlohmann::json& j);

nlohmann::json eals_to_json(const Eals& v);
Eals eals_from_json(const nlohmann::json& j);

// one-way renderings of check results
nlohmann::json ears_to_json(const EarsCheck& c);
nlohmann::json projection_to_json(const RadicalProjection& p);
nlohmann::json fibers_to_json(const FiberConditionCheck& c);
nlohmann::json table_to_json(const TableReport& t);
nlohmann::json casimir_to_json(const CasimirResult& c);
nlohmann::json decompose_to_json(const DecomposeResult& d);
nlohmann::json datacheck_to_json(const DataCheck& c);
nlohmann::json jacobi_to_json(const JacobiReport& r);
nlohmann::json rootgraded_to_json(const RootGradedCheck& c);
nlohmann::json ealscheck_to_json(const EalsCheck& c);
nlohmann::json core_to_json(const CoreReport& c);

}  // namespace superroot
