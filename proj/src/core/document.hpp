#pragma once

#include <json.hpp>

#include "core/catalog.hpp"
#include "core/cooperad.hpp"
#include "core/rep.hpp"

namespace dainfty {

using nlohmann::json;

// Schema violations carry the JSON path of the first offending node.
struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact integers: JSON numbers inside the 53-bit safe range, decimal strings
// outside it.  Parsing accepts both forms.
json scalar_to_json(const BigInt& v);
BigInt scalar_from_json(const json& j, const std::string& path);

// ---- structure documents ----
json family_to_json(const StructureFamily& fam);
StructureFamily family_from_json(const json& doc);

// ---- representation documents ----
json rep_to_json(const RepFamily& rep);
RepFamily rep_from_json(const json& doc);

bool is_representation_document(const json& doc);

// ---- reports (all carry "report_version": 1 and are byte-deterministic) ----
json check_report(const StructureFamily& fam, const CheckResult& result,
                  const std::string& command, int u_max, int v_max);
json rep_check_report(const RepCoderivationFamily& F,
                      const RepCheckResult& result, int u_max, int arity_max);
json bar_check_report(const StructureFamily& fam, const CheckResult& relations,
                      const CheckResult& twisted, int u_max, int v_max);
json cooperad_report(CooperadKind kind, int u, int v,
                     const std::vector<DecompTerm>& terms);

// Human-readable renderings.
std::string check_report_text(const json& report);
std::string cooperad_text(CooperadKind kind, int u, int v,
                          const std::vector<DecompTerm>& terms);

// Canonical serialization used everywhere (sorted keys, 2-space indent,
// trailing newline).
std::string dump_json(const json& j);

}  // namespace dainfty
