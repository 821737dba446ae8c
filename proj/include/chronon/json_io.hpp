#ifndef CHRONON_JSON_IO_HPP
#define CHRONON_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "chronon/measures.hpp"

namespace chronon::io {

using json = nlohmann::json;

/// Element interchange format:
/// {"blocks":[{"dim":d,"re":[[...]],"im":[[...]]}]}
json element_to_json(const AlgElement& a);
AlgElement element_from_json(const json& j);

/// Channel interchange format, tagged by "kind":
///   "kraus"           {"dim_in":m,"dim_out":n,"plus":[mat...],"minus":[mat...]}
///   "unitary"         {"u":mat}
///   "ptrace"          {"p":p,"n":n,"which":"left"|"right"}
///   "povm"            {"effects":[mat...]}
///   "pvm"             {"projectors":[mat...]}
///   "preparation"     {"states":[element...]}
///   "stochastic"      {"matrix":[[...]]}   (column-stochastic, f[y][x])
///   "discard_prepare" {"dom":[dims...],"sigma":element}
/// where mat is {"dim":d,"re":[[...]],"im":[[...]]}.
json channel_to_kraus_json(const AlgebraShape& dom, const AlgebraShape& cod,
                           const std::vector<MatrixC>& plus, const std::vector<MatrixC>& minus);
Channel channel_from_json(const json& j);

/// Process file: {"rho": element, "channel": channel}.
Process process_from_json(const json& j);
Process process_from_file(const std::string& path);

json measure_report_to_json(const MeasureReport& rep);
/// CSV row (kind, s_in, s_out, s_psi, h_psi, i_psi, k_psi); header row
/// matches the field names.
std::string measure_report_csv_header();
std::string measure_report_csv_row(const MeasureReport& rep);

} // namespace chronon::io

#endif
