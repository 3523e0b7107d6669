#pragma once

// Text, CSV and JSON renderings shared by the command-line tool. Every
// number is written as an exact decimal; JSON carries numbers as strings.

#include "hosoya/check.hpp"
#include "hosoya/eigen.hpp"
#include "hosoya/graphs.hpp"
#include "hosoya/identities.hpp"
#include "hosoya/matrix.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace hosoya::format {

using Json = nlohmann::ordered_json;

// Rows of a triangle, centered like the printed table.
std::string triangle_text(const std::vector<std::vector<BigInt>>& rows);
std::string triangle_csv(const std::vector<std::vector<BigInt>>& rows);
Json triangle_json(const std::vector<std::vector<BigInt>>& rows);

std::string matrix_text(const ExactMatrix& m);
std::string matrix_csv(const ExactMatrix& m);
// {"rows": r, "cols": c, "entries": [[...decimal strings...]]}
Json matrix_json(const ExactMatrix& m);

Json surd_json(const SurdValue& value);
// [{"value": ..., "multiplicity": k, "eigenvectors": [[...]]}, ...]
Json eigen_json(const std::vector<EigenPair>& pairs);
std::string eigen_text(const std::vector<EigenPair>& pairs);

Json check_json(const IdentityCheck& check);
std::string checks_summary_text(const std::string& identity,
                                const std::vector<IdentityCheck>& checks,
                                bool detail);
Json checks_json(const std::string& identity,
                 const std::vector<IdentityCheck>& checks, bool detail);

Json components_json(const GraphSpec& g, const ComponentSummary& summary);
std::string components_text(const GraphSpec& g, const ComponentSummary& summary);

Json norm_json(const NormReport& report);

}  // namespace hosoya::format
