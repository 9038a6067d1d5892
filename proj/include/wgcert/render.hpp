#pragma once

// Text, CSV and JSON renderings of certificates, search results and reports.
//
// The JSON forms are the stable structured output. Exact rationals appear as
// "numerator/denominator" strings; each has a sibling "<field>_approx" with a
// 15-significant-digit decimal that is for display only.

#include "wgcert/certifier.hpp"
#include "wgcert/expsum.hpp"
#include "wgcert/optimizer.hpp"
#include "wgcert/tables.hpp"

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace wgcert {

enum class OutputFormat { text, csv, json };

/// "text", "csv" or "json"; throws std::invalid_argument otherwise.
OutputFormat parse_format(std::string_view name);

nlohmann::json to_json(const BoundCertificate& cert);
BoundCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SearchResult& res);
SearchResult search_result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& rep);
nlohmann::json to_json(const AsymptoticReport& rep);
nlohmann::json to_json(const SumValue& v);

std::string render(const BoundCertificate& cert, OutputFormat fmt);
std::string render(const std::vector<SearchResult>& results, OutputFormat fmt);
std::string render(const VerificationReport& rep, OutputFormat fmt);
std::string render(const std::vector<AsymptoticReport>& reps, OutputFormat fmt);

} // namespace wgcert
