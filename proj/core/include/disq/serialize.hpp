#pragma once

#include <cstddef>
#include <string>

#include <nlohmann/json.hpp>

#include "disq/experiment.hpp"
#include "disq/protocol.hpp"
#include "disq/resources.hpp"

namespace disq {

inline constexpr int kSchemaVersion = 1;

// Every top-level object carries "schema" and a "kind" tag.
nlohmann::json shot_to_json(const OutcomeRecord& record, const ProtocolParams& params, std::size_t shot);
nlohmann::json summary_to_json(const RunSummary& summary);
nlohmann::json resources_to_json(const ResourceReport& report);
nlohmann::json factor_to_json(std::uint64_t n, const FactorResult& result);

// Columns: N,a,epsilon,shots,success_rate,theorem2_bound,mean_error
std::string summary_csv_header();
std::string summary_csv_row(const RunSummary& summary);

std::string resources_csv_header();
std::string resources_csv_row(const ResourceReport& report);

}  // namespace disq
