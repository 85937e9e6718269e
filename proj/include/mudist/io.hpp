#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>

#include <json.hpp>

#include "mudist/analysis.hpp"
#include "mudist/common.hpp"
#include "mudist/optimizer.hpp"

namespace mudist {

// 17-significant-digit decimal form; round-trips binary64 exactly.
std::string format_double(double v);

// Plain numeric CSV, one row per member, row order preserved.
void write_objective_set_csv(const std::filesystem::path& path, const VectorSet& set);

// Errors carry the 1-based line number of the offending row.
VectorSet read_objective_set_csv(const std::filesystem::path& path);

// Labeled point series for plotting ("series,f1,...,fm" header).
void write_scatter_csv(const std::filesystem::path& path,
                       const std::vector<std::pair<std::string, VectorSet>>& series);

nlohmann::json run_record_to_json(const RunRecord& rec);
RunRecord run_record_from_json(const nlohmann::json& j);

void write_rank_table_csv(const std::filesystem::path& path, const RankTable& table);
nlohmann::json rank_table_to_json(const RankTable& table);
RankTable rank_table_from_json(const nlohmann::json& j);
void write_tau_matrix_csv(const std::filesystem::path& path, const TauMatrix& taus);
nlohmann::json tau_matrix_to_json(const TauMatrix& taus);

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::filesystem::path& path);

// Content fingerprint used by manifests (FNV-1a 64, hex).
std::string file_hash(const std::filesystem::path& path);

}  // namespace mudist
