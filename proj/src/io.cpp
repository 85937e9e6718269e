#include "mudist/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mudist {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open for writing: " + path.string());
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open for reading: " + path.string());
    return in;
}

void write_row(std::ofstream& out, const Vector& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ',';
        out << format_double(row[i]);
    }
    out << '\n';
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_objective_set_csv(const std::filesystem::path& path, const VectorSet& set) {
    auto out = open_out(path);
    for (const auto& row : set) write_row(out, row);
}

VectorSet read_objective_set_csv(const std::filesystem::path& path) {
    auto in = open_in(path);
    VectorSet set;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        Vector row;
        const char* p = line.data();
        const char* end = p + line.size();
        while (true) {
            double v = 0.0;
            const auto [next, ec] = std::from_chars(p, end, v);
            if (ec != std::errc{})
                throw InvalidInput(path.string() + ": line " + std::to_string(lineno) +
                                   ": malformed number");
            row.push_back(v);
            p = next;
            if (p == end) break;
            if (*p != ',')
                throw InvalidInput(path.string() + ": line " + std::to_string(lineno) +
                                   ": expected comma");
            ++p;
        }
        if (!set.empty() && row.size() != set.front().size())
            throw InvalidInput(path.string() + ": line " + std::to_string(lineno) +
                               ": inconsistent column count");
        set.push_back(std::move(row));
    }
    if (set.empty()) throw InvalidInput(path.string() + ": empty set");
    return set;
}

void write_scatter_csv(const std::filesystem::path& path,
                       const std::vector<std::pair<std::string, VectorSet>>& series) {
    auto out = open_out(path);
    std::size_t m = 0;
    for (const auto& [label, pts] : series)
        if (!pts.empty()) m = pts.front().size();
    out << "series";
    for (std::size_t i = 1; i <= m; ++i) out << ",f" << i;
    out << '\n';
    for (const auto& [label, pts] : series)
        for (const auto& p : pts) {
            out << label;
            for (double v : p) out << ',' << format_double(v);
            out << '\n';
        }
}

nlohmann::json run_record_to_json(const RunRecord& rec) {
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& [evals, best] : rec.history)
        hist.push_back(nlohmann::json::array({evals, best}));
    return nlohmann::json{{"algorithm", rec.algorithm},
                          {"seed", rec.seed},
                          {"evaluations", rec.evaluations},
                          {"best_value", rec.best_value},
                          {"best_point", rec.best_point},
                          {"history", std::move(hist)}};
}

RunRecord run_record_from_json(const nlohmann::json& j) {
    try {
        RunRecord rec;
        rec.algorithm = j.at("algorithm").get<std::string>();
        rec.seed = j.at("seed").get<std::uint64_t>();
        rec.evaluations = j.at("evaluations").get<std::size_t>();
        rec.best_value = j.at("best_value").get<double>();
        rec.best_point = j.at("best_point").get<Vector>();
        for (const auto& entry : j.at("history"))
            rec.history.emplace_back(entry.at(0).get<std::size_t>(), entry.at(1).get<double>());
        return rec;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("run record: ") + e.what());
    }
}

void write_rank_table_csv(const std::filesystem::path& path, const RankTable& table) {
    auto out = open_out(path);
    out << "indicator";
    for (const auto& s : table.sets) out << ',' << s;
    out << '\n';
    for (std::size_t r = 0; r < table.indicators.size(); ++r) {
        out << table.indicators[r];
        for (double v : table.ranks[r]) out << ',' << format_double(v);
        out << '\n';
    }
    out << "Avg.";
    for (double v : table.average_ranks) out << ',' << format_double(v);
    out << '\n';
}

nlohmann::json rank_table_to_json(const RankTable& table) {
    return nlohmann::json{{"indicators", table.indicators},
                          {"sets", table.sets},
                          {"values", table.values},
                          {"ranks", table.ranks},
                          {"average_ranks", table.average_ranks}};
}

RankTable rank_table_from_json(const nlohmann::json& j) {
    RankTable table;
    try {
        table.indicators = j.at("indicators").get<std::vector<std::string>>();
        table.sets = j.at("sets").get<std::vector<std::string>>();
        table.values = j.at("values").get<std::vector<Vector>>();
        table.ranks = j.at("ranks").get<std::vector<Vector>>();
        table.average_ranks = j.at("average_ranks").get<Vector>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("rank table: ") + e.what());
    }
    if (table.ranks.size() != table.indicators.size() ||
        table.values.size() != table.indicators.size())
        throw InvalidInput("rank table: row count mismatch");
    for (const auto& row : table.ranks)
        if (row.size() != table.sets.size())
            throw InvalidInput("rank table: column count mismatch");
    return table;
}

void write_tau_matrix_csv(const std::filesystem::path& path, const TauMatrix& taus) {
    auto out = open_out(path);
    out << "indicator";
    for (const auto& s : taus.labels) out << ',' << s;
    out << '\n';
    for (std::size_t r = 0; r < taus.labels.size(); ++r) {
        out << taus.labels[r];
        for (double v : taus.tau[r]) out << ',' << format_double(v);
        out << '\n';
    }
}

nlohmann::json tau_matrix_to_json(const TauMatrix& taus) {
    return nlohmann::json{{"labels", taus.labels}, {"tau", taus.tau}};
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
    auto in = open_in(path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
    return j;
}

std::string file_hash(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::uint64_t h = 0xCBF29CE484222325ULL;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        const std::streamsize n = in.gcount();
        for (std::streamsize i = 0; i < n; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001B3ULL;
        }
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return hex;
}

}  // namespace mudist
