#include "zomega/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace zomega {

using nlohmann::json;

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

json ReportEnvelope::to_json() const {
    json j;
    j["schema_version"] = schema_version;
    j["command"] = command;
    j["params"] = params;
    j["results"] = results;
    j["provenance"] = provenance;
    j["wall_time"] = wall_time;
    return j;
}

ReportEnvelope ReportEnvelope::from_json(const json& j) {
    ReportEnvelope r;
    r.schema_version = j.at("schema_version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.params = j.at("params");
    r.results = j.at("results");
    r.provenance = j.at("provenance").get<std::vector<std::string>>();
    r.wall_time = j.at("wall_time").get<double>();
    return r;
}

namespace {

std::string csv_cell(const json& v) {
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

}  // namespace

void export_table(const ReportEnvelope& rep, const std::string& format, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("export_table: cannot open " + path);
    if (format == "json") {
        out << rep.to_json().dump(2) << "\n";
        return;
    }
    if (format != "csv") throw std::runtime_error("export_table: unknown format " + format);
    if (!rep.results.contains("table") || !rep.results["table"].is_array())
        throw std::runtime_error("export_table: report has no table for CSV export");
    const json& table = rep.results["table"];
    if (table.empty()) return;
    bool first = true;
    for (auto it = table[0].begin(); it != table[0].end(); ++it) {
        if (!first) out << ",";
        out << it.key();
        first = false;
    }
    out << "\n";
    for (const json& row : table) {
        first = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
            if (!first) out << ",";
            out << csv_cell(it.value());
            first = false;
        }
        out << "\n";
    }
}

}  // namespace zomega
