#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace zomega {

/** Serializable result envelope for every CLI command; schema_version "1". */
struct ReportEnvelope {
    std::string schema_version{"1"};
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::vector<std::string> provenance;
    double wall_time{0.0};

    nlohmann::json to_json() const;
    static ReportEnvelope from_json(const nlohmann::json& j);
};

/** 17-significant-digit decimal rendering of a double (lossless round-trip). */
std::string format_double(double x);

/**
 * Write a report to a file.  JSON emits the full envelope; CSV emits
 * results["table"] (an array of uniform objects) with a header row.
 */
void export_table(const ReportEnvelope& rep, const std::string& format, const std::string& path);

}  // namespace zomega
