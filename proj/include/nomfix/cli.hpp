#pragma once

// Command-line front end. run_cli builds a Report; tools/nomfix.cpp prints it.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace nomfix {

struct Report {
    std::string command;
    std::string system;
    std::string verdict;  // true | false | valid | invalid | valid-with-residual | error
    std::vector<std::string> output;
    std::vector<std::string> diagnostics;
    std::optional<nlohmann::json> derivation;
    int exit_code = 2;

    friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// Human-readable or JSON text for a report.
std::string render(const Report& r, bool json);

/// `args` excludes the program name. Sets `json` when --json was given.
Report run_cli(const std::vector<std::string>& args, bool* json = nullptr);

}  // namespace nomfix
