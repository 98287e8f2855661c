#pragma once

// Acceptance criteria, shared by `rotgame verify` and the acceptance test binary.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace rotgame::cli {

struct CriterionResult {
    std::string id;     // "1".."11"; supplementary lines carry a suffix
    std::string group;  // selector for --only
    std::string title;
    bool passed{false};
    bool supplementary{false};  // reported, but not part of the exit status
    double seconds{0.0};
    std::vector<std::string> details;
};

/// Group names accepted by --only.
std::vector<std::string_view> acceptance_groups();

/// Runs every criterion, or only those in `group` when non-empty. Throws
/// UsageError for an unknown group.
std::vector<CriterionResult> run_acceptance(std::string_view group = {});

bool all_required_passed(const std::vector<CriterionResult>& results);

std::string format_report(const std::vector<CriterionResult>& results);
nlohmann::json report_json(const std::vector<CriterionResult>& results);

}  // namespace rotgame::cli
