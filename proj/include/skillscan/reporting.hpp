#pragma once

#include <map>
#include <string>
#include <vector>

#include "skillscan/policy_engine.hpp"

namespace skillscan {

// ============================================================================
// Aggregates
// ============================================================================

struct CorpusStats {
    int total_skills = 0;
    std::map<PolicyId, int> per_policy_count;      // skills with >= 1 finding of the policy
    std::map<PolicyId, double> per_policy_rate;    // count / total_skills
    int critical_count = 0;
    double critical_fraction = 0.0;
    int any_count = 0;
    double any_fraction = 0.0;
};

enum class RenderFormat { json, text };

enum class FailOn { critical, high, medium, never };

std::optional<FailOn> fail_on_from_name(const std::string& name);

// ============================================================================
// Operations
// ============================================================================

/// Rollup counts and flags for one skill. Finding order is preserved.
ScanReport build_report(const SkillId& skill, const std::string& source_path,
                        std::vector<Finding> findings);

/// Per-skill occurrence rates and aggregate fractions. A skill counts once
/// per policy regardless of finding multiplicity. Throws EmptyCorpus.
CorpusStats corpus_stats(const std::vector<ScanReport>& reports);

/// Deterministic rendering. json: canonical key order, newline-terminated.
/// text: one line per finding `SEVERITY policy rule_id file:line message`.
std::string render(const ScanReport& report, RenderFormat format);
std::string render(const CorpusStats& stats, RenderFormat format);

/// Parses a JSON report rendering back into a ScanReport.
ScanReport report_from_json(const std::string& json_text);

/// 0 when no finding sits at or above the threshold, 1 otherwise.
/// 2 is reserved for operational errors and set by the CLI.
int exit_code(const std::vector<ScanReport>& reports, FailOn fail_on);

/// count/total as a percentage string, round-half-away-from-zero.
std::string format_percent(int count, int total, int decimals);

}  // namespace skillscan
