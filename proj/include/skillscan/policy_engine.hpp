#pragma once

#include <array>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skillscan/catalogs.hpp"
#include "skillscan/extractors.hpp"
#include "skillscan/skill_model.hpp"

namespace skillscan {

// ============================================================================
// Policy identities
// ============================================================================

/// The nine policies, in taxonomy row order.
enum class PolicyId {
    prompt_injection,
    malicious_code,
    suspicious_downloads,
    credential_handling,
    secret_detection,
    third_party_content,
    unverifiable_deps,
    money_access,
    system_services,
};

inline constexpr std::array<PolicyId, 9> kAllPolicies = {
    PolicyId::prompt_injection,   PolicyId::malicious_code,
    PolicyId::suspicious_downloads, PolicyId::credential_handling,
    PolicyId::secret_detection,   PolicyId::third_party_content,
    PolicyId::unverifiable_deps,  PolicyId::money_access,
    PolicyId::system_services,
};

enum class Severity { critical, high, medium };

/// Fixed policy -> severity map.
Severity severity_of(PolicyId policy);

const char* policy_name(PolicyId policy);
std::optional<PolicyId> policy_from_name(const std::string& name);
const char* severity_name(Severity severity);
std::optional<Severity> severity_from_name(const std::string& name);

enum class Confidence { high, medium, low };

const char* confidence_name(Confidence confidence);
std::optional<Confidence> confidence_from_name(const std::string& name);

struct Finding {
    PolicyId policy = PolicyId::prompt_injection;
    Severity severity = Severity::critical;   // always severity_of(policy)
    std::string rule_id;
    std::string message;
    TextSpan evidence;
    Confidence confidence = Confidence::high;
};

// ============================================================================
// Configuration
// ============================================================================

enum class JudgeMode { rules_only, external };

struct PolicyConfig {
    std::set<PolicyId> enabled;                    // default: all nine
    std::vector<std::string> trusted_domains;      // lowercase suffix match
    std::vector<std::string> trusted_github_users;
    JudgeMode judge = JudgeMode::rules_only;
    std::optional<std::string> judge_endpoint;     // required when judge == external
    int judge_timeout_ms = 10000;
    std::shared_ptr<const Catalogs> catalogs;      // null -> embedded defaults

    PolicyConfig();

    bool is_enabled(PolicyId policy) const { return enabled.count(policy) > 0; }
    bool is_trusted_domain(const std::string& host) const;
    bool is_trusted_github_user(const std::string& user) const;
    const Catalogs& catalog() const;
};

// ============================================================================
// Judge contract
// ============================================================================

struct JudgeRequest {
    PolicyId policy = PolicyId::prompt_injection;
    std::string text;
    std::string context;
};

struct JudgeVerdict {
    bool flagged = false;
    std::string rationale;
    Confidence confidence = Confidence::medium;
};

/// rules_only: re-applies the requesting policy's phrase/pattern sets.
/// external: POSTs the request to cfg.judge_endpoint and parses the reply.
/// Throws JudgeUnavailable when the endpoint is unreachable or malformed.
JudgeVerdict evaluate_judge(const JudgeRequest& req, const PolicyConfig& cfg);

// ============================================================================
// Per-skill scan result (rollups live in reporting)
// ============================================================================

struct ScanReport {
    SkillId skill;
    std::string source_path;
    std::vector<Finding> findings;
    int critical_count = 0;
    int high_count = 0;
    int medium_count = 0;
    bool has_critical = false;
    bool has_any = false;
    std::vector<std::string> notes;   // overflow / judge fallback diagnostics
};

// ============================================================================
// Policies
// ============================================================================

std::vector<Finding> analyze_prompt_injection(const SkillPackage& pkg, const PolicyConfig& cfg);
std::vector<Finding> analyze_malicious_code(const SkillPackage& pkg, const PolicyConfig& cfg);
std::vector<Finding> analyze_suspicious_downloads(const SkillPackage& pkg, const PolicyConfig& cfg);
std::vector<Finding> analyze_credential_handling(const SkillPackage& pkg, const PolicyConfig& cfg);
std::vector<Finding> analyze_secrets(const SkillPackage& pkg, const PolicyConfig& cfg);
std::vector<Finding> analyze_third_party_content(const SkillPackage& pkg, const PolicyConfig& cfg);
std::vector<Finding> analyze_unverifiable_deps(const SkillPackage& pkg, const PolicyConfig& cfg);
std::vector<Finding> analyze_money_access(const SkillPackage& pkg, const PolicyConfig& cfg);
std::vector<Finding> analyze_system_services(const SkillPackage& pkg, const PolicyConfig& cfg);

/// Runs every enabled policy over the package and returns the merged,
/// ordered report. Never throws for policy-internal failures; the external
/// judge degrades to rules_only with confidence=low findings.
ScanReport run_policies(const SkillPackage& pkg, const PolicyConfig& cfg);

// Per-policy finding cap; hostile inputs must not bloat reports.
inline constexpr std::size_t kMaxFindingsPerPolicy = 50;

namespace policy_detail {

/// Typosquat probe: a non-member package name at Damerau-Levenshtein
/// distance exactly 1 from a catalog member returns that member.
std::optional<std::string> typosquat_of(const std::string& package_name,
                                        const Catalogs& catalogs);

/// O(len) check for Damerau-Levenshtein distance <= 1 (identity counts).
bool within_damerau_levenshtein_1(const std::string& a, const std::string& b);

/// Package names referenced by install commands and import statements.
std::vector<std::pair<std::string, TextSpan>> extract_package_names(const SkillPackage& pkg);

}  // namespace policy_detail

}  // namespace skillscan
