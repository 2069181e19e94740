#pragma once

#include <string>
#include <vector>

namespace skillscan {

/// Versioned phrase and pattern data consumed by the policies. The embedded
/// defaults ship in the binary; callers may supply an edited copy through
/// PolicyConfig to widen or narrow a catalog.
struct Catalogs {
    std::string version;

    // Prompt injection
    std::vector<std::string> override_phrases;
    std::vector<std::string> impersonation_markers;   // line-start or inline pseudo-tags
    std::vector<std::string> exfil_verbs;
    std::vector<std::string> sensitive_nouns;

    // Credential handling
    std::vector<std::string> credential_name_fragments;  // matched inside $VAR names
    std::vector<std::string> user_share_phrases;
    std::vector<std::string> store_verbs;

    // Third-party content, one noun list per source category
    std::vector<std::string> fetch_verbs;
    std::vector<std::string> web_source_nouns;
    std::vector<std::string> ugc_source_nouns;
    std::vector<std::string> repo_source_nouns;
    std::vector<std::string> api_source_nouns;

    // Money access, one list per category
    std::vector<std::string> trading_terms;
    std::vector<std::string> wallet_terms;
    std::vector<std::string> banking_terms;
    std::vector<std::string> payment_terms;

    // System services
    std::vector<std::string> service_unit_markers;
    std::vector<std::string> persistence_markers;
    std::vector<std::string> security_disable_markers;
    std::vector<std::string> critical_path_markers;

    // Downloads
    std::vector<std::string> download_verbs;

    // Typosquat reference list: top package names across the major
    // ecosystems, all lowercase, length >= 4.
    std::vector<std::string> top_packages;
};

/// The embedded catalog data.
const Catalogs& default_catalogs();

}  // namespace skillscan
