#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skillscan/policy_engine.hpp"
#include "skillscan/skill_model.hpp"

namespace skillscan {

// ============================================================================
// Fixture generation: seeded, labeled, inert
// ============================================================================

enum class FixturePattern {
    external_malware_link,
    obfuscated_exfiltration,
    security_disable,
    curl_bash,
    hardcoded_secret,
    plaintext_credentials,
    auto_update_loop,
    unicode_contraband,
    typosquat,
};

inline constexpr std::array<FixturePattern, 9> kAllPatterns = {
    FixturePattern::external_malware_link, FixturePattern::obfuscated_exfiltration,
    FixturePattern::security_disable,      FixturePattern::curl_bash,
    FixturePattern::hardcoded_secret,      FixturePattern::plaintext_credentials,
    FixturePattern::auto_update_loop,      FixturePattern::unicode_contraband,
    FixturePattern::typosquat,
};

const char* pattern_name(FixturePattern pattern);
std::optional<FixturePattern> pattern_from_name(const std::string& name);

struct FixtureSpec {
    uint64_t seed = 0;
    int benign_count = 0;
    int malicious_count = 0;
    std::vector<FixturePattern> pattern_mix;   // required when malicious_count > 0
};

struct SkillLabel {
    bool malicious = false;
    std::vector<FixturePattern> patterns;      // non-empty iff malicious
};

struct LabeledCorpus {
    Corpus corpus;
    std::map<std::string, SkillLabel> labels;  // keyed by SkillId::dedupe_key()

    const SkillLabel* label_of(const SkillId& id) const;
};

/// Writes the fixture tree under `out` plus a labels.json manifest.
/// Identical (seed, spec) pairs produce byte-identical trees. Benign
/// packages avoid every rule catalog; malicious packages each embed one
/// pattern from the mix. Throws IoError / UsageError.
LabeledCorpus generate(const FixtureSpec& spec, const std::string& out);

/// The minimal policy set a malicious pattern guarantees in a scan.
/// Throws BenignLabel for benign labels.
std::set<PolicyId> expected_findings(const SkillLabel& label);

/// Reads a labels.json manifest back (used when scanning a generated tree
/// without the in-memory LabeledCorpus).
std::map<std::string, SkillLabel> load_labels(const std::string& corpus_root);

}  // namespace skillscan
