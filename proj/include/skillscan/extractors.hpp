#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skillscan/skill_model.hpp"

namespace skillscan {

// ============================================================================
// Extraction results
// ============================================================================

/// Location of a match inside a package file. line/col are 1-based and
/// byte-oriented. excerpt is the verbatim slice at the location (max 200
/// chars, cut at the line end) except for secrets, which are masked.
struct TextSpan {
    std::string file;
    int line = 1;
    int col = 1;
    std::string excerpt;
};

enum class UrlScheme { http, https, other };

struct UrlRef {
    std::string raw;
    UrlScheme scheme = UrlScheme::other;
    std::string host;          // lowercase, brackets stripped for IPv6
    bool is_ip_literal = false;
    TextSpan span;
};

enum class CommandSource { instruction_block, script_file };

struct CommandRef {
    std::string text;          // one logical command, pipes kept intact
    CommandSource source = CommandSource::script_file;
    TextSpan span;
};

enum class BlobEncoding { base64, hex };

struct EncodedBlob {
    std::string encoded;
    std::optional<std::string> decoded_text;  // valid UTF-8 and mostly printable
    BlobEncoding encoding = BlobEncoding::base64;
    TextSpan span;
};

enum class AnomalyKind { zero_width, bidi_override, tag_block, confusable_mix };

const char* anomaly_kind_name(AnomalyKind kind);

struct UnicodeAnomaly {
    AnomalyKind kind = AnomalyKind::zero_width;
    std::vector<uint32_t> codepoints;
    TextSpan span;
};

enum class SecretKind {
    aws_key,
    github_token,
    openai_style_key,
    pem_private_key,
    generic_high_entropy,
    password_assignment,
};

const char* secret_kind_name(SecretKind kind);

struct SecretCandidate {
    SecretKind kind = SecretKind::generic_high_entropy;
    std::string matched;       // the raw token; reports must use masked excerpts
    double entropy_bits_per_char = 0.0;
    TextSpan span;
};

// ============================================================================
// Extractors (pure functions)
// ============================================================================

/// Every http/https URL in the text, ordered by position. Trailing
/// punctuation is stripped; hosts are lowercased.
std::vector<UrlRef> extract_urls(const std::string& text, const std::string& file);

/// Commands from sh/bash/shell/zsh or untagged fenced blocks in
/// instruction/document files plus every line of script files. Comment
/// lines are dropped; splitting is on newlines, `;` and `&&` with pipe
/// chains kept whole.
std::vector<CommandRef> extract_commands(const SkillPackage& pkg);

/// Maximal base64 runs (>= 24 chars) and hex runs (>= 32 chars) with a
/// decode attempt. Decoded text that is itself encoded is re-scanned once.
std::vector<EncodedBlob> find_encoded_blobs(const std::string& text,
                                            const std::string& file);

/// Zero-width, bidi-override and tag-block runs plus single words mixing
/// Latin with Cyrillic/Greek letters. One anomaly per contiguous run.
std::vector<UnicodeAnomaly> detect_unicode_anomalies(const std::string& text,
                                                     const std::string& file);

/// Fixed secret pattern catalog with entropy annotation. Overlapping
/// matches are deduplicated, most specific kind wins. Excerpts are masked.
std::vector<SecretCandidate> scan_secret_patterns(const std::string& text,
                                                  const std::string& file);

/// Shannon entropy in bits per character over byte frequencies.
/// Throws EmptyInput on an empty string.
double shannon_entropy(const std::string& s);

// ============================================================================
// Shared text utilities (used by the policy layer as well)
// ============================================================================

bool is_valid_utf8(const std::string& bytes);

/// Secret masking: first 4 + last 2 characters kept, middle replaced;
/// tokens of 6 chars or fewer are masked entirely.
std::string mask_secret(const std::string& token);

/// Text with zero-width/bidi characters removed, tag-block characters
/// mapped down to ASCII, and common Cyrillic/Greek homoglyphs folded to
/// Latin. Used to re-match phrases hidden behind Unicode tricks.
std::string reveal_hidden_text(const std::string& text);

/// Case-folded, whitespace-collapsed phrase search. Returns the byte offset
/// of the first occurrence in the original text, or npos.
std::size_t find_phrase(const std::string& text, const std::string& phrase);

}  // namespace skillscan
