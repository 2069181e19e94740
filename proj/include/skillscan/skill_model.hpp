#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skillscan/errors.hpp"

namespace skillscan {

// ============================================================================
// Domain types
// ============================================================================

/// Marketplace identity of a skill. Comparison for dedupe purposes is
/// case-insensitive on (author, slug) and ignores the version.
struct SkillId {
    std::string author;
    std::string slug;
    std::optional<std::string> version;

    /// Lowercased "author/slug" dedupe key.
    std::string dedupe_key() const;
};

/// (author, slug) equality, case-insensitive, version ignored.
bool same_skill(const SkillId& a, const SkillId& b);

/// Version ordering: dot-split, numeric-aware segment comparison.
/// Missing version sorts lowest; "1.10" > "1.9".
bool version_less(const std::optional<std::string>& a,
                  const std::optional<std::string>& b);

enum class FileKind { instruction, script, config, document, binary, other };

const char* file_kind_name(FileKind kind);

struct SkillFile {
    std::string rel_path;              // '/'-separated, never escapes the root
    std::string content;               // raw bytes
    FileKind kind = FileKind::other;
    std::optional<std::string> text;   // present iff content is valid UTF-8
    bool truncated = false;            // content was cut at the ingest size cap
};

/// Flat frontmatter view: name/description pulled out, every other key kept
/// in source order with scalar values stringified.
struct Manifest {
    std::optional<std::string> name;
    std::optional<std::string> description;
    std::vector<std::pair<std::string, std::string>> metadata;

    bool empty() const { return !name && !description && metadata.empty(); }
    std::optional<std::string> get(const std::string& key) const;
};

struct SkillPackage {
    SkillId id;
    Manifest manifest;
    std::string instruction_text;      // main skill file body, frontmatter stripped
    std::vector<SkillFile> files;      // sorted by rel_path, main file included
    std::string source_path;           // directory the package was parsed from

    const SkillFile* find_file(const std::string& rel_path) const;
    std::string main_file() const;     // rel_path of the main skill file
};

struct Corpus {
    std::string root;
    std::vector<SkillPackage> skills;                       // sorted by (author, slug), ci
    std::vector<std::pair<std::string, std::string>> skipped;  // (path, reason)
};

// ============================================================================
// Operations
// ============================================================================

struct FrontmatterResult {
    Manifest manifest;
    std::string body;
    std::string raw_block;     // text between the delimiters, verbatim
    bool had_frontmatter = false;
};

/// Splits a leading `---` delimited key: value block from the body.
/// No opening delimiter means no frontmatter (empty manifest, body = text).
/// Throws FrontmatterMalformed on an unclosed delimiter or a non key: value line.
FrontmatterResult parse_frontmatter(const std::string& text);

/// Parses one skill directory into a package. Throws MissingMainFile,
/// IoError, or PathEscape.
SkillPackage parse_skill_package(const std::string& dir);

/// Discovers every <author>/<slug> directory two levels under root and
/// parses each; failures land in Corpus::skipped. Throws IoError only when
/// root itself is unreadable.
Corpus load_corpus(const std::string& root);

/// Keeps exactly one package per (author, slug) pair, the greatest version.
Corpus dedupe_corpus(const Corpus& corpus);

// Per-file ingest cap; larger files are truncated and marked binary.
inline constexpr std::size_t kMaxFileBytes = 2 * 1024 * 1024;

}  // namespace skillscan
