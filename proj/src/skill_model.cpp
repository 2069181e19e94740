#include "skillscan/skill_model.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "skillscan/extractors.hpp"

namespace fs = std::filesystem;

namespace skillscan {

namespace {

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string strip_quotes(const std::string& s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                          (s.front() == '\'' && s.back() == '\''))) {
        return s.substr(1, s.size() - 2);
    }
    return s;
}

bool is_all_digits(const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

// ============================================================================
// SkillId
// ============================================================================

std::string SkillId::dedupe_key() const {
    return to_lower(author) + "/" + to_lower(slug);
}

bool same_skill(const SkillId& a, const SkillId& b) {
    return a.dedupe_key() == b.dedupe_key();
}

bool version_less(const std::optional<std::string>& a,
                  const std::optional<std::string>& b) {
    if (!a && !b) return false;
    if (!a) return true;   // missing sorts lowest
    if (!b) return false;
    auto sa = split(*a, '.');
    auto sb = split(*b, '.');
    size_t n = std::max(sa.size(), sb.size());
    for (size_t i = 0; i < n; ++i) {
        if (i >= sa.size()) return true;   // shorter prefix sorts lower
        if (i >= sb.size()) return false;
        const std::string& x = sa[i];
        const std::string& y = sb[i];
        if (is_all_digits(x) && is_all_digits(y)) {
            long long vx = std::stoll(x);
            long long vy = std::stoll(y);
            if (vx != vy) return vx < vy;
        } else if (x != y) {
            return x < y;
        }
    }
    return false;
}

// ============================================================================
// Manifest
// ============================================================================

std::optional<std::string> Manifest::get(const std::string& key) const {
    if (key == "name") return name;
    if (key == "description") return description;
    for (const auto& [k, v] : metadata) {
        if (k == key) return v;
    }
    return std::nullopt;
}

const SkillFile* SkillPackage::find_file(const std::string& rel_path) const {
    for (const auto& f : files) {
        if (f.rel_path == rel_path) return &f;
    }
    return nullptr;
}

// ============================================================================
// Frontmatter
// ============================================================================

FrontmatterResult parse_frontmatter(const std::string& text) {
    FrontmatterResult result;
    // Opening delimiter: first line is exactly "---" (allowing trailing \r).
    if (!(text.rfind("---\n", 0) == 0 || text.rfind("---\r\n", 0) == 0 ||
          text == "---")) {
        result.body = text;
        return result;
    }
    size_t block_start = text.find('\n');
    if (block_start == std::string::npos) {
        throw Error(ErrorCode::FrontmatterMalformed,
                    "frontmatter opened but never closed");
    }
    ++block_start;

    // Locate the closing "---" line.
    size_t pos = block_start;
    size_t block_end = std::string::npos;  // offset just past the block
    size_t body_start = std::string::npos;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string line = (eol == std::string::npos) ? text.substr(pos)
                                                      : text.substr(pos, eol - pos);
        std::string bare = line;
        if (!bare.empty() && bare.back() == '\r') bare.pop_back();
        if (bare == "---") {
            block_end = pos;
            body_start = (eol == std::string::npos) ? text.size() : eol + 1;
            break;
        }
        if (eol == std::string::npos) break;
        pos = eol + 1;
    }
    if (block_end == std::string::npos) {
        throw Error(ErrorCode::FrontmatterMalformed,
                    "frontmatter opened but never closed");
    }

    result.had_frontmatter = true;
    result.raw_block = text.substr(block_start, block_end - block_start);
    result.body = text.substr(body_start);

    // Flat key: value pairs; indented or "- " lines extend the previous key's
    // raw value, nested structure is not modeled.
    std::istringstream in(result.raw_block);
    std::string line;
    std::string* last_value = nullptr;
    std::vector<std::pair<std::string, std::string>> pairs;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        bool continuation = line != t && (line[0] == ' ' || line[0] == '\t');
        if ((continuation || t.rfind("- ", 0) == 0 || t == "-") && last_value) {
            if (!last_value->empty()) last_value->push_back(' ');
            last_value->append(t);
            continue;
        }
        size_t colon = t.find(':');
        if (colon == std::string::npos || colon == 0) {
            throw Error(ErrorCode::FrontmatterMalformed,
                        "frontmatter line is not key: value shaped: " + t);
        }
        std::string key = trim(t.substr(0, colon));
        std::string value = strip_quotes(trim(t.substr(colon + 1)));
        pairs.emplace_back(key, value);
        last_value = &pairs.back().second;
    }
    for (auto& [key, value] : pairs) {
        if (key == "name" && !result.manifest.name) {
            result.manifest.name = value;
        } else if (key == "description" && !result.manifest.description) {
            result.manifest.description = value;
        } else {
            result.manifest.metadata.emplace_back(key, value);
        }
    }
    return result;
}

// ============================================================================
// Package parsing
// ============================================================================

namespace {

bool has_extension(const std::string& path, std::initializer_list<const char*> exts) {
    size_t dot = path.find_last_of('.');
    if (dot == std::string::npos) return false;
    std::string ext = to_lower(path.substr(dot));
    for (const char* e : exts) {
        if (ext == e) return true;
    }
    return false;
}

FileKind classify_file(const std::string& rel_path, const std::string& content,
                       bool is_main, bool truncated) {
    if (truncated) return FileKind::binary;
    if (has_extension(rel_path, {".sh", ".bash", ".py", ".js", ".ts", ".rb", ".pl"}) ||
        content.rfind("#!", 0) == 0) {
        return FileKind::script;
    }
    if (has_extension(rel_path, {".json", ".yaml", ".yml", ".toml", ".ini", ".env"}) ||
        rel_path == ".env" || rel_path.size() >= 5 &&
        rel_path.compare(rel_path.size() - 4, 4, ".env") == 0) {
        return FileKind::config;
    }
    if (is_main || has_extension(rel_path, {".md"})) return FileKind::instruction;
    if (has_extension(rel_path, {".txt", ".rst"})) return FileKind::document;
    if (!is_valid_utf8(content)) return FileKind::binary;
    return FileKind::other;
}

std::string read_file_capped(const fs::path& p, bool& truncated) {
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot read file: " + p.string());
    }
    std::string content;
    content.resize(kMaxFileBytes + 1);
    in.read(content.data(), static_cast<std::streamsize>(content.size()));
    content.resize(static_cast<size_t>(in.gcount()));
    truncated = content.size() > kMaxFileBytes;
    if (truncated) content.resize(kMaxFileBytes);
    return content;
}

std::string relative_slash_path(const fs::path& p, const fs::path& base) {
    std::string rel = fs::relative(p, base).generic_string();
    return rel;
}

// Main skill file discovery: SKILL.md, then skill.md, then the only root-level
// .md file. Several .md files with none named SKILL.md is an error.
std::string discover_main_file(const fs::path& dir) {
    if (fs::exists(dir / "SKILL.md")) return "SKILL.md";
    if (fs::exists(dir / "skill.md")) return "skill.md";
    std::vector<std::string> md_files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() &&
            has_extension(entry.path().filename().string(), {".md"})) {
            md_files.push_back(entry.path().filename().string());
        }
    }
    if (md_files.size() == 1) return md_files[0];
    if (md_files.empty()) {
        throw Error(ErrorCode::MissingMainFile, "no main skill file in " + dir.string());
    }
    throw Error(ErrorCode::MissingMainFile,
                "several .md files and none named SKILL.md in " + dir.string());
}

}  // namespace

const char* file_kind_name(FileKind kind) {
    switch (kind) {
        case FileKind::instruction: return "instruction";
        case FileKind::script: return "script";
        case FileKind::config: return "config";
        case FileKind::document: return "document";
        case FileKind::binary: return "binary";
        case FileKind::other: return "other";
    }
    return "other";
}

std::string SkillPackage::main_file() const {
    for (const auto& f : files) {
        if (f.kind == FileKind::instruction &&
            (f.rel_path == "SKILL.md" || f.rel_path == "skill.md")) {
            return f.rel_path;
        }
    }
    for (const auto& f : files) {
        if (f.kind == FileKind::instruction) return f.rel_path;
    }
    return files.empty() ? std::string{} : files.front().rel_path;
}

SkillPackage parse_skill_package(const std::string& dir) {
    fs::path root(dir);
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw Error(ErrorCode::IoError, "not a directory: " + dir);
    }
    fs::path canonical_root = fs::canonical(root, ec);
    if (ec) {
        throw Error(ErrorCode::IoError, "cannot resolve: " + dir);
    }

    std::string main_rel = discover_main_file(root);

    SkillPackage pkg;
    pkg.source_path = dir;

    for (auto it = fs::recursive_directory_iterator(
             root, fs::directory_options::none, ec);
         it != fs::recursive_directory_iterator(); ++it) {
        const fs::directory_entry& entry = *it;
        if (entry.is_symlink()) {
            fs::path target = fs::canonical(entry.path(), ec);
            if (ec || target.string().rfind(canonical_root.string(), 0) != 0) {
                throw Error(ErrorCode::PathEscape,
                            "entry resolves outside the package: " +
                                entry.path().string());
            }
        }
        if (!entry.is_regular_file()) continue;

        SkillFile file;
        file.rel_path = relative_slash_path(entry.path(), root);
        if (file.rel_path.find("..") == 0) {
            throw Error(ErrorCode::PathEscape,
                        "entry escapes the package root: " + file.rel_path);
        }
        file.content = read_file_capped(entry.path(), file.truncated);
        file.kind = classify_file(file.rel_path, file.content,
                                  file.rel_path == main_rel, file.truncated);
        if (!file.truncated && is_valid_utf8(file.content)) {
            file.text = file.content;
        }
        pkg.files.push_back(std::move(file));
    }
    if (ec) {
        throw Error(ErrorCode::IoError, "cannot walk: " + dir);
    }

    std::sort(pkg.files.begin(), pkg.files.end(),
              [](const SkillFile& a, const SkillFile& b) { return a.rel_path < b.rel_path; });

    const SkillFile* main = pkg.find_file(main_rel);
    if (!main || !main->text) {
        throw Error(ErrorCode::MissingMainFile,
                    "main skill file unreadable as text: " + main_rel);
    }
    FrontmatterResult fm = parse_frontmatter(*main->text);
    pkg.manifest = fm.manifest;
    pkg.instruction_text = fm.body;

    // Identity: manifest author/name override the directory layout.
    fs::path abs = fs::absolute(root);
    pkg.id.slug = abs.filename().string();
    pkg.id.author = abs.parent_path().filename().string();
    if (auto a = pkg.manifest.get("author"); a && !a->empty()) pkg.id.author = *a;
    if (pkg.manifest.name && !pkg.manifest.name->empty()) pkg.id.slug = *pkg.manifest.name;
    if (auto v = pkg.manifest.get("version"); v && !v->empty()) pkg.id.version = *v;

    return pkg;
}

// ============================================================================
// Corpus
// ============================================================================

Corpus load_corpus(const std::string& root) {
    fs::path base(root);
    std::error_code ec;
    if (!fs::is_directory(base, ec)) {
        throw Error(ErrorCode::IoError, "corpus root unreadable: " + root);
    }

    Corpus corpus;
    corpus.root = root;

    std::vector<fs::path> candidates;
    for (const auto& author_entry : fs::directory_iterator(base, ec)) {
        if (!author_entry.is_directory()) continue;
        std::error_code inner;
        for (const auto& skill_entry :
             fs::directory_iterator(author_entry.path(), inner)) {
            if (skill_entry.is_directory()) candidates.push_back(skill_entry.path());
        }
    }
    if (ec) {
        throw Error(ErrorCode::IoError, "corpus root unreadable: " + root);
    }
    std::sort(candidates.begin(), candidates.end());

    for (const auto& dir : candidates) {
        try {
            corpus.skills.push_back(parse_skill_package(dir.string()));
        } catch (const Error& e) {
            corpus.skipped.emplace_back(dir.string(), error_code_name(e.code()));
        }
    }

    std::sort(corpus.skills.begin(), corpus.skills.end(),
              [](const SkillPackage& a, const SkillPackage& b) {
                  auto ka = std::make_pair(to_lower(a.id.author), to_lower(a.id.slug));
                  auto kb = std::make_pair(to_lower(b.id.author), to_lower(b.id.slug));
                  if (ka != kb) return ka < kb;
                  return a.source_path < b.source_path;
              });
    return corpus;
}

Corpus dedupe_corpus(const Corpus& corpus) {
    Corpus out;
    out.root = corpus.root;
    out.skipped = corpus.skipped;

    // First occurrence wins on version ties; greater version always replaces.
    std::map<std::string, size_t> chosen;
    for (const auto& skill : corpus.skills) {
        std::string key = skill.id.dedupe_key();
        auto it = chosen.find(key);
        if (it == chosen.end()) {
            out.skills.push_back(skill);
            chosen[key] = out.skills.size() - 1;
        } else if (version_less(out.skills[it->second].id.version, skill.id.version)) {
            out.skills[it->second] = skill;
        }
    }
    std::sort(out.skills.begin(), out.skills.end(),
              [](const SkillPackage& a, const SkillPackage& b) {
                  return std::make_pair(to_lower(a.id.author), to_lower(a.id.slug)) <
                         std::make_pair(to_lower(b.id.author), to_lower(b.id.slug));
              });
    return out;
}

}  // namespace skillscan
