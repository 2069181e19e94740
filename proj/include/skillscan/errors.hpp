#pragma once

#include <stdexcept>
#include <string>

namespace skillscan {

enum class ErrorCode {
    FrontmatterMalformed,
    MissingMainFile,
    IoError,
    PathEscape,
    EmptyInput,
    EmptyCorpus,
    JudgeUnavailable,
    BenignLabel,
    UsageError,
};

/// Library-wide error type. The code carries the machine-checkable identity,
/// what() carries the human diagnostic.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::FrontmatterMalformed: return "FrontmatterMalformed";
        case ErrorCode::MissingMainFile: return "MissingMainFile";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::PathEscape: return "PathEscape";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::EmptyCorpus: return "EmptyCorpus";
        case ErrorCode::JudgeUnavailable: return "JudgeUnavailable";
        case ErrorCode::BenignLabel: return "BenignLabel";
        case ErrorCode::UsageError: return "UsageError";
    }
    return "Unknown";
}

}  // namespace skillscan
