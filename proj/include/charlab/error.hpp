#pragma once

#include <stdexcept>
#include <string>

namespace charlab {

/// Error categories surfaced through the CLI as structured JSON.
enum class ErrorCategory {
    Domain,                   // input outside the operation's domain
    UnsupportedConfiguration, // valid input, but outside the implemented guard
    Resource,                 // configured cap exceeded
};

class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, std::string message, std::string field = {})
        : std::runtime_error(message), category_(cat), field_(std::move(field)) {}

    ErrorCategory category() const noexcept { return category_; }
    const std::string& field() const noexcept { return field_; }

    const char* category_name() const noexcept {
        switch (category_) {
            case ErrorCategory::Domain: return "domain";
            case ErrorCategory::UnsupportedConfiguration: return "unsupported-configuration";
            case ErrorCategory::Resource: return "resource";
        }
        return "unknown";
    }

private:
    ErrorCategory category_;
    std::string field_;
};

[[noreturn]] inline void throw_domain(const std::string& msg, const std::string& field = {}) {
    throw Error(ErrorCategory::Domain, msg, field);
}
[[noreturn]] inline void throw_unsupported(const std::string& msg, const std::string& field = {}) {
    throw Error(ErrorCategory::UnsupportedConfiguration, msg, field);
}
[[noreturn]] inline void throw_resource(const std::string& msg, const std::string& field = {}) {
    throw Error(ErrorCategory::Resource, msg, field);
}

} // namespace charlab
