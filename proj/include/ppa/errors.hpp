#pragma once

#include <stdexcept>
#include <string>

namespace ppa {

// Exit-code category carried by every library error. The CLI maps these
// directly onto its process exit status.
enum class ErrorKind {
    Validation = 2,  // malformed input, violated precondition
    Capacity = 3,    // enumeration cap or truncation bound exceeded
    Internal = 4,    // a uniqueness/existence guarantee failed: a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& code() const noexcept { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

inline Error validation_error(const std::string& code, const std::string& what) {
    return Error(ErrorKind::Validation, code, what);
}

inline Error capacity_error(const std::string& code, const std::string& what) {
    return Error(ErrorKind::Capacity, code, what);
}

inline Error internal_error(const std::string& code, const std::string& what) {
    return Error(ErrorKind::Internal, code, what);
}

}  // namespace ppa
