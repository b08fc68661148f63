#pragma once

#include <stdexcept>
#include <string>

namespace gft {

enum class ErrorKind {
    degree_mismatch,
    singular_division,
    branch_anchor,
    normalization,
    catalog,
    domain,
    singular_sample,
    branch_tracking,
    quadrature,
    analysis,
    usage,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every exception thrown by the library. The kind lets callers
/// (notably the CLI exit-code mapping) dispatch without RTTI chains.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Usage and configuration problems, as opposed to numerical failures.
    bool is_usage() const noexcept {
        return kind_ == ErrorKind::usage || kind_ == ErrorKind::catalog ||
               kind_ == ErrorKind::domain;
    }

private:
    ErrorKind kind_;
};

}  // namespace gft
