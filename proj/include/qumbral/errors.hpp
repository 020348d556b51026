#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qumbral {

/// Base class of every error thrown by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A psi table violates admissibility (psi_0 != 1, or a zero entry).
class not_admissible : public error {
public:
    using error::error;
};

/// A polynomial sequence violates normality (deg q_n != n, q_0 != 1, q_n(0) != 0).
class invalid_basis : public error {
public:
    using error::error;
};

/// Component caps do not cover the requested context cap.
class cap_mismatch : public error {
public:
    using error::error;
};

/// An operation would need degrees beyond the context cap.
class degree_overflow : public error {
public:
    using error::error;
};

/// Requested expansion order exceeds what the context cap allows.
class order_overflow : public error {
public:
    using error::error;
};

/// Index outside a table's stored range.
class out_of_range : public error {
public:
    using error::error;
};

/// An operator table handed to basic_from_operator is not degree-lowering.
class not_degree_lowering : public error {
public:
    using error::error;
};

/// The triangular reconstruction system is inconsistent.
class unsolvable : public error {
public:
    using error::error;
};

/// Division by zero or a similarly undefined scalar operation.
class arithmetic_error : public error {
public:
    using error::error;
};

/// Malformed expression text; carries the byte offset of the problem.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace qumbral
