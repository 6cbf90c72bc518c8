#pragma once

/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by every gca module.
 *
 * Errors that can only be raised by a defect in the engine (non-exact
 * division along a mutation path, a non-homogeneous X-function, ...) are
 * kept as distinct types so tests can assert they never fire.
 */

#include <stdexcept>
#include <string>

namespace gca {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live over different generator sets or ranks.
struct dimension_error : error {
    using error::error;
};

struct argument_error : error {
    using error::error;
};

/// A division that must be exact in the Laurent ring was not.
struct not_laurent : error {
    using error::error;
};

struct not_skew_symmetrizable : error {
    using error::error;
};

struct evaluation_error : error {
    using error::error;
};

struct non_monomial_coefficient : error {
    using error::error;
};

struct not_homogeneous : error {
    using error::error;
};

struct negative_coefficient_exponent : error {
    using error::error;
};

/// Two seeds with the same cluster disagree on transported y, B, r or z.
struct inconsistent_degree_transport : error {
    using error::error;
};

struct incompatible_initial_data : error {
    using error::error;
};

struct unknown_variable : error {
    using error::error;
};

/// A fixed-width integer result (matrix entry, exponent) left its range.
struct overflow_error : error {
    using error::error;
};

/// Configuration rejected; `field()` is a JSON-pointer-like path.
class config_error : public error {
public:
    config_error(std::string field, std::string message)
        : error(field.empty() ? message : field + ": " + message), field_(std::move(field)), message_(std::move(message)) {}

    const std::string& field() const noexcept { return field_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string field_;
    std::string message_;
};

}  // namespace gca
