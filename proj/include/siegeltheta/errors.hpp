#pragma once

#include <stdexcept>
#include <string>

namespace siegeltheta {

// Im(tau) failed the positive-definiteness test.
struct non_positive_definite : std::domain_error {
    using std::domain_error::domain_error;
};

// Operation restricted to a specific genus was called with another one.
struct wrong_genus : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested genus has no implementation.
struct unsupported_genus : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// det(C*tau + D) is numerically singular.
struct singular_factor : std::domain_error {
    using std::domain_error::domain_error;
};

// Epstein zeta evaluated too close to the pole s = 1.
struct pole_at_one : std::domain_error {
    using std::domain_error::domain_error;
};

// tau sits on (or too close to) the vanishing locus of chi_g.
struct on_discriminant_locus : std::domain_error {
    using std::domain_error::domain_error;
};

// A projective orbit collapsed: two members coincide.
struct degenerate_orbit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Strict mode: the truncation radius cap was hit before reaching the target.
struct tolerance_unreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text; carries the offending position.
struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

} // namespace siegeltheta
