#pragma once

#include <stdexcept>
#include <string>

namespace qtor {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter is malformed (bad dimensions, bad range, ...).
struct invalid_parameter : error {
    using error::error;
};

/// Two values from incompatible coefficient domains were combined.
struct domain_mismatch : error {
    using error::error;
};

/// Division by zero and similar scalar-arithmetic failures.
struct arithmetic_error : error {
    using error::error;
};

/// (q - eps) does not divide the given Laurent polynomial; in the
/// specialization machinery this signals a non-central element.
struct not_divisible : error {
    using error::error;
};

/// An exponent cannot be decomposed over the requested central lattice.
struct decomposition_error : error {
    using error::error;
};

/// A lattice pair does not form a finite-index sublattice extension.
struct invalid_extension : error {
    using error::error;
};

/// A putative derivation violates a defining relation of the algebra.
struct relation_violation : error {
    using error::error;
};

/// A configured resource cap (enumeration size, pair count, GB steps) was hit.
struct resource_limit : error {
    using error::error;
};

/// Text input could not be parsed.
struct parse_error : error {
    using error::error;
};

/// An internal invariant failed; always a bug, never user error.
struct internal_error : error {
    using error::error;
};

} // namespace qtor
