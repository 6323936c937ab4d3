#pragma once

#include <string>
#include <vector>

#include "qtor/cpoly.hpp"
#include "qtor/report.hpp"
#include "qtor/torus.hpp"

namespace qtor {

/// Canonical text form of a scalar: rational-coefficient polynomial in the
/// token `e`, e.g. "-1 - e", "3/2*e^2 + 1".
std::string render_scalar(const CycScalar& s);

/// Parses the same syntax; ell fixes the field (pass 1 for plain rationals).
CycScalar parse_scalar(const std::string& text, long ell);

/// Canonical text form of an element: terms sorted lexicographically by
/// exponent vector, each rendered `coef * x1^a1 x2^a2 ...`. Compound scalar
/// coefficients are parenthesized.
std::string render_element(const TorusSpec& e);

/// Parses signed sums of `coef * x<i>^<int>` products (the grammar of the
/// compute subcommand). Validates generator indices and the invertibility
/// mask against the spec.
TorusSpec parse_element(const std::string& text, const AlgebraSpec& spec);

/// Polynomial text over named variables, terms in descending degrevlex.
std::string render_poly(const CPoly& p, const std::vector<std::string>& vars);

CPoly parse_poly(const std::string& text, const std::vector<std::string>& vars, long ell);

/// JSON element form: list of {exponents, coef} with coef the power-basis
/// coefficient strings.
Json element_to_json(const TorusSpec& e);
TorusSpec element_from_json(const Json& j, const AlgebraSpec& spec);

Json scalar_to_json(const CycScalar& s);

/// Default central variable names: u, v, w for up to three, u1..um beyond.
std::vector<std::string> central_variable_names(std::size_t count);

} // namespace qtor
