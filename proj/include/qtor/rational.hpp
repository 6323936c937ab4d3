#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qtor/errors.hpp"

namespace qtor {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exponent vector of a normal-form monomial (length = algebra rank) or of a
/// commutative monomial (length = number of central variables).
using ExpVec = std::vector<std::int64_t>;

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p", "-p" or "p/q". Throws parse_error on malformed input.
Rational parse_rational(const std::string& text);

/// Floor division for possibly negative numerators, positive divisor.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline ExpVec add_exp(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size()) throw invalid_parameter("exponent vectors of different rank");
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline ExpVec sub_exp(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size()) throw invalid_parameter("exponent vectors of different rank");
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline std::int64_t total_degree(const ExpVec& a) {
    std::int64_t d = 0;
    for (auto v : a) d += v;
    return d;
}

} // namespace qtor
