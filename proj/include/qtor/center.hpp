#pragma once

#include <vector>

#include "qtor/torus.hpp"

namespace qtor {

/// True iff the monomial x^a is central: Omega a == 0 mod ell.
bool is_central_exponent(const ExpVec& a, const AlgebraSpec& spec);

/// An element is central iff every monomial of it is (distinct normal-form
/// monomials are linearly independent).
template <class Coeff>
bool is_central(const TorusElement<Coeff>& e, const AlgebraSpec& spec) {
    for (const auto& [a, c] : e.terms())
        if (!is_central_exponent(a, spec)) return false;
    return true;
}

/// K = { a mod ell : Omega a == 0 mod ell }, enumerated over [0, ell)^N and
/// returned sorted. Asserts that K is a subgroup; throws resource_limit when
/// ell^N exceeds the configured cap.
std::vector<ExpVec> center_lattice(const AlgebraSpec& spec);

/// PI degree n = sqrt(ell^N / |K|); the quotient is always a perfect square,
/// anything else is an internal invariant violation.
long pi_degree(const AlgebraSpec& spec);

/// HNF basis (N x N, lower triangular) of the full central exponent lattice
/// { a in Z^N : Omega a == 0 mod ell }.
MatZ center_lattice_basis(const AlgebraSpec& spec);

} // namespace qtor
