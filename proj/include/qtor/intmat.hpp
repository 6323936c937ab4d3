#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "qtor/rational.hpp"

namespace qtor {

using MatZ = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

inline VecZ to_vecz(const ExpVec& a) {
    VecZ v(static_cast<Eigen::Index>(a.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = a[static_cast<std::size_t>(i)];
    return v;
}

inline ExpVec to_expvec(const VecZ& v) {
    ExpVec a(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) a[static_cast<std::size_t>(i)] = v[i];
    return a;
}

/// Column-style Hermite normal form. Returns an n x r matrix (r = rank of m)
/// in lower echelon shape: each pivot row has a positive pivot, entries to the
/// left of a pivot are reduced into [0, pivot). Column operations only, so the
/// column lattice is preserved.
MatZ hermite_normal_form(const MatZ& m);

/// Solves h * x = a exactly for lower-triangular full-rank h; returns false if
/// no integer solution exists.
bool solve_lower_triangular(const MatZ& h, const VecZ& a, VecZ& x);

} // namespace qtor
