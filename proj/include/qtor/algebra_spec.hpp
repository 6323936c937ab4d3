#pragma once

#include <optional>
#include <vector>

#include "qtor/cyclotomic.hpp"
#include "qtor/intmat.hpp"

namespace qtor {

/// Exchange-matrix data for a single cluster seed: exchangeable indices
/// (0-based internally), the exchange matrix in column convention (N rows,
/// one column per exchangeable index), and the skew-symmetrizer diagonal.
struct ClusterData {
    std::vector<int> ex;
    MatZ btilde; // N x |ex|
    VecZ d;      // |ex|
};

/// Resource caps for the potentially combinatorial operations.
struct Caps {
    std::int64_t max_basis = 100000;   // center enumeration: ell^N must stay below
    int max_det = 12;                  // largest pairing-determinant size
    std::int64_t max_pairs = 200000;   // tuple pairs per discriminant-ideal level
    std::int64_t max_gb_steps = 100000;
};

/// Presentation of the mixed quantum torus / quantum affine space: rank N,
/// root-of-unity order ell, the integer lift matrix Lambda (skew-symmetric),
/// and the per-generator invertibility mask. Omega = Lambda mod ell drives
/// the specialized relations x_i x_j = eps^{Omega_ij} x_j x_i (i < j).
class AlgebraSpec {
public:
    AlgebraSpec(long rank, long ell, MatZ lambda, std::vector<bool> invertible,
                std::optional<ClusterData> cluster = std::nullopt, Caps caps = Caps{});

    long rank() const { return rank_; }
    long order() const { return ell_; }
    const MatZ& lambda() const { return lambda_; }
    MatZ omega() const;
    bool invertible(long i) const { return invertible_[static_cast<std::size_t>(i)]; }
    const std::vector<bool>& invertible_mask() const { return invertible_; }
    const std::optional<ClusterData>& cluster() const { return cluster_; }
    const Caps& caps() const { return caps_; }

    /// Normal-form twist exponent kappa(a, b) = sum_{i>j} a_i b_j Lambda_ij,
    /// so that x^a x^b = theta^kappa x^{a+b} with theta = eps or q.
    std::int64_t twist(const ExpVec& a, const ExpVec& b) const;

    /// Antisymmetrized pairing a^T Lambda b = twist(a,b) - twist(b,a).
    std::int64_t skew_form(const ExpVec& a, const ExpVec& b) const;

    CycScalar eps_pow(std::int64_t k) const { return CycScalar::eps_pow(ell_, k); }

    /// True when x^a satisfies the invertibility constraints of the algebra.
    bool exponent_allowed(const ExpVec& a) const;

private:
    long rank_;
    long ell_;
    MatZ lambda_;
    std::vector<bool> invertible_;
    std::optional<ClusterData> cluster_;
    Caps caps_;
};

/// ell-compatibility of an exchange matrix with a skew matrix mod ell:
/// btilde^T * omega == [diag(d) 0] mod ell, columns arranged with the
/// exchangeable indices first. btilde uses the column convention (N x |ex|).
bool ell_compatible(const MatZ& btilde, const MatZ& omega, const VecZ& d, long ell,
                    const std::vector<int>& ex);

/// Strictness: the same identity for the integer lift, exactly over Z.
bool strict_compatible(const MatZ& btilde, const MatZ& lambda, const VecZ& d,
                       const std::vector<int>& ex);

} // namespace qtor
