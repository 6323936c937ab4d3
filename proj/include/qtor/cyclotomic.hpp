#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qtor/rational.hpp"

namespace qtor {

/// Coefficients of the ell-th cyclotomic polynomial Phi_ell, ascending, monic.
/// Requires ell >= 2.
std::vector<Integer> cyclotomic_polynomial(long ell);

/// Shared immutable data for Q(eps) with eps a primitive ell-th root of unity:
/// the modulus Phi_ell and the reduction table for powers of eps.
///
/// ell = 1 is supported internally and denotes the rationals (eps = 1); the
/// public cyclotomic_polynomial still rejects ell < 2 as the spec of Phi.
class CycField {
public:
    static const CycField& get(long ell);

    long order() const { return ell_; }
    long degree() const { return deg_; }

    /// Phi_ell as rationals, ascending, monic, size degree()+1.
    const std::vector<Rational>& modulus() const { return modulus_; }

    /// eps^k reduced to the power basis, for any integer k (taken mod ell).
    const std::vector<Rational>& eps_power(std::int64_t k) const;

    /// Reduces an arbitrary-degree coefficient vector modulo Phi_ell down to
    /// length degree().
    std::vector<Rational> reduce(const std::vector<Rational>& raw) const;

private:
    explicit CycField(long ell);

    long ell_;
    long deg_;
    std::vector<Rational> modulus_;
    // row k = t^k mod Phi_ell for k in [0, max(2*deg-2, ell-1)]
    std::vector<std::vector<Rational>> power_rows_;
};

/// An element of Q(eps), stored as exact rational coefficients over the power
/// basis 1, eps, ..., eps^{phi(ell)-1}. Always reduced mod Phi_ell, so value
/// equality is coefficient equality. Elements with order 1 are plain
/// rationals and promote silently when combined with any other order.
class CycScalar {
public:
    CycScalar() : ell_(1), c_(1, Rational(0)) {}
    CycScalar(long v) : ell_(1), c_(1, Rational(v)) {}         // NOLINT(google-explicit-constructor)
    CycScalar(const Rational& v) : ell_(1), c_(1, v) {}        // NOLINT(google-explicit-constructor)

    static CycScalar eps(long ell) { return eps_pow(ell, 1); }
    static CycScalar eps_pow(long ell, std::int64_t k);
    /// Builds from power-basis coefficients; pads/validates against phi(ell).
    static CycScalar from_coeffs(long ell, std::vector<Rational> coeffs);

    long order() const { return ell_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;       // all coefficients beyond the constant vanish
    Rational rational_value() const; // throws domain_mismatch if not rational

    CycScalar operator-() const;
    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    CycScalar& operator/=(const CycScalar& o);

    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }

    CycScalar inverse() const;

    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

private:
    CycScalar(long ell, std::vector<Rational> c) : ell_(ell), c_(std::move(c)) {}

    /// Promotes *this in place to the field of order ell (from order 1).
    void promote_to(long ell);
    static void align(CycScalar& a, CycScalar& b);

    long ell_;
    std::vector<Rational> c_;
};

/// cyc_arith from the module contract: dispatches on an op tag. The operators
/// above are the idiomatic surface; this exists for symmetry with the text
/// interface.
enum class CycOp { add, sub, mul, div };
CycScalar cyc_arith(const CycScalar& a, const CycScalar& b, CycOp op);

} // namespace qtor
