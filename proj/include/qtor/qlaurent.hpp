#pragma once

#include <cstdint>
#include <map>

#include "qtor/cyclotomic.hpp"

namespace qtor {

/// Laurent polynomial in the deformation parameter q with CycScalar
/// coefficients. No zero coefficients are stored; the map keeps terms in
/// canonical exponent order.
class QLaurent {
public:
    QLaurent() = default;
    QLaurent(long v) { add_term(0, CycScalar(v)); }                 // NOLINT(google-explicit-constructor)
    QLaurent(const CycScalar& c) { add_term(0, c); }                // NOLINT(google-explicit-constructor)

    static QLaurent q_power(std::int64_t k, CycScalar coeff = CycScalar(1)) {
        QLaurent p;
        p.add_term(k, std::move(coeff));
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    const std::map<std::int64_t, CycScalar>& terms() const { return t_; }

    void add_term(std::int64_t k, CycScalar c);

    QLaurent operator-() const;
    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    QLaurent& operator*=(const QLaurent& o);

    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    friend QLaurent operator*(QLaurent a, const QLaurent& b) { return a *= b; }

    friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.t_ == b.t_; }
    friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }

private:
    std::map<std::int64_t, CycScalar> t_;
};

/// Substitutes q = eps (the primitive ell-th root of unity) and reduces.
CycScalar eval_at_eps(const QLaurent& p, long ell);

/// Exact quotient p / (q - eps). Requires p(eps) = 0; otherwise throws
/// not_divisible. The quotient is canonical: the minimal q-power of p is
/// cleared first, the polynomial part is divided synthetically, and the
/// power is restored.
QLaurent divide_by_q_minus_eps(const QLaurent& p, long ell);

} // namespace qtor
