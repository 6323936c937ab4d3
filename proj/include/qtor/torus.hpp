#pragma once

#include <map>

#include "qtor/algebra_spec.hpp"
#include "qtor/qlaurent.hpp"

namespace qtor {

/// A finite sum of normal-form monomials x^a, a in Z^N, with coefficients in
/// either Q(eps) (the specialized algebra) or Q(eps)[q^{+-1}] (the
/// one-parameter lift). The coefficient domain is the template parameter, so
/// mixing domains is a type error rather than a runtime one. No zero
/// coefficients are stored and terms are kept in lexicographic exponent order.
template <class Coeff>
class TorusElement {
public:
    using coeff_type = Coeff;

    TorusElement() = default;

    static TorusElement monomial(ExpVec a, Coeff c = Coeff(1)) {
        TorusElement e;
        e.add_term(std::move(a), std::move(c));
        return e;
    }

    static TorusElement constant(long rank, Coeff c) {
        return monomial(ExpVec(static_cast<std::size_t>(rank), 0), std::move(c));
    }

    static TorusElement one(long rank) { return constant(rank, Coeff(1)); }

    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const std::map<ExpVec, Coeff>& terms() const { return t_; }

    void add_term(ExpVec a, Coeff c) {
        if (c == Coeff(0)) return;
        if (!t_.empty() && t_.begin()->first.size() != a.size())
            throw invalid_parameter("TorusElement: exponent rank mismatch");
        auto it = t_.find(a);
        if (it == t_.end()) {
            t_.emplace(std::move(a), std::move(c));
            return;
        }
        it->second += c;
        if (it->second == Coeff(0)) t_.erase(it);
    }

    TorusElement operator-() const {
        TorusElement r;
        for (const auto& [a, c] : t_) r.t_.emplace(a, -c);
        return r;
    }

    TorusElement& operator+=(const TorusElement& o) {
        for (const auto& [a, c] : o.t_) add_term(a, c);
        return *this;
    }
    TorusElement& operator-=(const TorusElement& o) {
        for (const auto& [a, c] : o.t_) add_term(a, -c);
        return *this;
    }
    TorusElement& operator*=(const Coeff& s) {
        if (s == Coeff(0)) {
            t_.clear();
            return *this;
        }
        for (auto& [a, c] : t_) c *= s;
        return *this;
    }

    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
    friend TorusElement operator*(TorusElement a, const Coeff& s) { return a *= s; }
    friend TorusElement operator*(const Coeff& s, TorusElement a) { return a *= s; }

    friend bool operator==(const TorusElement& a, const TorusElement& b) { return a.t_ == b.t_; }
    friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }

private:
    std::map<ExpVec, Coeff> t_;
};

using TorusSpec = TorusElement<CycScalar>; // specialized algebra, q = eps
using TorusLift = TorusElement<QLaurent>;  // one-parameter lift over q

namespace detail {
inline CycScalar theta_power(const AlgebraSpec& spec, std::int64_t k, const CycScalar*) {
    return spec.eps_pow(k);
}
inline QLaurent theta_power(const AlgebraSpec&, std::int64_t k, const QLaurent*) {
    return QLaurent::q_power(k);
}
} // namespace detail

/// Normal-form product: x^a x^b = theta^{kappa(a,b)} x^{a+b} extended
/// bilinearly, theta = eps in the specialized algebra and q in the lift.
template <class Coeff>
TorusElement<Coeff> multiply(const TorusElement<Coeff>& a, const TorusElement<Coeff>& b,
                             const AlgebraSpec& spec) {
    TorusElement<Coeff> r;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            const std::int64_t k = spec.twist(ea, eb);
            Coeff c = ca * cb * detail::theta_power(spec, k, static_cast<const Coeff*>(nullptr));
            r.add_term(add_exp(ea, eb), std::move(c));
        }
    return r;
}

template <class Coeff>
TorusElement<Coeff> commutator(const TorusElement<Coeff>& a, const TorusElement<Coeff>& b,
                               const AlgebraSpec& spec) {
    return multiply(a, b, spec) - multiply(b, a, spec);
}

template <class Coeff>
TorusElement<Coeff> power(const TorusElement<Coeff>& a, long k, const AlgebraSpec& spec) {
    if (k < 0) throw invalid_parameter("power: negative exponent on a general element");
    TorusElement<Coeff> r = TorusElement<Coeff>::one(spec.rank());
    for (long i = 0; i < k; ++i) r = multiply(r, a, spec);
    return r;
}

/// Monomial-wise lift into the q-algebra: coefficients become q-degree-zero
/// Laurent polynomials, exponents are unchanged.
inline TorusLift lift(const TorusSpec& e) {
    TorusLift r;
    for (const auto& [a, c] : e.terms()) r.add_term(a, QLaurent(c));
    return r;
}

/// Specialization q -> eps on coefficients.
inline TorusSpec specialize(const TorusLift& e, long ell) {
    TorusSpec r;
    for (const auto& [a, c] : e.terms()) r.add_term(a, eval_at_eps(c, ell));
    return r;
}

/// True when every stored exponent satisfies the invertibility constraints.
template <class Coeff>
bool respects_mask(const TorusElement<Coeff>& e, const AlgebraSpec& spec) {
    for (const auto& [a, c] : e.terms())
        if (!spec.exponent_allowed(a)) return false;
    return true;
}

} // namespace qtor
