#pragma once

#include <map>

#include "qtor/cyclotomic.hpp"

namespace qtor {

/// Degrevlex term order on exponent vectors (variable 0 largest): higher
/// total degree wins; ties break by the rightmost differing entry, smaller
/// entry winning.
struct DegRevLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        std::int64_t da = 0, db = 0;
        for (auto v : a) da += v;
        for (auto v : b) db += v;
        if (da != db) return da < db;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

/// Commutative polynomial over Q(eps) in the central lattice variables,
/// canonical under degrevlex. The zero polynomial is the empty term map.
class CPoly {
public:
    using TermMap = std::map<ExpVec, CycScalar, DegRevLexLess>;

    CPoly() = default;
    CPoly(long v) {                 // NOLINT(google-explicit-constructor)
        if (v != 0) t_.emplace(ExpVec{}, CycScalar(v));
    }

    static CPoly monomial(ExpVec a, CycScalar c = CycScalar(1)) {
        CPoly p;
        p.add_term(std::move(a), std::move(c));
        return p;
    }
    static CPoly constant(std::size_t nvars, CycScalar c) {
        return monomial(ExpVec(nvars, 0), std::move(c));
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const TermMap& terms() const { return t_; }

    /// Leading term under degrevlex; polynomial must be nonzero.
    const std::pair<const ExpVec, CycScalar>& leading() const {
        if (t_.empty()) throw invalid_parameter("leading term of zero polynomial");
        return *t_.rbegin();
    }

    std::int64_t degree() const; // total degree, -1 for zero

    void add_term(ExpVec a, CycScalar c);

    CPoly operator-() const;
    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    CPoly& operator*=(const CPoly& o);
    CPoly& operator*=(const CycScalar& s);

    friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
    friend CPoly operator*(CPoly a, const CPoly& b) { return a *= b; }
    friend CPoly operator*(CPoly a, const CycScalar& s) { return a *= s; }
    friend CPoly operator*(const CycScalar& s, CPoly a) { return a *= s; }

    friend bool operator==(const CPoly& a, const CPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const CPoly& a, const CPoly& b) { return !(a == b); }

    /// Scaled so the leading coefficient is 1.
    CPoly monic() const;

private:
    TermMap t_;
};

/// Total order on polynomials for deterministic generator lists: leading term
/// first, then term-by-term.
bool poly_less(const CPoly& a, const CPoly& b);

/// Exact quotient f / g; throws internal_error when g does not divide f.
CPoly exact_divide(const CPoly& f, const CPoly& g);

bool monomial_divides(const ExpVec& a, const ExpVec& b); // a | b componentwise

} // namespace qtor
