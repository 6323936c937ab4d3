#include "qtor/cpoly.hpp"

namespace qtor {

std::int64_t CPoly::degree() const {
    if (t_.empty()) return -1;
    std::int64_t d = 0;
    for (auto v : t_.rbegin()->first) d += v;
    return d;
}

void CPoly::add_term(ExpVec a, CycScalar c) {
    if (c.is_zero()) return;
    if (!t_.empty() && t_.begin()->first.size() != a.size())
        throw invalid_parameter("CPoly: variable count mismatch");
    auto it = t_.find(a);
    if (it == t_.end()) {
        t_.emplace(std::move(a), std::move(c));
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

CPoly CPoly::operator-() const {
    CPoly r;
    for (const auto& [a, c] : t_) r.t_.emplace(a, -c);
    return r;
}

CPoly& CPoly::operator+=(const CPoly& o) {
    for (const auto& [a, c] : o.t_) add_term(a, c);
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
    for (const auto& [a, c] : o.t_) add_term(a, -c);
    return *this;
}

CPoly& CPoly::operator*=(const CPoly& o) {
    CPoly r;
    for (const auto& [a, ca] : t_)
        for (const auto& [b, cb] : o.t_) r.add_term(add_exp(a, b), ca * cb);
    t_ = std::move(r.t_);
    return *this;
}

CPoly& CPoly::operator*=(const CycScalar& s) {
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [a, c] : t_) c *= s;
    return *this;
}

CPoly CPoly::monic() const {
    if (t_.empty()) return {};
    CPoly r = *this;
    r *= leading().second.inverse();
    return r;
}

bool poly_less(const CPoly& a, const CPoly& b) {
    auto ia = a.terms().rbegin(), ea = a.terms().rend();
    auto ib = b.terms().rbegin(), eb = b.terms().rend();
    DegRevLexLess less;
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (less(ia->first, ib->first)) return true;
        if (less(ib->first, ia->first)) return false;
        // same monomial: compare coefficient vectors lexicographically
        const auto& ca = ia->second.coeffs();
        const auto& cb = ib->second.coeffs();
        if (ca != cb) return ca < cb;
    }
    return ia == ea && ib != eb;
}

bool monomial_divides(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

CPoly exact_divide(const CPoly& f, const CPoly& g) {
    if (g.is_zero()) throw arithmetic_error("exact_divide: division by zero polynomial");
    CPoly rem = f;
    CPoly quot;
    const auto& [lg, cg] = g.leading();
    while (!rem.is_zero()) {
        const auto& [lr, cr] = rem.leading();
        if (!monomial_divides(lg, lr))
            throw internal_error("exact_divide: nonzero remainder");
        ExpVec m = sub_exp(lr, lg);
        CycScalar c = cr / cg;
        CPoly t = CPoly::monomial(m, c);
        quot += t;
        rem -= t * g;
    }
    return quot;
}

} // namespace qtor
