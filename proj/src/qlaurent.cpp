#include "qtor/qlaurent.hpp"

#include <vector>

namespace qtor {

void QLaurent::add_term(std::int64_t k, CycScalar c) {
    if (c.is_zero()) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, std::move(c));
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

QLaurent QLaurent::operator-() const {
    QLaurent r;
    for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
    for (const auto& [k, c] : o.t_) add_term(k, -c);
    return *this;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) {
    QLaurent r;
    for (const auto& [ka, ca] : t_)
        for (const auto& [kb, cb] : o.t_) r.add_term(ka + kb, ca * cb);
    t_ = std::move(r.t_);
    return *this;
}

CycScalar eval_at_eps(const QLaurent& p, long ell) {
    CycScalar v(0);
    for (const auto& [k, c] : p.terms()) v += c * CycScalar::eps_pow(ell, k);
    return v;
}

QLaurent divide_by_q_minus_eps(const QLaurent& p, long ell) {
    if (p.is_zero()) return {};
    const std::int64_t lo = p.terms().begin()->first;
    const std::int64_t hi = p.terms().rbegin()->first;
    const std::size_t deg = static_cast<std::size_t>(hi - lo);
    std::vector<CycScalar> c(deg + 1, CycScalar(0));
    for (const auto& [k, coeff] : p.terms()) c[static_cast<std::size_t>(k - lo)] = coeff;

    if (deg == 0) throw not_divisible("element does not vanish at q = eps");

    const CycScalar eps = CycScalar::eps(ell);
    // synthetic division of the cleared polynomial by (q - eps)
    std::vector<CycScalar> h(deg, CycScalar(0));
    h[deg - 1] = c[deg];
    for (std::size_t k = deg - 1; k >= 1; --k) h[k - 1] = c[k] + eps * h[k];
    CycScalar rem = c[0] + eps * h[0];
    if (!rem.is_zero()) throw not_divisible("element does not vanish at q = eps");

    QLaurent out;
    for (std::size_t k = 0; k < h.size(); ++k)
        out.add_term(lo + static_cast<std::int64_t>(k), h[k]);
    return out;
}

} // namespace qtor
