#include "qtor/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace qtor {

namespace {

using ZPoly = std::vector<Integer>; // dense, ascending

ZPoly x_pow_minus_one(long n) {
    ZPoly p(static_cast<std::size_t>(n) + 1, Integer(0));
    p[0] = -1;
    p[p.size() - 1] = 1;
    return p;
}

void trim(ZPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

/// Exact division of integer polynomials with monic divisor.
ZPoly exact_div(ZPoly num, const ZPoly& den) {
    if (den.empty() || den.back() != 1) throw internal_error("exact_div: divisor not monic");
    if (num.size() < den.size()) throw internal_error("exact_div: degree underflow");
    ZPoly quot(num.size() - den.size() + 1, Integer(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        Integer c = num[k + den.size() - 1];
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    trim(num);
    if (!(num.size() == 1 && num[0] == 0)) throw internal_error("exact_div: nonzero remainder");
    return quot;
}

const ZPoly& cyclotomic_impl(long ell) {
    static std::map<long, ZPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(ell);
    if (it != cache.end()) return it->second;
    ZPoly phi;
    if (ell == 1) {
        phi = {Integer(-1), Integer(1)};
    } else {
        phi = x_pow_minus_one(ell);
        for (long d = 1; d < ell; ++d) {
            if (ell % d != 0) continue;
            // recursion depth is the divisor chain length; release the lock
            // is not needed because recursion re-enters through the cache
            // only for strictly smaller d which we compute inline here
            auto sub = cache.find(d);
            if (sub == cache.end()) {
                // compute Phi_d without recursing through the mutex
                ZPoly f = (d == 1) ? ZPoly{Integer(-1), Integer(1)} : x_pow_minus_one(d);
                if (d > 1) {
                    for (long e = 1; e < d; ++e) {
                        if (d % e != 0) continue;
                        f = exact_div(std::move(f), cache.at(e));
                    }
                }
                sub = cache.emplace(d, std::move(f)).first;
            }
            phi = exact_div(std::move(phi), sub->second);
        }
    }
    return cache.emplace(ell, std::move(phi)).first->second;
}

} // namespace

std::vector<Integer> cyclotomic_polynomial(long ell) {
    if (ell < 2) throw invalid_parameter("cyclotomic_polynomial: need ell >= 2");
    return cyclotomic_impl(ell);
}

CycField::CycField(long ell) : ell_(ell) {
    if (ell < 1) throw invalid_parameter("CycField: need ell >= 1");
    const ZPoly& phi = cyclotomic_impl(ell);
    deg_ = static_cast<long>(phi.size()) - 1;
    modulus_.reserve(phi.size());
    for (const auto& c : phi) modulus_.emplace_back(c);

    long maxpow = std::max({2 * deg_ - 2, ell_ - 1, deg_});
    power_rows_.resize(static_cast<std::size_t>(maxpow) + 1);
    for (long k = 0; k <= maxpow; ++k) {
        std::vector<Rational> row(static_cast<std::size_t>(deg_), Rational(0));
        if (k < deg_) {
            row[static_cast<std::size_t>(k)] = 1;
        } else {
            // t * previous row, folding t^deg = -(lower part of Phi)
            const auto& prev = power_rows_[static_cast<std::size_t>(k - 1)];
            Rational top = prev[static_cast<std::size_t>(deg_ - 1)];
            for (long j = deg_ - 1; j > 0; --j)
                row[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j - 1)];
            row[0] = 0;
            if (top != 0) {
                for (long j = 0; j < deg_; ++j)
                    row[static_cast<std::size_t>(j)] -= top * modulus_[static_cast<std::size_t>(j)];
            }
        }
        power_rows_[static_cast<std::size_t>(k)] = std::move(row);
    }
}

const CycField& CycField::get(long ell) {
    static std::map<long, std::unique_ptr<CycField>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(ell);
    if (it == cache.end())
        it = cache.emplace(ell, std::unique_ptr<CycField>(new CycField(ell))).first;
    return *it->second;
}

const std::vector<Rational>& CycField::eps_power(std::int64_t k) const {
    std::int64_t kk = k % ell_;
    if (kk < 0) kk += ell_;
    return power_rows_[static_cast<std::size_t>(kk)];
}

std::vector<Rational> CycField::reduce(const std::vector<Rational>& raw) const {
    std::vector<Rational> out(static_cast<std::size_t>(deg_), Rational(0));
    for (std::size_t k = 0; k < raw.size(); ++k) {
        if (raw[k] == 0) continue;
        if (k < static_cast<std::size_t>(deg_)) {
            out[k] += raw[k];
        } else {
            if (k >= power_rows_.size()) throw internal_error("CycField::reduce: power out of table range");
            const auto& row = power_rows_[k];
            for (long j = 0; j < deg_; ++j) out[static_cast<std::size_t>(j)] += raw[k] * row[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

CycScalar CycScalar::eps_pow(long ell, std::int64_t k) {
    if (ell < 1) throw invalid_parameter("eps_pow: need ell >= 1");
    const CycField& f = CycField::get(ell);
    return CycScalar(ell, f.eps_power(k));
}

CycScalar CycScalar::from_coeffs(long ell, std::vector<Rational> coeffs) {
    const CycField& f = CycField::get(ell);
    if (static_cast<long>(coeffs.size()) > f.degree())
        return CycScalar(ell, f.reduce(coeffs));
    coeffs.resize(static_cast<std::size_t>(f.degree()), Rational(0));
    return CycScalar(ell, std::move(coeffs));
}

bool CycScalar::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycScalar::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CycScalar::rational_value() const {
    if (!is_rational()) throw domain_mismatch("scalar is not rational");
    return c_[0];
}

void CycScalar::promote_to(long ell) {
    if (ell_ == ell) return;
    if (ell_ != 1) throw domain_mismatch("cannot mix scalars from different cyclotomic fields");
    Rational v = c_[0];
    const CycField& f = CycField::get(ell);
    c_.assign(static_cast<std::size_t>(f.degree()), Rational(0));
    c_[0] = v;
    ell_ = ell;
}

void CycScalar::align(CycScalar& a, CycScalar& b) {
    if (a.ell_ == b.ell_) return;
    if (a.ell_ == 1) a.promote_to(b.ell_);
    else if (b.ell_ == 1) b.promote_to(a.ell_);
    else throw domain_mismatch("cannot mix scalars from different cyclotomic fields");
}

CycScalar CycScalar::operator-() const {
    CycScalar r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    CycScalar rhs = o;
    align(*this, rhs);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
    CycScalar rhs = o;
    align(*this, rhs);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
    CycScalar rhs = o;
    align(*this, rhs);
    if (ell_ == 1) {
        c_[0] *= rhs.c_[0];
        return *this;
    }
    std::vector<Rational> conv(c_.size() + rhs.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
            if (rhs.c_[j] == 0) continue;
            conv[i + j] += c_[i] * rhs.c_[j];
        }
    }
    c_ = CycField::get(ell_).reduce(conv);
    return *this;
}

namespace {

using QPoly = std::vector<Rational>; // dense ascending

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qtrim(r);
    return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qtrim(a);
    return a;
}

/// a = q*b + r with deg r < deg b.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    qtrim(a);
    if (b.empty()) throw arithmetic_error("polynomial division by zero");
    QPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        qtrim(a);
        if (!a.empty() && a.size() >= b.size() && a.back() == 0) qtrim(a);
    }
    return {q, a};
}

} // namespace

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw arithmetic_error("division by zero scalar");
    if (ell_ == 1) return CycScalar(Rational(1) / c_[0]);
    // extended Euclid for gcd(a, Phi) = 1 over Q[t]
    const CycField& f = CycField::get(ell_);
    QPoly r0 = f.modulus();
    QPoly r1 = c_;
    qtrim(r1);
    QPoly s0 = {};            // coefficient of a in r0
    QPoly s1 = {Rational(1)}; // coefficient of a in r1
    while (!(r1.size() == 1)) {
        if (r1.empty()) throw internal_error("CycScalar::inverse: gcd degenerated");
        auto [q, r2] = qdivmod(r0, r1);
        QPoly s2 = qsub(s0, qmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant: a * s1 = r1 (mod Phi)
    Rational unit = r1[0];
    for (auto& c : s1) c /= unit;
    return from_coeffs(ell_, std::move(s1));
}

CycScalar& CycScalar::operator/=(const CycScalar& o) {
    CycScalar rhs = o;
    align(*this, rhs);
    return *this *= rhs.inverse();
}

bool operator==(const CycScalar& a, const CycScalar& b) {
    if (a.ell_ == b.ell_) return a.c_ == b.c_;
    CycScalar x = a, y = b;
    CycScalar::align(x, y);
    return x.c_ == y.c_;
}

CycScalar cyc_arith(const CycScalar& a, const CycScalar& b, CycOp op) {
    switch (op) {
        case CycOp::add: return a + b;
        case CycOp::sub: return a - b;
        case CycOp::mul: return a * b;
        case CycOp::div: return a / b;
    }
    throw invalid_parameter("cyc_arith: unknown op");
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw parse_error("empty rational");
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed rational: '" + text + "'");
    }
}

} // namespace qtor
