#include "qtor/derivation.hpp"

#include "qtor/io.hpp"

namespace qtor {

Derivation Derivation::grading(const AlgebraSpec& spec) {
    std::vector<TorusSpec> im;
    im.reserve(static_cast<std::size_t>(spec.rank()));
    for (long i = 0; i < spec.rank(); ++i) {
        ExpVec e(static_cast<std::size_t>(spec.rank()), 0);
        e[static_cast<std::size_t>(i)] = 1;
        im.push_back(TorusSpec::monomial(std::move(e)));
    }
    return Derivation(std::move(im));
}

Derivation Derivation::diagonal(const AlgebraSpec& spec, std::vector<CycScalar> mu) {
    if (static_cast<long>(mu.size()) != spec.rank())
        throw invalid_parameter("Derivation::diagonal: weight count mismatch");
    std::vector<TorusSpec> im;
    im.reserve(mu.size());
    for (long i = 0; i < spec.rank(); ++i) {
        ExpVec e(static_cast<std::size_t>(spec.rank()), 0);
        e[static_cast<std::size_t>(i)] = 1;
        im.push_back(TorusSpec::monomial(std::move(e), mu[static_cast<std::size_t>(i)]));
    }
    return Derivation(std::move(im));
}

Derivation Derivation::inner(const TorusSpec& r, const AlgebraSpec& spec) {
    std::vector<TorusSpec> im;
    im.reserve(static_cast<std::size_t>(spec.rank()));
    for (long i = 0; i < spec.rank(); ++i) {
        ExpVec e(static_cast<std::size_t>(spec.rank()), 0);
        e[static_cast<std::size_t>(i)] = 1;
        im.push_back(commutator(r, TorusSpec::monomial(std::move(e)), spec));
    }
    return Derivation(std::move(im));
}

Derivation& Derivation::operator+=(const Derivation& o) {
    if (images_.size() != o.images_.size())
        throw invalid_parameter("Derivation: rank mismatch in sum");
    for (std::size_t i = 0; i < images_.size(); ++i) images_[i] += o.images_[i];
    return *this;
}

Derivation& Derivation::operator*=(const CycScalar& s) {
    for (auto& im : images_) im *= s;
    return *this;
}

namespace {

TorusSpec generator_monomial(const AlgebraSpec& spec, long i, std::int64_t e = 1) {
    ExpVec a(static_cast<std::size_t>(spec.rank()), 0);
    a[static_cast<std::size_t>(i)] = e;
    return TorusSpec::monomial(std::move(a));
}

/// delta(x_i^m) for m != 0, via delta(y^{-k}) = -y^{-k} delta(y^k) y^{-k}.
TorusSpec derive_generator_power(const Derivation& d, const AlgebraSpec& spec, long i,
                                 std::int64_t m) {
    if (m == 0) return {};
    const TorusSpec& di = d.image(i);
    if (m > 0) {
        TorusSpec acc;
        for (std::int64_t t = 0; t < m; ++t) {
            TorusSpec part = multiply(generator_monomial(spec, i, t), di, spec);
            part = multiply(part, generator_monomial(spec, i, m - 1 - t), spec);
            acc += part;
        }
        return acc;
    }
    if (!spec.invertible(i))
        throw decomposition_error("derivation applied to negative power of a non-inverted generator");
    TorusSpec pos = derive_generator_power(d, spec, i, -m);
    TorusSpec neg = generator_monomial(spec, i, m);
    return -multiply(multiply(neg, pos, spec), neg, spec);
}

} // namespace

TorusSpec apply_derivation(const Derivation& d, const TorusSpec& r, const AlgebraSpec& spec) {
    if (d.rank() != spec.rank()) throw invalid_parameter("apply_derivation: rank mismatch");
    TorusSpec out;
    for (const auto& [a, coeff] : r.terms()) {
        for (long i = 0; i < spec.rank(); ++i) {
            const std::int64_t ai = a[static_cast<std::size_t>(i)];
            if (ai == 0 || d.image(i).is_zero()) continue;
            // prefix x_1^{a_1} ... x_{i-1}^{a_{i-1}} and suffix beyond i
            ExpVec pre(static_cast<std::size_t>(spec.rank()), 0);
            ExpVec post(static_cast<std::size_t>(spec.rank()), 0);
            for (long j = 0; j < i; ++j) pre[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)];
            for (long j = i + 1; j < spec.rank(); ++j) post[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)];
            TorusSpec mid = derive_generator_power(d, spec, i, ai);
            TorusSpec part = multiply(TorusSpec::monomial(pre), mid, spec);
            part = multiply(part, TorusSpec::monomial(post), spec);
            out += part * coeff;
        }
    }
    return out;
}

Report check_derivation(const Derivation& d, const AlgebraSpec& spec) {
    Report rep("check_derivation");
    if (d.rank() != spec.rank()) throw invalid_parameter("check_derivation: rank mismatch");
    const MatZ omega = spec.omega();
    for (long i = 0; i < spec.rank(); ++i)
        for (long j = i + 1; j < spec.rank(); ++j) {
            ++rep.cases;
            TorusSpec xi = generator_monomial(spec, i);
            TorusSpec xj = generator_monomial(spec, j);
            const CycScalar w = spec.eps_pow(omega(i, j));
            // Leibniz expansion of delta(x_i x_j - eps^{Omega_ij} x_j x_i)
            TorusSpec defect = multiply(d.image(i), xj, spec) + multiply(xi, d.image(j), spec) -
                               (multiply(d.image(j), xi, spec) + multiply(xj, d.image(i), spec)) * w;
            if (!defect.is_zero()) {
                Json detail;
                detail["pair"] = {i + 1, j + 1};
                detail["defect"] = render_element(defect);
                rep.fail("relation not preserved", detail);
            }
        }
    return rep;
}

void ensure_consistent(const Derivation& d, const AlgebraSpec& spec) {
    Report rep = check_derivation(d, spec);
    if (!rep.passed())
        throw relation_violation("derivation violates relation: " +
                                 rep.witnesses.front().detail.dump());
}

} // namespace qtor
