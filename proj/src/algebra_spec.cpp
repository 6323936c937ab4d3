#include "qtor/algebra_spec.hpp"

#include <algorithm>
#include <set>

namespace qtor {

AlgebraSpec::AlgebraSpec(long rank, long ell, MatZ lambda, std::vector<bool> invertible,
                         std::optional<ClusterData> cluster, Caps caps)
    : rank_(rank), ell_(ell), lambda_(std::move(lambda)), invertible_(std::move(invertible)),
      cluster_(std::move(cluster)), caps_(caps) {
    if (rank_ < 1) throw invalid_parameter("AlgebraSpec: rank must be positive");
    if (ell_ < 1) throw invalid_parameter("AlgebraSpec: ell must be positive");
    if (lambda_.rows() != rank_ || lambda_.cols() != rank_)
        throw invalid_parameter("AlgebraSpec: lambda must be rank x rank");
    if (!(lambda_ + lambda_.transpose()).isZero())
        throw invalid_parameter("AlgebraSpec: lambda must be skew-symmetric");
    if (static_cast<long>(invertible_.size()) != rank_)
        throw invalid_parameter("AlgebraSpec: invertibility mask size mismatch");
    if (cluster_) {
        std::set<int> seen;
        for (int i : cluster_->ex) {
            if (i < 0 || i >= rank_) throw invalid_parameter("AlgebraSpec: exchangeable index out of range");
            if (!seen.insert(i).second) throw invalid_parameter("AlgebraSpec: duplicate exchangeable index");
        }
        const auto e = static_cast<Eigen::Index>(cluster_->ex.size());
        if (cluster_->btilde.rows() != rank_ || cluster_->btilde.cols() != e)
            throw invalid_parameter("AlgebraSpec: btilde must be rank x |ex|");
        if (cluster_->d.size() != e)
            throw invalid_parameter("AlgebraSpec: d must have one entry per exchangeable index");
        for (Eigen::Index i = 0; i < e; ++i)
            if (cluster_->d[i] <= 0) throw invalid_parameter("AlgebraSpec: d entries must be positive");
    }
}

MatZ AlgebraSpec::omega() const {
    MatZ o = lambda_;
    for (Eigen::Index i = 0; i < o.rows(); ++i)
        for (Eigen::Index j = 0; j < o.cols(); ++j) {
            std::int64_t v = o(i, j) % ell_;
            if (v < 0) v += ell_;
            o(i, j) = v;
        }
    return o;
}

std::int64_t AlgebraSpec::twist(const ExpVec& a, const ExpVec& b) const {
    if (static_cast<long>(a.size()) != rank_ || static_cast<long>(b.size()) != rank_)
        throw invalid_parameter("twist: exponent rank mismatch");
    std::int64_t k = 0;
    for (long i = 1; i < rank_; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (long j = 0; j < i; ++j)
            k += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] * lambda_(i, j);
    }
    return k;
}

std::int64_t AlgebraSpec::skew_form(const ExpVec& a, const ExpVec& b) const {
    if (static_cast<long>(a.size()) != rank_ || static_cast<long>(b.size()) != rank_)
        throw invalid_parameter("skew_form: exponent rank mismatch");
    std::int64_t v = 0;
    for (long i = 0; i < rank_; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (long j = 0; j < rank_; ++j)
            v += a[static_cast<std::size_t>(i)] * lambda_(i, j) * b[static_cast<std::size_t>(j)];
    }
    return v;
}

bool AlgebraSpec::exponent_allowed(const ExpVec& a) const {
    if (static_cast<long>(a.size()) != rank_) return false;
    for (long i = 0; i < rank_; ++i)
        if (!invertible_[static_cast<std::size_t>(i)] && a[static_cast<std::size_t>(i)] < 0) return false;
    return true;
}

namespace {

bool compatible_impl(const MatZ& btilde, const MatZ& skew, const VecZ& d,
                     const std::vector<int>& ex, long modulus) {
    const Eigen::Index n = skew.rows();
    const Eigen::Index e = static_cast<Eigen::Index>(ex.size());
    if (skew.cols() != n) throw invalid_parameter("compatibility: skew matrix must be square");
    if (btilde.rows() != n || btilde.cols() != e)
        throw invalid_parameter("compatibility: btilde must be N x |ex|");
    if (d.size() != e) throw invalid_parameter("compatibility: d size mismatch");
    if (e == 0) return true;

    // column arrangement: exchangeable indices first, the rest in order
    std::vector<Eigen::Index> cols;
    cols.reserve(static_cast<std::size_t>(n));
    std::vector<bool> is_ex(static_cast<std::size_t>(n), false);
    for (int i : ex) {
        if (i < 0 || i >= n) throw invalid_parameter("compatibility: exchangeable index out of range");
        is_ex[static_cast<std::size_t>(i)] = true;
        cols.push_back(i);
    }
    for (Eigen::Index i = 0; i < n; ++i)
        if (!is_ex[static_cast<std::size_t>(i)]) cols.push_back(i);

    MatZ prod = btilde.transpose() * skew; // |ex| x N
    for (Eigen::Index r = 0; r < e; ++r) {
        for (Eigen::Index p = 0; p < n; ++p) {
            std::int64_t want = (p == r) ? d[r] : 0;
            std::int64_t diff = prod(r, cols[static_cast<std::size_t>(p)]) - want;
            if (modulus > 0) {
                if (diff % modulus != 0) return false;
            } else {
                if (diff != 0) return false;
            }
        }
    }
    return true;
}

} // namespace

bool ell_compatible(const MatZ& btilde, const MatZ& omega, const VecZ& d, long ell,
                    const std::vector<int>& ex) {
    if (ell < 1) throw invalid_parameter("ell_compatible: ell must be positive");
    return compatible_impl(btilde, omega, d, ex, ell);
}

bool strict_compatible(const MatZ& btilde, const MatZ& lambda, const VecZ& d,
                       const std::vector<int>& ex) {
    if (!(lambda + lambda.transpose()).isZero())
        throw invalid_parameter("strict_compatible: lambda must be skew-symmetric");
    return compatible_impl(btilde, lambda, d, ex, 0);
}

} // namespace qtor
