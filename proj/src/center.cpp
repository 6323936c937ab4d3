#include "qtor/center.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qtor {

bool is_central_exponent(const ExpVec& a, const AlgebraSpec& spec) {
    if (static_cast<long>(a.size()) != spec.rank())
        throw invalid_parameter("is_central_exponent: rank mismatch");
    const MatZ& lambda = spec.lambda();
    const long ell = spec.order();
    for (Eigen::Index i = 0; i < lambda.rows(); ++i) {
        std::int64_t v = 0;
        for (Eigen::Index j = 0; j < lambda.cols(); ++j)
            v += lambda(i, j) * a[static_cast<std::size_t>(j)];
        if (v % ell != 0) return false;
    }
    return true;
}

std::vector<ExpVec> center_lattice(const AlgebraSpec& spec) {
    const long n = spec.rank();
    const long ell = spec.order();
    std::int64_t count = 1;
    for (long i = 0; i < n; ++i) {
        count *= ell;
        if (count > spec.caps().max_basis)
            throw resource_limit("center_lattice: ell^N exceeds max_basis cap");
    }

    std::vector<ExpVec> k;
    ExpVec a(static_cast<std::size_t>(n), 0);
    while (true) {
        if (is_central_exponent(a, spec)) k.push_back(a);
        long i = n - 1;
        while (i >= 0 && a[static_cast<std::size_t>(i)] == ell - 1) {
            a[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++a[static_cast<std::size_t>(i)];
    }
    std::sort(k.begin(), k.end());

    // subgroup sanity: closure under addition mod ell (pairwise up to a size
    // guard, strided sampling beyond that)
    std::set<ExpVec> kset(k.begin(), k.end());
    const std::size_t stride = k.size() > 1000 ? k.size() / 1000 + 1 : 1;
    for (std::size_t i = 0; i < k.size(); i += stride)
        for (std::size_t j = 0; j < k.size(); j += stride) {
            ExpVec s = add_exp(k[i], k[j]);
            for (auto& v : s) v %= ell;
            if (!kset.count(s)) throw internal_error("center_lattice: residue set is not a subgroup");
        }
    return k;
}

long pi_degree(const AlgebraSpec& spec) {
    std::int64_t total = 1;
    for (long i = 0; i < spec.rank(); ++i) total *= spec.order();
    const auto k = center_lattice(spec);
    if (total % static_cast<std::int64_t>(k.size()) != 0)
        throw internal_error("pi_degree: |K| does not divide ell^N");
    std::int64_t q = total / static_cast<std::int64_t>(k.size());
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(q))));
    while (r * r > q) --r;
    while ((r + 1) * (r + 1) <= q) ++r;
    if (r * r != q) throw internal_error("pi_degree: ell^N / |K| is not a perfect square");
    return static_cast<long>(r);
}

MatZ center_lattice_basis(const AlgebraSpec& spec) {
    const long n = spec.rank();
    const auto k = center_lattice(spec);
    MatZ cols(n, n + static_cast<Eigen::Index>(k.size()));
    cols.leftCols(n) = MatZ::Identity(n, n) * spec.order();
    for (std::size_t j = 0; j < k.size(); ++j)
        cols.col(n + static_cast<Eigen::Index>(j)) = to_vecz(k[j]);
    MatZ h = hermite_normal_form(cols);
    if (h.cols() != n) throw internal_error("center_lattice_basis: lattice not full rank");
    return h;
}

} // namespace qtor
