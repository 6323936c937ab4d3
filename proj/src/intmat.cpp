#include "qtor/intmat.hpp"

#include <cstdlib>

#include "qtor/errors.hpp"

namespace qtor {

MatZ hermite_normal_form(const MatZ& m) {
    MatZ h = m;
    const Eigen::Index rows = h.rows();
    Eigen::Index p = 0; // next pivot column
    for (Eigen::Index i = 0; i < rows && p < h.cols(); ++i) {
        // clear row i to a single nonzero entry at column p via gcd steps
        while (true) {
            Eigen::Index j = -1;
            for (Eigen::Index k = p + 1; k < h.cols(); ++k)
                if (h(i, k) != 0) { j = k; break; }
            if (j < 0) break;
            if (h(i, p) == 0) {
                h.col(p).swap(h.col(j));
                continue;
            }
            std::int64_t q = floor_div(h(i, j), h(i, p));
            h.col(j) -= q * h.col(p);
            if (h(i, j) != 0) h.col(p).swap(h.col(j));
        }
        if (h(i, p) == 0) continue; // no pivot in this row
        if (h(i, p) < 0) h.col(p) = -h.col(p);
        for (Eigen::Index j = 0; j < p; ++j) {
            std::int64_t q = floor_div(h(i, j), h(i, p));
            if (q != 0) h.col(j) -= q * h.col(p);
        }
        ++p;
    }
    return h.leftCols(p);
}

bool solve_lower_triangular(const MatZ& h, const VecZ& a, VecZ& x) {
    if (h.rows() != h.cols() || h.rows() != a.size())
        throw invalid_parameter("solve_lower_triangular: dimension mismatch");
    const Eigen::Index n = h.rows();
    x = VecZ::Zero(n);
    VecZ r = a;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (h(i, i) == 0) throw invalid_parameter("solve_lower_triangular: singular");
        if (r[i] % h(i, i) != 0) return false;
        x[i] = r[i] / h(i, i);
        if (x[i] != 0) r -= x[i] * h.col(i);
    }
    for (Eigen::Index i = 0; i < n; ++i)
        if (r[i] != 0) return false;
    return true;
}

} // namespace qtor
