#pragma once

#include <string>
#include <vector>

#include "qtor/report.hpp"
#include "qtor/torus.hpp"

namespace qtor {

/// A Q(eps)-linear derivation of the specialized algebra, given by its values
/// on the generators and extended by the Leibniz rule. On an inverted
/// generator, delta(x^{-1}) = -x^{-1} delta(x) x^{-1}.
class Derivation {
public:
    explicit Derivation(std::vector<TorusSpec> images) : images_(std::move(images)) {}

    static Derivation zero(const AlgebraSpec& spec) {
        return Derivation(std::vector<TorusSpec>(static_cast<std::size_t>(spec.rank())));
    }

    /// delta(x_i) = x_i.
    static Derivation grading(const AlgebraSpec& spec);

    /// delta(x_i) = mu_i x_i.
    static Derivation diagonal(const AlgebraSpec& spec, std::vector<CycScalar> mu);

    /// Inner derivation ad_r: x_i -> r x_i - x_i r.
    static Derivation inner(const TorusSpec& r, const AlgebraSpec& spec);

    long rank() const { return static_cast<long>(images_.size()); }
    const TorusSpec& image(long i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<TorusSpec>& images() const { return images_; }

    Derivation& operator+=(const Derivation& o);
    Derivation& operator*=(const CycScalar& s);
    friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
    friend Derivation operator*(Derivation a, const CycScalar& s) { return a *= s; }

    friend bool operator==(const Derivation& a, const Derivation& b) { return a.images_ == b.images_; }

private:
    std::vector<TorusSpec> images_;
};

/// Leibniz extension of the generator images. The caller is responsible for
/// consistency (see check_derivation / ensure_consistent).
TorusSpec apply_derivation(const Derivation& d, const TorusSpec& r, const AlgebraSpec& spec);

/// Checks delta(x_i x_j - eps^{Omega_ij} x_j x_i) = 0 for all pairs i < j,
/// expanding the Leibniz form of the relation; failures are reported with the
/// offending pair and the nonzero defect.
Report check_derivation(const Derivation& d, const AlgebraSpec& spec);

/// Throws relation_violation naming the first failing pair.
void ensure_consistent(const Derivation& d, const AlgebraSpec& spec);

} // namespace qtor
