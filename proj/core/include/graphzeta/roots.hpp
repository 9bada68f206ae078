#ifndef GRAPHZETA_ROOTS_HPP
#define GRAPHZETA_ROOTS_HPP

#include "graphzeta/poly.hpp"

#include <complex>
#include <vector>

namespace graphzeta {

struct RootOptions {
    /// Residual bound: |p(z)| / (|lead| * max(1,|z|)^deg) < tol for every root.
    double tol = 1e-12;
    int max_newton_iterations = 80;
};

/// All complex roots of a square-free polynomial, via companion-matrix
/// eigenvalues refined by Newton iteration on the exact coefficients.
/// Sorted by (real, imaginary). Multiplicities are never estimated here;
/// callers take them from the square-free exponent.
/// Throws DomainError on the zero polynomial, Error on non-convergence.
std::vector<std::complex<double>> numeric_roots(const ExactPoly& squarefree,
                                                const RootOptions& options = {});

} // namespace graphzeta

#endif
