#include "graphzeta/roots.hpp"
#include "graphzeta/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace graphzeta {

namespace {

std::complex<double> horner(const std::vector<double>& coeffs, std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double residual(const std::vector<double>& coeffs, std::complex<double> z) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    const double lead = std::abs(coeffs.back());
    const double scale = std::pow(std::max(1.0, std::abs(z)), deg);
    return std::abs(horner(coeffs, z)) / (lead * scale);
}

} // namespace

std::vector<std::complex<double>> numeric_roots(const ExactPoly& squarefree,
                                                const RootOptions& options) {
    if (squarefree.is_zero()) throw DomainError("numeric_roots of zero polynomial");
    const int deg = squarefree.degree();
    if (deg == 0) return {};

    std::vector<double> c(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k) c[static_cast<std::size_t>(k)] = squarefree.coeff(k).get_d();
    std::vector<double> dc(static_cast<std::size_t>(deg));
    for (int k = 1; k <= deg; ++k) dc[static_cast<std::size_t>(k - 1)] = k * c[static_cast<std::size_t>(k)];

    // Companion matrix of the monic normalization.
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -c[static_cast<std::size_t>(i)] / c.back();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
    if (solver.info() != Eigen::Success)
        throw Error("eigenvalue iteration failed on companion matrix");

    std::vector<std::complex<double>> roots(static_cast<std::size_t>(deg));
    for (int i = 0; i < deg; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);

    for (auto& z : roots) {
        std::complex<double> best = z;
        double best_res = residual(c, z);
        for (int it = 0; it < options.max_newton_iterations && best_res > 0; ++it) {
            const std::complex<double> dp = horner(dc, z);
            if (std::abs(dp) == 0.0) break;
            z -= horner(c, z) / dp;
            const double res = residual(c, z);
            if (res < best_res) {
                best = z;
                best_res = res;
            } else if (res > 2 * best_res) {
                break; // diverging, keep the best iterate
            }
        }
        z = best;
        if (best_res > options.tol)
            throw Error("root refinement did not reach the residual tolerance");
    }

    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

} // namespace graphzeta
