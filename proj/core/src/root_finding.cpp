#include "root_finding.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace newton_mv::detail {

std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs)
{
    while (!coeffs.empty() && coeffs.back() == Complex(0))
        coeffs.pop_back();
    if (coeffs.size() <= 1)
        return {};
    const auto degree = static_cast<Eigen::Index>(coeffs.size() - 1);
    if (degree == 1)
        return {-coeffs[0] / coeffs[1]};

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    for (Eigen::Index i = 1; i < degree; ++i)
        companion(i, i - 1) = 1.0;
    const Complex lead = coeffs.back();
    for (Eigen::Index i = 0; i < degree; ++i)
        companion(i, degree - 1) = -coeffs[static_cast<std::size_t>(i)] / lead;

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    std::vector<Complex> roots;
    roots.reserve(static_cast<std::size_t>(degree));
    for (Eigen::Index i = 0; i < degree; ++i)
        roots.push_back(solver.eigenvalues()(i));
    return roots;
}

std::size_t trim_negligible(std::vector<Complex>& coeffs, double rel_tol)
{
    double largest = 0;
    for (const auto& c : coeffs)
        largest = std::max(largest, std::abs(c));
    if (largest == 0) {
        coeffs.clear();
        return 0;
    }
    const double cutoff = rel_tol * largest;
    while (!coeffs.empty() && std::abs(coeffs.back()) <= cutoff)
        coeffs.pop_back();
    std::size_t low = 0;
    while (low < coeffs.size() && std::abs(coeffs[low]) <= cutoff)
        ++low;
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(low));
    return low;
}

} // namespace newton_mv::detail
