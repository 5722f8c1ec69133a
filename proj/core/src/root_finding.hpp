#pragma once

#include "newton_mv/sparse_solver.hpp"

#include <vector>

namespace newton_mv::detail {

/// Roots of c_0 + c_1 t + ... + c_d t^d as eigenvalues of the companion matrix.
/// Exact-zero leading coefficients are dropped; a constant yields no roots.
std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs);

/// Drops coefficients at either end whose modulus is below rel_tol * max modulus.
/// Returns the number of low-order coefficients removed (the t-adic valuation).
std::size_t trim_negligible(std::vector<Complex>& coeffs, double rel_tol);

} // namespace newton_mv::detail
