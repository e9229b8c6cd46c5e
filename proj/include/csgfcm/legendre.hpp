#pragma once

#include <vector>

namespace csgfcm {

/// Legendre polynomial P_n(x).
double legendre(int n, double x);

/// 1D hierarchic shape function k (1-based) on [-1, 1]:
///   N_1 = (1 - x)/2, N_2 = (1 + x)/2,
///   N_k = (P_{k-1}(x) - P_{k-3}(x)) / sqrt(2(2k - 3))   for k >= 3.
double integrated_legendre_1d(int k, double x);
double integrated_legendre_1d_deriv(int k, double x);

/// Values and first derivatives of modes 1..p+1 at x (index 0 = mode 1).
void integrated_legendre_all(int p, double x, double* values, double* derivs);

/// Gauss-Legendre points and weights on [-1, 1].
struct GaussRule {
    std::vector<double> points;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

} // namespace csgfcm
