#pragma once

#include <Eigen/Dense>

namespace cascata {

/// Nodes and weights of an n-point Gauss rule.
struct GaussRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// n-point Gauss-Legendre rule on [-1, 1]. Cached per n; thread-safe.
const GaussRule& gauss_legendre(int n);

/// n-point Gauss-Laguerre rule for integrals of the form
/// int_0^inf exp(-x) f(x) dx. Cached per n; thread-safe.
const GaussRule& gauss_laguerre(int n);

/// Smallest Gauss-Laguerre node count that integrates exp(i a x) against
/// exp(-x) to the requested absolute tolerance. The error of the n-point
/// rule decays like rho^(2n) with rho = a / sqrt(1 + a^2), so slowly
/// oscillating integrands need few nodes and strongly oscillating ones
/// proportionally more.
int laguerre_nodes_for_oscillation(double a, double tol);

} // namespace cascata
