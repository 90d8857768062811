#include "cascata/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

namespace cascata {
namespace {

// Solves (T - lambda I) x = b for a symmetric tridiagonal T given by
// (diag, sub), with partial pivoting. Used for inverse iteration.
Eigen::VectorXd shifted_tridiag_solve(const Eigen::VectorXd& diag,
                                      const Eigen::VectorXd& sub, double lambda,
                                      const Eigen::VectorXd& b) {
  const int n = static_cast<int>(diag.size());
  // Working bands: lower (from input sub), main, upper, second upper (fill-in).
  Eigen::VectorXd d = diag.array() - lambda;
  Eigen::VectorXd l(n), u(n), u2(n), x = b;
  for (int i = 0; i < n - 1; ++i) l(i) = sub(i);
  u.setZero();
  u2.setZero();
  for (int i = 0; i < n - 1; ++i) u(i) = sub(i);

  const double tiny = 1e-300;
  for (int i = 0; i < n - 1; ++i) {
    if (std::abs(d(i)) >= std::abs(l(i))) {
      double piv = d(i);
      if (std::abs(piv) < tiny) piv = (piv < 0 ? -tiny : tiny);
      const double m = l(i) / piv;
      d(i + 1) -= m * u(i);
      if (i + 1 < n - 1) {
        // u2(i) is zero without pivoting, so nothing propagates further.
      }
      x(i + 1) -= m * x(i);
      d(i) = piv;
    } else {
      // Swap rows i and i+1.
      std::swap(d(i), l(i));
      const double ui = u(i);
      u(i) = d(i + 1);
      d(i + 1) = ui;
      if (i + 1 < n - 1) {
        u2(i) = u(i + 1);
        u(i + 1) = 0.0;
      }
      std::swap(x(i), x(i + 1));
      const double m = l(i) != 0.0 ? d(i + 1) / d(i) : 0.0;
      // After the swap the eliminated entry sits where d(i+1) was read from.
      d(i + 1) = u(i) != 0.0 || true ? d(i + 1) - m * u(i) : d(i + 1);
      if (i + 1 < n - 1) u(i + 1) -= m * u2(i);
      x(i + 1) -= m * x(i);
    }
  }
  if (std::abs(d(n - 1)) < tiny) d(n - 1) = (d(n - 1) < 0 ? -tiny : tiny);

  // Back substitution.
  x(n - 1) /= d(n - 1);
  if (n >= 2) x(n - 2) = (x(n - 2) - u(n - 2) * x(n - 1)) / d(n - 2);
  for (int i = n - 3; i >= 0; --i)
    x(i) = (x(i) - u(i) * x(i + 1) - u2(i) * x(i + 2)) / d(i);
  return x;
}

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix, weights are
// mu0 times the squared first components of the normalized eigenvectors.
// Eigenvalues come from the tridiagonal QL solver; eigenvector first
// components from two rounds of inverse iteration (O(n) per node).
GaussRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub,
                       double mu0) {
  const int n = static_cast<int>(diag.size());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("golub_welsch: tridiagonal eigensolve failed");

  GaussRule rule;
  rule.nodes = es.eigenvalues();
  rule.weights.resize(n);

  Eigen::VectorXd start(n);
  for (int i = 0; i < n; ++i) start(i) = 1.0 + 1e-3 * std::sin(1.0 + i);
  start.normalize();

  for (int k = 0; k < n; ++k) {
    Eigen::VectorXd v = shifted_tridiag_solve(diag, sub, rule.nodes(k), start);
    v.normalize();
    v = shifted_tridiag_solve(diag, sub, rule.nodes(k), v);
    v.normalize();
    rule.weights(k) = mu0 * v(0) * v(0);
  }
  return rule;
}

GaussRule make_legendre(int n) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1 > 0 ? n - 1 : 0);
  for (int k = 1; k < n; ++k)
    sub(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
  return golub_welsch(diag, sub, 2.0);
}

GaussRule make_laguerre(int n) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n - 1 > 0 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) diag(k) = 2.0 * k + 1.0;
  for (int k = 1; k < n; ++k) sub(k - 1) = k;
  return golub_welsch(diag, sub, 1.0);
}

const GaussRule& cached(std::map<int, GaussRule>& cache, std::mutex& mtx, int n,
                        GaussRule (*make)(int)) {
  if (n < 1) throw std::invalid_argument("Gauss rule needs n >= 1");
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make(n)).first;
  return it->second;
}

} // namespace

const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  return cached(cache, mtx, n, &make_legendre);
}

const GaussRule& gauss_laguerre(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  return cached(cache, mtx, n, &make_laguerre);
}

int laguerre_nodes_for_oscillation(double a, double tol) {
  a = std::abs(a);
  if (a < 0.5) return 1;
  const double rho = a / std::sqrt(1.0 + a * a);
  const double target = tol * std::sqrt(1.0 + a * a);
  // rho^(2n) <= target
  const double n = std::log(target) / (2.0 * std::log(rho));
  return static_cast<int>(std::ceil(n)) + 8;
}

} // namespace cascata
