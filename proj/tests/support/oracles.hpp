#pragma once

// Test-only references that do not share code with the library's evaluation
// path: std::pow instead of the kernel exp/log, plain loops instead of batches.

#include <cmath>
#include <random>
#include <vector>

namespace oracle {

inline double f(double alpha, double beta, double k) { return alpha * k * std::pow(1.0 - k, beta); }

inline double iterate(double alpha, double beta, double k, int n) {
  for (int i = 0; i < n; ++i) k = f(alpha, beta, k);
  return k;
}

inline double central_difference(double alpha, double beta, double k, double h = 1e-6) {
  return (f(alpha, beta, k + h) - f(alpha, beta, k - h)) / (2.0 * h);
}

// Cells [x_i, x_{i+1}] of a uniform grid on [lo, hi] where f^2(k) - k changes sign.
inline std::vector<double> dense_sign_changes(double alpha, double beta, double lo, double hi, int n) {
  std::vector<double> cells;
  double prev = iterate(alpha, beta, lo, 2) - lo;
  for (int i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    const double r = iterate(alpha, beta, x, 2) - x;
    if (prev * r < 0.0) cells.push_back(lo + (hi - lo) * (i - 1) / n);
    prev = r;
  }
  return cells;
}

// Seeded generator for property tests.
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(unsigned long long seed) : engine(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine); }
};

}  // namespace oracle
