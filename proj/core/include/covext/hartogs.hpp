#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace covext {

/// Coordinates w = (w1; w2) of C^n with w1 ∈ C^{n−q}, w2 ∈ C^q.
struct HartogsParams {
  int n = 3;
  int q = 2;
  double r = 0.5;
  double alpha = 1.0;

  /// Throws Error unless 2 ≤ q < n, 0 < r < 1 and alpha > 0.
  void validate() const;
};

using CPoint = std::vector<std::complex<double>>;

/// −‖w1‖² + r²/4 + (1 − r²/4)‖w2‖^{2α}, Euclidean norms.
double rho_alpha(const CPoint& w, const HartogsParams& p);

/// Row-major n×n matrix 2·∂²ρ/∂z_j∂z̄_k from the closed-form blocks; the w1
/// block is −2·Id. Throws NotSmooth when w2 = 0 and alpha is not an integer.
std::vector<std::complex<double>> levi_matrix(const CPoint& w, const HartogsParams& p);

/// The same matrix from central differences of rho_alpha with step h.
std::vector<std::complex<double>> levi_matrix_fd(const CPoint& w, const HartogsParams& p, double h = 1e-4);

struct LeviSignature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  /// Ascending.
  std::vector<double> eigenvalues;
  /// max|closed form − finite differences| / max|closed form|.
  double fd_discrepancy = 0.0;
};

/// Eigenvalues within tol·max(1, ‖L‖) of 0 count as zero. Throws
/// NumericFailure if the finite-difference cross-check exceeds 1e-5.
LeviSignature levi_signature(const CPoint& w, const HartogsParams& p, double tol = 1e-12);

/// Membership in Δ_r^{n−q}×Δ^q ∪ Δ^{n−q}×(Δ^q ∖ closure Δ_{1−r}^q), polydisk norms.
bool in_hartogs_figure(const CPoint& w, const HartogsParams& p);

/// An α₀ such that every D_α⁺ with α ≥ α₀ lies in the Hartogs figure, from
/// ‖w1‖ ≥ r and ‖w2‖² ≤ q(1−r)² on the complement. Empty when q(1−r)² ≥ 1.
std::optional<double> containment_alpha(int q, double r);

}  // namespace covext
