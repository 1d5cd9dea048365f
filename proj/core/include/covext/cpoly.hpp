#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace covext {

using Complex = std::complex<double>;

/// Polynomial with complex double coefficients, constant term first. Exact
/// trailing zeros are stripped, so the zero polynomial has no coefficients
/// and degree -1.
class CPoly {
 public:
  CPoly() = default;
  explicit CPoly(std::vector<Complex> coefficients);
  CPoly(std::initializer_list<Complex> coefficients);

  static CPoly constant(Complex c) { return CPoly({c}); }
  /// The monomial c·x^k.
  static CPoly monomial(Complex c, int k);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Complex>& coefficients() const noexcept { return coeffs_; }
  Complex coefficient(int k) const;
  Complex leading() const;

  Complex operator()(Complex x) const;
  CPoly derivative() const;
  CPoly monic() const;
  /// Drops trailing coefficients with modulus ≤ tol · max modulus.
  CPoly trimmed(double tol) const;

  friend CPoly operator+(const CPoly& a, const CPoly& b);
  friend CPoly operator-(const CPoly& a, const CPoly& b);
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  friend CPoly operator*(Complex s, const CPoly& a);
  friend bool operator==(const CPoly&, const CPoly&) = default;

 private:
  void normalize();
  std::vector<Complex> coeffs_;
};

/// Roots of a polynomial with a per-root backward-error certificate.
struct RootSet {
  std::vector<Complex> roots;
  /// max over roots of |p(r)| / Σ|a_i||r|^i, the scaled residual.
  double residual_bound = 0.0;
  int iterations = 0;
};

/// All roots by Aberth–Ehrlich simultaneous iteration from a perturbed circle,
/// followed by Newton polishing. The result is sorted by real part, then
/// imaginary part. Throws NumericFailure if the scaled residual stays above
/// `tol` after the iteration cap.
RootSet roots(const CPoly& p, double tol = 1e-12);

/// Determinant of the Sylvester matrix by partially pivoted elimination.
Complex sylvester_resultant(const CPoly& p, const CPoly& q);

/// (−1)^{d(d−1)/2}·Res(p, p′)/lc(p); equals −4a³ − 27b² for x³ + ax + b.
Complex discriminant(const CPoly& p);

/// max{1, Σ|a_i|} for the monic normalisation of p: every root has modulus
/// at most this.
double root_bound(const CPoly& p);

/// Smallest pairwise distance, +inf for fewer than two points.
double min_separation(const std::vector<Complex>& points);

/// Sorts points by real part, treating real parts within `tol` as equal and
/// breaking ties by imaginary part.
void canonical_sort(std::vector<Complex>& points, double tol = 1e-9);

}  // namespace covext
