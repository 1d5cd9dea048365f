#include "covext/cpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "covext/errors.hpp"

namespace covext {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxAberthIterations = 1000;

// Σ|a_i|·max(1,|x|)^i, the magnitude against which residuals are measured.
double coefficient_scale(const std::vector<Complex>& a, Complex x) {
  const double r = std::max(1.0, std::abs(x));
  double s = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) s = s * r + std::abs(*it);
  return s;
}

void horner_with_derivative(const std::vector<Complex>& a, Complex x, Complex& value, Complex& deriv) {
  value = 0.0;
  deriv = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    deriv = deriv * x + value;
    value = value * x + *it;
  }
}

}  // namespace

// ------------------------------------------------------------------ CPoly

CPoly::CPoly(std::vector<Complex> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

CPoly::CPoly(std::initializer_list<Complex> coefficients) : coeffs_(coefficients) { normalize(); }

CPoly CPoly::monomial(Complex c, int k) {
  std::vector<Complex> a(static_cast<std::size_t>(k) + 1, 0.0);
  a.back() = c;
  return CPoly(std::move(a));
}

void CPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
}

Complex CPoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Complex CPoly::leading() const { return coeffs_.empty() ? Complex(0.0) : coeffs_.back(); }

Complex CPoly::operator()(Complex x) const {
  Complex v = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
  return v;
}

CPoly CPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return CPoly(std::move(d));
}

CPoly CPoly::monic() const {
  if (is_zero()) throw NumericFailure("monic: zero polynomial");
  const Complex lc = leading();
  std::vector<Complex> a = coeffs_;
  for (auto& c : a) c /= lc;
  a.back() = 1.0;
  return CPoly(std::move(a));
}

CPoly CPoly::trimmed(double tol) const {
  double big = 0.0;
  for (const auto& c : coeffs_) big = std::max(big, std::abs(c));
  std::vector<Complex> a = coeffs_;
  while (!a.empty() && std::abs(a.back()) <= tol * big) a.pop_back();
  return CPoly(std::move(a));
}

CPoly operator+(const CPoly& a, const CPoly& b) {
  std::vector<Complex> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return CPoly(std::move(out));
}

CPoly operator-(const CPoly& a, const CPoly& b) { return a + Complex(-1.0) * b; }

CPoly operator*(const CPoly& a, const CPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return CPoly(std::move(out));
}

CPoly operator*(Complex s, const CPoly& a) {
  std::vector<Complex> out = a.coeffs_;
  for (auto& c : out) c *= s;
  return CPoly(std::move(out));
}

// ------------------------------------------------------------------ roots

RootSet roots(const CPoly& p, double tol) {
  if (p.degree() < 1) throw NumericFailure("roots: polynomial must have degree at least 1");
  const CPoly m = p.monic();
  const auto n = static_cast<std::size_t>(m.degree());
  const auto& a = m.coefficients();

  // Rescale x = s·y so the roots of the working polynomial have modulus O(1).
  double s = 0.0;
  for (std::size_t k = 1; k <= n; ++k)
    s = std::max(s, std::pow(std::abs(a[n - k]), 1.0 / static_cast<double>(k)));
  if (!(s > 0.0) || !std::isfinite(s)) s = 1.0;
  std::vector<Complex> b(n + 1);
  for (std::size_t k = 0; k <= n; ++k) b[k] = a[k] * std::pow(s, static_cast<double>(k) - static_cast<double>(n));

  std::vector<Complex> y(n);
  for (std::size_t k = 0; k < n; ++k)
    y[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4);

  std::vector<bool> done(n, false);
  int iter = 0;
  for (; iter < kMaxAberthIterations; ++iter) {
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      Complex pv, dv;
      horner_with_derivative(b, y[k], pv, dv);
      if (std::abs(pv) <= 4.0 * static_cast<double>(n) * kEps * coefficient_scale(b, y[k])) {
        done[k] = true;
        continue;
      }
      all_done = false;
      if (dv == Complex(0.0)) dv = Complex(kEps, kEps);
      const Complex ratio = pv / dv;
      Complex sum = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += 1.0 / (y[k] - y[j]);
      const Complex w = ratio / (1.0 - ratio * sum);
      y[k] -= w;
      if (std::abs(w) <= 4.0 * kEps * std::max(std::abs(y[k]), 1e-3)) done[k] = true;
    }
    if (all_done) break;
  }

  RootSet out;
  out.iterations = iter;
  for (std::size_t k = 0; k < n; ++k) {
    Complex x = s * y[k];
    double res = std::abs(m(x)) / coefficient_scale(a, x);
    for (int polish = 0; polish < 3 && res > 0.0; ++polish) {
      Complex pv, dv;
      horner_with_derivative(a, x, pv, dv);
      if (dv == Complex(0.0)) break;
      const Complex trial = x - pv / dv;
      const double trial_res = std::abs(m(trial)) / coefficient_scale(a, trial);
      if (!(trial_res < res)) break;
      x = trial;
      res = trial_res;
    }
    out.roots.push_back(x);
    out.residual_bound = std::max(out.residual_bound, res);
  }
  if (!(out.residual_bound <= tol))
    throw NumericFailure("roots: scaled residual " + std::to_string(out.residual_bound) + " above tolerance " +
                         std::to_string(tol) + " after " + std::to_string(iter) + " iterations (degree " +
                         std::to_string(n) + ")");
  canonical_sort(out.roots);
  return out;
}

// ------------------------------------------------------------- resultants

Complex sylvester_resultant(const CPoly& p, const CPoly& q) {
  if (p.degree() < 1 || q.degree() < 1) throw NumericFailure("sylvester_resultant: degrees must be at least 1");
  const auto m = static_cast<std::size_t>(p.degree());
  const auto n = static_cast<std::size_t>(q.degree());
  const std::size_t N = m + n;
  std::vector<Complex> S(N * N, 0.0);
  auto at = [&](std::size_t r, std::size_t c) -> Complex& { return S[r * N + c]; };
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) at(r, r + k) = p.coefficient(static_cast<int>(m - k));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) at(n + r, r + k) = q.coefficient(static_cast<int>(n - k));

  Complex det = 1.0;
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < N; ++r)
      if (std::abs(at(r, col)) > std::abs(at(piv, col))) piv = r;
    if (at(piv, col) == Complex(0.0)) return 0.0;
    if (piv != col) {
      for (std::size_t c = 0; c < N; ++c) std::swap(at(piv, c), at(col, c));
      det = -det;
    }
    det *= at(col, col);
    for (std::size_t r = col + 1; r < N; ++r) {
      const Complex f = at(r, col) / at(col, col);
      if (f == Complex(0.0)) continue;
      for (std::size_t c = col; c < N; ++c) at(r, c) -= f * at(col, c);
    }
  }
  return det;
}

Complex discriminant(const CPoly& p) {
  const int d = p.degree();
  if (d < 2) throw NumericFailure("discriminant: degree must be at least 2");
  const double sign = ((d * (d - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
  return sign * sylvester_resultant(p, p.derivative()) / p.leading();
}

double root_bound(const CPoly& p) {
  const CPoly m = p.monic();
  double sum = 0.0;
  for (int k = 0; k < m.degree(); ++k) sum += std::abs(m.coefficient(k));
  return std::max(1.0, sum);
}

double min_separation(const std::vector<Complex>& points) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) best = std::min(best, std::abs(points[i] - points[j]));
  return best;
}

void canonical_sort(std::vector<Complex>& points, double tol) {
  double scale = 1.0;
  for (const auto& z : points) scale = std::max(scale, std::abs(z));
  const double gap = tol * scale;
  std::sort(points.begin(), points.end(), [](Complex u, Complex v) { return u.real() < v.real(); });
  for (std::size_t i = 0; i < points.size();) {
    std::size_t j = i + 1;
    while (j < points.size() && points[j].real() - points[j - 1].real() <= gap) ++j;
    std::sort(points.begin() + static_cast<std::ptrdiff_t>(i), points.begin() + static_cast<std::ptrdiff_t>(j),
              [](Complex u, Complex v) { return u.imag() < v.imag(); });
    i = j;
  }
}

}  // namespace covext
