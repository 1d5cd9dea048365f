#include "covext/hartogs.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "covext/errors.hpp"

namespace covext {

namespace {

using Complex = std::complex<double>;

double norm2(const CPoint& w, std::size_t from, std::size_t to) {
  double s = 0.0;
  for (std::size_t i = from; i < to; ++i) s += std::norm(w[i]);
  return s;
}

double max_modulus(const CPoint& w, std::size_t from, std::size_t to) {
  double m = 0.0;
  for (std::size_t i = from; i < to; ++i) m = std::max(m, std::abs(w[i]));
  return m;
}

void check_point(const CPoint& w, const HartogsParams& p) {
  p.validate();
  if (w.size() != static_cast<std::size_t>(p.n)) throw DegreeMismatch("point has the wrong dimension");
}

}  // namespace

void HartogsParams::validate() const {
  if (!(q >= 2 && q < n)) throw Error("hartogs: need 2 <= q < n");
  if (!(r > 0.0 && r < 1.0)) throw Error("hartogs: need 0 < r < 1");
  if (!(alpha > 0.0)) throw Error("hartogs: need alpha > 0");
}

double rho_alpha(const CPoint& w, const HartogsParams& p) {
  check_point(w, p);
  const auto split = static_cast<std::size_t>(p.n - p.q);
  const double r2 = p.r * p.r / 4.0;
  return -norm2(w, 0, split) + r2 + (1.0 - r2) * std::pow(norm2(w, split, w.size()), p.alpha);
}

std::vector<Complex> levi_matrix(const CPoint& w, const HartogsParams& p) {
  check_point(w, p);
  const auto n = static_cast<std::size_t>(p.n);
  const auto split = static_cast<std::size_t>(p.n - p.q);
  const double s = norm2(w, split, n);
  const double a = p.alpha;
  if (s == 0.0 && a != std::floor(a)) throw NotSmooth("rho_alpha is not smooth at w2 = 0 for non-integer alpha");

  std::vector<Complex> m(n * n, 0.0);
  for (std::size_t j = 0; j < split; ++j) m[j * n + j] = -2.0;
  // 2(1 − r²/4)·∂∂̄ s^α with s = ‖w2‖²; s^{α−2} only multiplies terms that vanish with s.
  const double c = 2.0 * (1.0 - p.r * p.r / 4.0);
  const double d1 = a == 1.0 ? 1.0 : a * std::pow(s, a - 1.0);
  const double d2 = s == 0.0 ? 0.0 : a * (a - 1.0) * std::pow(s, a - 2.0);
  for (std::size_t j = split; j < n; ++j)
    for (std::size_t k = split; k < n; ++k)
      m[j * n + k] = c * ((j == k ? d1 : 0.0) + d2 * std::conj(w[j]) * w[k]);
  return m;
}

std::vector<Complex> levi_matrix_fd(const CPoint& w, const HartogsParams& p, double h) {
  check_point(w, p);
  const auto n = static_cast<std::size_t>(p.n);
  // Real coordinate 2j is Re w_j, 2j+1 is Im w_j.
  auto f = [&](std::size_t a, double sa, std::size_t b, double sb) {
    CPoint v = w;
    v[a / 2] += (a % 2 == 0 ? Complex(sa * h, 0.0) : Complex(0.0, sa * h));
    v[b / 2] += (b % 2 == 0 ? Complex(sb * h, 0.0) : Complex(0.0, sb * h));
    return rho_alpha(v, p);
  };
  auto d2 = [&](std::size_t a, std::size_t b) {
    return (f(a, 1, b, 1) - f(a, 1, b, -1) - f(a, -1, b, 1) + f(a, -1, b, -1)) / (4.0 * h * h);
  };
  std::vector<Complex> m(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const double xx = d2(2 * j, 2 * k);
      const double yy = d2(2 * j + 1, 2 * k + 1);
      const double xy = d2(2 * j, 2 * k + 1);
      const double yx = d2(2 * j + 1, 2 * k);
      // 2·∂z_j∂z̄_k = ½(∂x∂x + ∂y∂y + i(∂x_j∂y_k − ∂y_j∂x_k)).
      m[j * n + k] = 0.5 * Complex(xx + yy, xy - yx);
    }
  return m;
}

LeviSignature levi_signature(const CPoint& w, const HartogsParams& p, double tol) {
  const std::vector<Complex> closed = levi_matrix(w, p);
  const std::vector<Complex> fd = levi_matrix_fd(w, p);
  double diff = 0.0;
  double big = 0.0;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    diff = std::max(diff, std::abs(closed[i] - fd[i]));
    big = std::max(big, std::abs(closed[i]));
  }
  LeviSignature sig;
  sig.fd_discrepancy = diff / big;
  if (sig.fd_discrepancy > 1e-5)
    throw NumericFailure("Levi matrix disagrees with finite differences (relative " +
                         std::to_string(sig.fd_discrepancy) + ")");

  const auto n = static_cast<Eigen::Index>(p.n);
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) m(j, k) = closed[static_cast<std::size_t>(j * n + k)];
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericFailure("Hermitian eigensolver did not converge");
  const double cut = tol * std::max(1.0, big);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double e = solver.eigenvalues()(i);
    sig.eigenvalues.push_back(e);
    if (e > cut) {
      ++sig.positive;
    } else if (e < -cut) {
      ++sig.negative;
    } else {
      ++sig.zero;
    }
  }
  return sig;
}

bool in_hartogs_figure(const CPoint& w, const HartogsParams& p) {
  check_point(w, p);
  const auto split = static_cast<std::size_t>(p.n - p.q);
  const double m1 = max_modulus(w, 0, split);
  const double m2 = max_modulus(w, split, w.size());
  const bool slab = m1 < p.r && m2 < 1.0;
  const bool ring = m1 < 1.0 && m2 < 1.0 && m2 > 1.0 - p.r;
  return slab || ring;
}

std::optional<double> containment_alpha(int q, double r) {
  const double base = q * (1.0 - r) * (1.0 - r);
  if (base >= 1.0) return std::nullopt;
  const double target = (0.75 * r * r) / (1.0 - r * r / 4.0);
  if (target >= 1.0) return 0.0;
  return std::log(target) / std::log(base);
}

}  // namespace covext
