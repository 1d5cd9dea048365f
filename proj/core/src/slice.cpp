#include "covext/slice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "covext/errors.hpp"

namespace covext {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Angular and collinearity ties in the lasso layout.
constexpr double kTieTol = 1e-9;

std::string fmt(Complex z) {
  std::ostringstream os;
  os.precision(6);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

double snap(double x, double scale) { return std::abs(x) <= scale ? 0.0 : x; }

// Zeroes real and imaginary parts below rel · (largest coefficient modulus).
CPoly clean(const CPoly& p, double rel) {
  double big = 0.0;
  for (const auto& a : p.coefficients()) big = std::max(big, std::abs(a));
  std::vector<Complex> out;
  for (const auto& a : p.coefficients()) out.emplace_back(snap(a.real(), rel * big), snap(a.imag(), rel * big));
  return CPoly(std::move(out));
}

// Coefficients of the polynomial of degree < N taking values[j] at
// R·e^{iφ}·e^{2πij/N}.
std::vector<Complex> interpolate_on_circle(const std::vector<Complex>& values, double radius, double phase) {
  const std::size_t n = values.size();
  std::vector<Complex> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      acc += values[j] * std::polar(1.0, -kTwoPi * static_cast<double>(j * k % n) / static_cast<double>(n));
    out[k] = acc / static_cast<double>(n) / std::polar(std::pow(radius, static_cast<double>(k)),
                                                       phase * static_cast<double>(k));
  }
  return out;
}

Complex circle_point(double radius, double phase, std::size_t j, std::size_t n) {
  return std::polar(radius, phase + kTwoPi * static_cast<double>(j) / static_cast<double>(n));
}

double arg_0_2pi(Complex z) {
  const double a = std::arg(z);
  return a < 0.0 ? a + kTwoPi : a;
}

// Minimal distance to the other branch points, capped by the distance to the
// basepoint; +inf when neither exists.
double clearance(const std::vector<Complex>& branch, std::size_t i, Complex basepoint) {
  double d = std::abs(branch[i] - basepoint);
  for (std::size_t j = 0; j < branch.size(); ++j)
    if (j != i) d = std::min(d, std::abs(branch[i] - branch[j]));
  return d;
}

std::vector<std::size_t> lasso_order(const std::vector<Complex>& branch, Complex basepoint) {
  std::vector<std::size_t> idx(branch.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const double aa = arg_0_2pi(branch[a] - basepoint);
    const double ab = arg_0_2pi(branch[b] - basepoint);
    if (std::abs(aa - ab) > kTieTol) return aa < ab;
    return std::abs(branch[a] - basepoint) < std::abs(branch[b] - basepoint);
  });
  return idx;
}

// max_step is relative: far from the origin the cover varies on a
// proportionally larger scale, so absolute steps would waste work there.
double step_limit(double max_step, double modulus) { return max_step * std::max(1.0, modulus); }

// Appends the arc about `center` from `from` to `to` (exclusive of `from`).
void append_arc(std::vector<Complex>& nodes, Complex center, Complex from, Complex to, bool ccw, double max_step) {
  const double r = std::abs(from - center);
  const double a0 = std::arg(from - center);
  double sweep = std::arg(to - center) - a0;
  if (ccw) {
    while (sweep <= 0.0) sweep += kTwoPi;
  } else {
    while (sweep >= 0.0) sweep -= kTwoPi;
  }
  const auto m =
      static_cast<std::size_t>(std::max(8.0, std::ceil(std::abs(sweep) * r / step_limit(max_step, r))));
  for (std::size_t k = 1; k < m; ++k)
    nodes.push_back(center + std::polar(r, a0 + sweep * static_cast<double>(k) / static_cast<double>(m)));
  nodes.push_back(to);
}

bool newton_polish(const CPoly& p, const CPoly& dp, Complex& w) {
  for (int it = 0; it < 40; ++it) {
    const Complex f = p(w);
    double scale = 0.0;
    const double r = std::max(1.0, std::abs(w));
    for (auto c = p.coefficients().rbegin(); c != p.coefficients().rend(); ++c) scale = scale * r + std::abs(*c);
    if (std::abs(f) <= 8.0 * kEps * scale) return true;
    const Complex d = dp(w);
    if (d == Complex(0.0)) return false;
    const Complex dw = f / d;
    w -= dw;
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
    if (std::abs(dw) <= 4.0 * kEps * r) return true;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------- Bivariate

Complex Bivariate::operator()(Complex z, Complex w) const {
  Complex v = 0.0;
  for (auto it = w_coeffs.rbegin(); it != w_coeffs.rend(); ++it) v = v * w + (*it)(z);
  return v;
}

CPoly Bivariate::at(Complex z) const {
  std::vector<Complex> a;
  a.reserve(w_coeffs.size());
  for (const auto& c : w_coeffs) a.push_back(c(z));
  return CPoly(std::move(a));
}

int Bivariate::degree_w() const {
  for (int k = static_cast<int>(w_coeffs.size()) - 1; k >= 0; --k)
    if (!w_coeffs[static_cast<std::size_t>(k)].is_zero()) return k;
  return -1;
}

int Bivariate::degree_z() const {
  int d = -1;
  for (const auto& c : w_coeffs) d = std::max(d, c.degree());
  return d;
}

CoverSlice::CoverSlice(Bivariate p) : p_(std::move(p)) {
  const int b = p_.degree_w();
  if (b < 1) throw Error("cover polynomial must have positive degree in w");
  p_.w_coeffs.resize(static_cast<std::size_t>(b) + 1);
  if (!(p_.w_coeffs.back() == CPoly::constant(1.0)))
    throw Error("cover polynomial must be monic in w (leading coefficient the constant 1)");
}

// ------------------------------------------------------------ branch locus

CPoly discriminant_in_z(const CoverSlice& c) {
  const std::size_t b = c.degree();
  if (b == 1) return CPoly::constant(1.0);
  const auto e = static_cast<std::size_t>(std::max(0, c.polynomial().degree_z()));
  // Each Sylvester entry has z-degree ≤ e and the matrix has 2b−1 rows.
  const std::size_t n = (2 * b - 1) * e + 1;
  std::vector<Complex> values(n);
  for (std::size_t j = 0; j < n; ++j) values[j] = discriminant(c.at(circle_point(1.0, 0.0, j, n)));
  CPoly d = clean(CPoly(interpolate_on_circle(values, 1.0, 0.0)), 1e-12);
  if (d.is_zero()) throw NotSquarefree("discriminant vanishes identically: the cover has a multiple factor");
  return d;
}

BranchLocus branch_locus(const CoverSlice& c, const SliceOptions& opts) {
  BranchLocus out;
  out.discriminant = discriminant_in_z(c);
  const CPoly& d = out.discriminant;
  if (d.degree() < 1) return out;
  const std::vector<Complex> raw = roots(d, 1e-10).roots;

  // Multiple discriminant roots come back as a small cloud; gather each cloud.
  std::vector<std::size_t> cluster(raw.size());
  std::iota(cluster.begin(), cluster.end(), 0);
  auto find = [&](std::size_t x) {
    while (cluster[x] != x) x = cluster[x] = cluster[cluster[x]];
    return x;
  };
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      const double scale = std::max({1.0, std::abs(raw[i]), std::abs(raw[j])});
      if (std::abs(raw[i] - raw[j]) <= opts.cluster_tol * scale) cluster[find(j)] = find(i);
    }

  std::vector<Complex> pts;
  std::vector<int> orders;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (find(i) != i) continue;
    Complex mean = 0.0;
    int k = 0;
    for (std::size_t j = 0; j < raw.size(); ++j)
      if (find(j) == i) {
        mean += raw[j];
        ++k;
      }
    mean /= static_cast<double>(k);
    // A root of order k of D is a simple root of D^(k−1).
    CPoly g = d;
    for (int s = 1; s < k; ++s) g = g.derivative();
    Complex x = mean;
    if (newton_polish(g, g.derivative(), x) &&
        std::abs(x - mean) <= opts.cluster_tol * std::max(1.0, std::abs(mean)))
      mean = x;
    pts.push_back(mean);
    orders.push_back(k);
  }

  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = pts.size(); j-- > i + 1;)
      if (std::abs(pts[i] - pts[j]) <= opts.dedup_tol * std::max(1.0, std::abs(pts[i]))) {
        orders[i] += orders[j];
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(j));
        orders.erase(orders.begin() + static_cast<std::ptrdiff_t>(j));
      }
  for (auto& p : pts) {
    const double s = 1e-13 * std::max(1.0, std::abs(p));
    p = Complex(snap(p.real(), s), snap(p.imag(), s));
  }

  std::vector<Complex> sorted = pts;
  canonical_sort(sorted);
  for (const Complex& p : sorted) {
    const auto it = std::find(pts.begin(), pts.end(), p);
    out.points.push_back(p);
    out.discriminant_order.push_back(orders[static_cast<std::size_t>(it - pts.begin())]);
  }
  return out;
}

std::vector<Complex> branch_points(const CoverSlice& c, const SliceOptions& opts) {
  return branch_locus(c, opts).points;
}

RootSet fiber(const CoverSlice& c, Complex z, const SliceOptions& opts) {
  const CPoly p = c.at(z);
  RootSet rs = roots(p, opts.root_tol);
  if (rs.roots.size() >= 2) {
    const double sep = min_separation(rs.roots);
    if (sep < opts.multiple_root_tol * root_bound(p))
      throw BranchProximity("fiber over z = " + fmt(z) + " has roots only " + std::to_string(sep) +
                            " apart; too close to the branch locus");
  }
  return rs;
}

// ----------------------------------------------------------------- tracking

TrackResult track(const CoverSlice& c, const std::vector<Complex>& path, const std::vector<Complex>& start,
                  const SliceOptions& opts) {
  if (path.empty()) throw Error("track: empty path");
  if (start.size() != c.degree()) throw DegreeMismatch("track: start fiber has the wrong number of roots");

  std::vector<Complex> cur = start;
  std::vector<Complex> next(cur.size());
  TrackResult out;
  out.min_separation = min_separation(cur);

  auto try_step = [&](Complex z1) {
    const CPoly p = c.at(z1);
    const CPoly dp = p.derivative();
    const double sep = min_separation(cur);
    for (std::size_t j = 0; j < cur.size(); ++j) {
      Complex w = cur[j];
      if (!newton_polish(p, dp, w)) return false;
      if (!(std::abs(w - cur[j]) < sep / 3.0)) return false;
      next[j] = w;
    }
    return true;
  };

  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Complex a = path[i];
    const Complex b = path[i + 1];
    const double len = std::abs(b - a);
    if (len == 0.0) continue;
    // Pieces shrink geometrically towards the origin, so the modulus never
    // drops by more than a factor 1 + max_step within one piece.
    double done = 0.0;
    while (done < len) {
      const Complex za = a + (b - a) * (done / len);
      const double piece = std::min(len - done, step_limit(opts.max_step, std::abs(za)) / (1.0 + opts.max_step));
      const bool last = done + piece >= len;
      const Complex zb = last ? b : a + (b - a) * ((done + piece) / len);
      done = last ? len : done + piece;
      double t = 0.0;
      double h = 1.0;
      while (t < 1.0) {
        const double hh = std::min(h, 1.0 - t);
        const Complex z1 = hh == 1.0 - t ? zb : za + (zb - za) * (t + hh);
        if (try_step(z1)) {
          std::swap(cur, next);
          t += hh;
          h = std::min(1.0, 2.0 * hh);
          ++out.steps;
          if (cur.size() >= 2) out.min_separation = std::min(out.min_separation, min_separation(cur));
        } else {
          h = hh / 2.0;
          if (h * std::abs(zb - za) < opts.min_step)
            throw TrackingFailure("path tracking stalled near z = " + fmt(za + (zb - za) * t));
        }
      }
    }
  }

  const std::vector<Complex> end = fiber(c, path.back(), opts).roots;
  std::vector<std::uint32_t> images(cur.size());
  for (std::size_t i = 0; i < cur.size(); ++i) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < end.size(); ++j)
      if (std::abs(cur[i] - end[j]) < std::abs(cur[i] - end[best])) best = j;
    if (std::abs(cur[i] - end[best]) > opts.match_tol * std::max(1.0, std::abs(end[best])))
      throw TrackingFailure("tracked root " + fmt(cur[i]) + " matches no root of the end fiber");
    images[i] = static_cast<std::uint32_t>(best);
  }
  std::vector<std::uint32_t> check = images;
  std::sort(check.begin(), check.end());
  if (std::adjacent_find(check.begin(), check.end()) != check.end())
    throw TrackingFailure("two tracked roots ended on the same root of the end fiber");
  out.permutation = Permutation(std::move(images));
  out.end_roots = std::move(cur);
  return out;
}

// ------------------------------------------------------------------- lassos

std::vector<Complex> Lasso::path(double max_step) const {
  std::vector<Complex> nodes = tail;
  const Complex entry = tail.back();
  const double a0 = std::arg(entry - center);
  const auto m =
      static_cast<std::size_t>(std::max(64.0, std::ceil(kTwoPi * radius / step_limit(max_step, radius))));
  for (std::size_t k = 1; k < m; ++k)
    nodes.push_back(center + std::polar(radius, a0 + kTwoPi * static_cast<double>(k) / static_cast<double>(m)));
  nodes.push_back(entry);
  for (std::size_t k = tail.size() - 1; k-- > 0;) nodes.push_back(tail[k]);
  return nodes;
}

Complex auto_basepoint(const std::vector<Complex>& branch) {
  double m = 0.0;
  for (const auto& c : branch) m = std::max(m, std::abs(c));
  return {m + 1.5, 0.0};
}

std::vector<Lasso> make_lassos(const std::vector<Complex>& branch, Complex basepoint, const SliceOptions& opts) {
  const std::size_t n = branch.size();
  std::vector<double> keep(n);
  std::vector<double> radius(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = clearance(branch, i, basepoint);
    if (!(d > 0.0)) throw Error("lasso: basepoint or branch points coincide");
    keep[i] = 0.5 * d;
    radius[i] = opts.lasso_radius_factor * d;
  }

  std::vector<Lasso> out;
  for (std::size_t i : lasso_order(branch, basepoint)) {
    Lasso l;
    l.basepoint = basepoint;
    l.center = branch[i];
    l.radius = radius[i];
    const Complex entry = branch[i] + radius[i] * (basepoint - branch[i]) / std::abs(basepoint - branch[i]);
    const double len = std::abs(entry - basepoint);
    const Complex dir = (entry - basepoint) / len;

    struct Obstacle {
      double t0, half, side;
      std::size_t j;
    };
    std::vector<Obstacle> obstacles;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Complex rel = std::conj(dir) * (branch[j] - basepoint);
      if (std::abs(rel.imag()) >= keep[j] || rel.real() <= 0.0 || rel.real() >= len) continue;
      const double half = std::sqrt(keep[j] * keep[j] - rel.imag() * rel.imag());
      obstacles.push_back({rel.real(), half, rel.imag(), j});
    }
    std::sort(obstacles.begin(), obstacles.end(), [](const Obstacle& a, const Obstacle& b) { return a.t0 < b.t0; });

    l.tail.push_back(basepoint);
    double reached = 0.0;
    for (const auto& o : obstacles) {
      if (o.t0 - o.half <= reached || o.t0 + o.half >= len)
        throw Error("lasso: cannot route the tail to " + fmt(branch[i]) + " around " + fmt(branch[o.j]));
      const Complex in = basepoint + dir * (o.t0 - o.half);
      const Complex out_pt = basepoint + dir * (o.t0 + o.half);
      l.tail.push_back(in);
      // Keep the obstacle on the side where it lies; collinear ones stay on the right.
      const bool ccw = o.side > kTieTol * std::abs(branch[o.j] - basepoint);
      append_arc(l.tail, branch[o.j], in, out_pt, ccw, opts.max_step);
      reached = o.t0 + o.half;
    }
    l.tail.push_back(entry);
    out.push_back(std::move(l));
  }
  return out;
}

Permutation lasso_monodromy(const CoverSlice& c, const Lasso& l, const SliceOptions& opts) {
  const RootSet base = fiber(c, l.basepoint, opts);
  return track(c, l.path(opts.max_step), base.roots, opts).permutation;
}

// ---------------------------------------------------------- full monodromy

SliceMonodromy full_monodromy(const CoverSlice& c, std::optional<Complex> basepoint, const SliceOptions& opts) {
  BranchLocus locus = branch_locus(c, opts);
  const Complex base = basepoint.value_or(auto_basepoint(locus.points));
  const std::size_t b = c.degree();
  RootSet fib = fiber(c, base, opts);
  if (locus.points.empty() && b > 1)
    throw NotConnected("cover has " + std::to_string(b) + " sheets and no branch points, so it splits");

  for (const auto& p : locus.points)
    if (std::abs(p - base) <= opts.dedup_tol * std::max(1.0, std::abs(p)))
      throw BranchProximity("basepoint lies on the branch locus");

  const std::vector<std::size_t> order = lasso_order(locus.points, base);
  BranchLocus ordered{locus.discriminant, {}, {}};
  for (std::size_t i : order) {
    ordered.points.push_back(locus.points[i]);
    ordered.discriminant_order.push_back(locus.discriminant_order[i]);
  }
  std::vector<Lasso> lassos = make_lassos(locus.points, base, opts);

  std::vector<Permutation> perms;
  std::size_t steps = 0;
  double min_sep = b >= 2 ? min_separation(fib.roots) : std::numeric_limits<double>::infinity();
  for (const Lasso& l : lassos) {
    TrackResult r = track(c, l.path(opts.max_step), fib.roots, opts);
    steps += r.steps;
    min_sep = std::min(min_sep, r.min_separation);
    perms.push_back(std::move(r.permutation));
  }

  // Boundary circle reached along a ray leaving the basepoint just clockwise
  // of angle 0, so it follows every lasso in angular order.
  double big = std::abs(base);
  for (const auto& p : locus.points) big = std::max(big, std::abs(p));
  const double R = big + 1.0;
  std::vector<double> keep(locus.points.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = 0.5 * clearance(locus.points, i, base);
  std::optional<Complex> exit_point;
  for (int k = 0; k < 200 && !exit_point; ++k) {
    const double delta = 0.01 * k;
    const Complex u = std::polar(1.0, -delta);
    const double proj = (std::conj(u) * base).real();
    const double t = -proj + std::sqrt(proj * proj - std::norm(base) + R * R);
    bool clear = true;
    for (std::size_t i = 0; clear && i < locus.points.size(); ++i) {
      const Complex rel = std::conj(u) * (locus.points[i] - base);
      const double along = std::clamp(rel.real(), 0.0, t);
      if (std::abs(rel - Complex(along, 0.0)) <= keep[i]) clear = false;
      const double a = arg_0_2pi(locus.points[i] - base);
      if (k > 0 && a >= kTwoPi - delta) clear = false;
    }
    if (clear) exit_point = base + t * u;
  }
  if (!exit_point) throw NumericFailure("no clear ray from the basepoint to the boundary circle");
  std::vector<Complex> loop{base, *exit_point};
  const double a0 = std::arg(*exit_point);
  const auto m = static_cast<std::size_t>(std::max(128.0, std::ceil(kTwoPi * R / step_limit(opts.max_step, R))));
  for (std::size_t k = 1; k < m; ++k) loop.push_back(std::polar(R, a0 + kTwoPi * static_cast<double>(k) / static_cast<double>(m)));
  loop.push_back(*exit_point);
  loop.push_back(base);
  TrackResult boundary = track(c, loop, fib.roots, opts);
  steps += boundary.steps;
  min_sep = std::min(min_sep, boundary.min_separation);

  Permutation product = Permutation::identity(b);
  for (const auto& p : perms) product = compose(product, p);
  if (!(product == boundary.permutation))
    throw NumericFailure("lasso product " + to_cycle_string(product) + " differs from the boundary circle " +
                         to_cycle_string(boundary.permutation));

  std::vector<std::string> names;
  for (std::size_t i = 1; i <= lassos.size(); ++i) names.push_back("lasso" + std::to_string(i));
  MonodromyRep rep(Presentation::free(Alphabet(std::move(names))), perms);
  return SliceMonodromy{std::move(ordered), base,  std::move(fib), std::move(lassos), std::move(perms),
                        std::move(rep),     std::move(boundary.permutation),          steps, min_sep};
}

MonodromyRep named_loop_rep(const SliceMonodromy& m, const std::vector<std::pair<std::string, std::string>>& loops) {
  std::vector<std::string> names;
  std::vector<Permutation> images;
  for (const auto& [name, text] : loops) {
    names.push_back(name);
    images.push_back(m.rep.evaluate(parse_word(m.rep.alphabet(), text)));
  }
  if (images.empty()) throw Error("named_loop_rep: no loops given");
  return MonodromyRep(Presentation::free(Alphabet(std::move(names))), std::move(images));
}

std::uint32_t sheet_approaching(const CoverSlice& c, const SliceMonodromy& m, Complex branch_point, Complex w,
                                const SliceOptions& opts) {
  const Lasso* lasso = nullptr;
  for (const auto& l : m.lassos)
    if (!lasso || std::abs(l.center - branch_point) < std::abs(lasso->center - branch_point)) lasso = &l;
  if (!lasso || std::abs(lasso->center - branch_point) > 1e-6 * std::max(1.0, std::abs(branch_point)))
    throw Error("sheet_approaching: " + fmt(branch_point) + " is not a branch point");

  std::vector<Complex> path = lasso->tail;
  const Complex entry = path.back();
  path.push_back(lasso->center + 1e-4 * (entry - lasso->center));
  const TrackResult r = track(c, path, m.fiber.roots, opts);

  std::vector<std::size_t> idx(r.end_roots.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return std::abs(r.end_roots[a] - w) < std::abs(r.end_roots[b] - w); });
  if (idx.size() >= 2 && !(std::abs(r.end_roots[idx[0]] - w) < 0.5 * std::abs(r.end_roots[idx[1]] - w)))
    throw Error("sheet_approaching: " + fmt(w) + " does not single out one sheet near " + fmt(branch_point));
  return static_cast<std::uint32_t>(idx[0]);
}

// --------------------------------------------------------------- Weierstrass

std::vector<CPoly> weierstrass_poly_of_function(const CoverSlice& c, const Bivariate& h, const SliceOptions& opts) {
  const std::size_t b = c.degree();
  const int e = std::max(0, c.polynomial().degree_z());
  const int dz = std::max(0, h.degree_z());
  const int dw = std::max(0, h.degree_w());
  // Roots grow at most like |z|^e, so e_k(h(z, w_j)) has degree ≤ k·(dz + dw·e).
  const auto bound = static_cast<std::size_t>(static_cast<int>(b) * (dz + dw * e));
  const std::size_t n = bound + 2;
  const std::vector<Complex> branch = branch_points(c, opts);

  auto sym = [&](Complex z) {
    CPoly prod = CPoly::constant(1.0);
    for (const Complex& w : fiber(c, z, opts).roots) prod = prod * CPoly({-h(z, w), 1.0});
    std::vector<Complex> a(b + 1, 0.0);
    for (int k = 0; k <= prod.degree(); ++k) a[static_cast<std::size_t>(k)] = prod.coefficient(k);
    return a;
  };

  for (int attempt = 0; attempt < 32; ++attempt) {
    const double radius = 1.0 + 0.25 * (attempt / 8);
    const double phase = attempt * 0.6180339887498949 * kTwoPi / static_cast<double>(n);
    std::vector<std::vector<Complex>> samples(b + 1, std::vector<Complex>(n));
    bool ok = true;
    for (std::size_t j = 0; ok && j < n; ++j) {
      const Complex z = circle_point(radius, phase, j, n);
      for (const auto& p : branch)
        if (std::abs(z - p) < 1e-2 * radius) ok = false;
      if (!ok) break;
      try {
        const auto a = sym(z);
        for (std::size_t k = 0; k <= b; ++k) samples[k][j] = a[k];
      } catch (const BranchProximity&) {
        ok = false;
      }
    }
    if (!ok) continue;

    std::vector<CPoly> out;
    double top = 0.0;
    double big = 0.0;
    for (std::size_t k = 0; k <= b; ++k) {
      const std::vector<Complex> coeffs = interpolate_on_circle(samples[k], radius, phase);
      for (const auto& x : coeffs) big = std::max(big, std::abs(x));
      top = std::max(top, std::abs(coeffs.back()));
      out.push_back(CPoly(coeffs));
    }
    if (top > 1e-9 * std::max(1.0, big))
      throw NumericFailure("weierstrass: interpolation degree exceeds the bound " + std::to_string(bound));

    for (auto& p : out) p = clean(p, 1e-12);
    out[b] = CPoly::constant(1.0);

    // Off-grid residual check.
    const Complex zv = circle_point(0.75 * radius, phase + 0.5 * kTwoPi / static_cast<double>(n), 0, n);
    try {
      const auto direct = sym(zv);
      for (std::size_t k = 0; k <= b; ++k)
        if (std::abs(out[k](zv) - direct[k]) > 1e-8 * std::max(1.0, std::abs(direct[k])))
          throw NumericFailure("weierstrass: interpolated coefficient a_" + std::to_string(k) +
                               " misses the direct value at a check point");
    } catch (const BranchProximity&) {
      // Check point happened to sit on the branch locus; the degree check stands alone.
    }
    return out;
  }
  throw NumericFailure("weierstrass: no sample circle avoids the branch locus");
}

bool separates_fiber(const CoverSlice& c, const Bivariate& h, Complex z, const SliceOptions& opts) {
  const RootSet f = fiber(c, z, opts);
  std::vector<Complex> values;
  double scale = 1.0;
  for (const auto& w : f.roots) {
    values.push_back(h(z, w));
    scale = std::max(scale, std::abs(values.back()));
  }
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (std::abs(values[i] - values[j]) <= 1e-8 * scale) return false;
  return true;
}

}  // namespace covext
