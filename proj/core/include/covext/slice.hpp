#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covext/cpoly.hpp"
#include "covext/monodromy.hpp"
#include "covext/perm.hpp"

namespace covext {

/// Polynomial in (z, w) stored as one z-polynomial per power of w.
struct Bivariate {
  std::vector<CPoly> w_coeffs;

  Complex operator()(Complex z, Complex w) const;
  /// The polynomial in w obtained by fixing z.
  CPoly at(Complex z) const;
  int degree_w() const;
  int degree_z() const;
};

/// P(z, w) = w^b + a_{b-1}(z) w^{b-1} + ... + a_0(z), a b-sheeted cover of
/// the z-line away from its branch points.
class CoverSlice {
 public:
  /// Throws Error unless b ≥ 1 and the w^b coefficient is the constant 1.
  explicit CoverSlice(Bivariate p);

  std::size_t degree() const noexcept { return static_cast<std::size_t>(p_.degree_w()); }
  const Bivariate& polynomial() const noexcept { return p_; }
  CPoly at(Complex z) const { return p_.at(z); }

 private:
  Bivariate p_;
};

struct SliceOptions {
  double root_tol = 1e-12;
  /// Tracked end roots must land within this distance (relative to max(1,|w|))
  /// of a root of the end fiber.
  double match_tol = 1e-8;
  double dedup_tol = 1e-8;
  /// Discriminant roots closer than this (relative) form one branch point.
  double cluster_tol = 1e-3;
  /// Fibers whose separation is below this times the root bound are rejected.
  double multiple_root_tol = 1e-6;
  double lasso_radius_factor = 0.4;
  /// Longest straight step handed to the corrector, relative to max(1, |z|).
  double max_step = 0.02;
  double min_step = 1e-12;
};

/// Disc_w P(z, ·) as a polynomial in z, interpolated from values at roots of
/// unity. Throws NotSquarefree if it vanishes identically.
CPoly discriminant_in_z(const CoverSlice& c);

struct BranchLocus {
  CPoly discriminant;
  /// Canonically sorted.
  std::vector<Complex> points;
  /// Vanishing order of the discriminant at each point.
  std::vector<int> discriminant_order;
};

BranchLocus branch_locus(const CoverSlice& c, const SliceOptions& opts = {});
std::vector<Complex> branch_points(const CoverSlice& c, const SliceOptions& opts = {});

/// Canonically sorted roots of P(z, ·). Throws BranchProximity if two roots
/// are closer than multiple_root_tol · root_bound.
RootSet fiber(const CoverSlice& c, Complex z, const SliceOptions& opts = {});

struct TrackResult {
  /// end_roots[i] continues start[i].
  std::vector<Complex> end_roots;
  /// Sends i to the index of end_roots[i] in the canonical fiber at the end.
  Permutation permutation;
  std::size_t steps = 0;
  double min_separation = 0.0;
};

/// Continues the roots `start` of P(path.front(), ·) along the polyline
/// `path`. Each edge is cut into steps of at most max_step·max(1, |z|); a
/// step is kept only if every corrected root stays within a third of the
/// current minimal root separation of its predecessor, otherwise it is
/// halved. Throws TrackingFailure when the step falls below min_step.
TrackResult track(const CoverSlice& c, const std::vector<Complex>& path, const std::vector<Complex>& start,
                  const SliceOptions& opts = {});

/// Straight tail from the basepoint, bent around intervening branch points,
/// then one counterclockwise turn of radius `radius` about `center`.
struct Lasso {
  Complex basepoint;
  Complex center;
  double radius = 0.0;
  /// From the basepoint to the point of the circle facing it.
  std::vector<Complex> tail;

  std::vector<Complex> path(double max_step) const;
};

/// One lasso per branch point, sorted by arg(c − basepoint) in [0, 2π) with
/// ties broken by modulus.
std::vector<Lasso> make_lassos(const std::vector<Complex>& branch, Complex basepoint, const SliceOptions& opts = {});

/// Real point exceeding the largest branch-point modulus by 1.5.
Complex auto_basepoint(const std::vector<Complex>& branch);

Permutation lasso_monodromy(const CoverSlice& c, const Lasso& l, const SliceOptions& opts = {});

struct SliceMonodromy {
  BranchLocus branch;  ///< points reordered to match the lassos
  Complex basepoint;
  RootSet fiber;
  std::vector<Lasso> lassos;
  std::vector<Permutation> lasso_permutations;
  /// Over the free group on lasso1, lasso2, ... in lasso order.
  MonodromyRep rep;
  /// Monodromy of one large counterclockwise circle; equals the product of
  /// the lasso permutations.
  Permutation boundary;
  std::size_t steps = 0;
  double min_root_separation = 0.0;
};

/// Throws NumericFailure if the lasso product disagrees with the boundary
/// circle.
SliceMonodromy full_monodromy(const CoverSlice& c, std::optional<Complex> basepoint = std::nullopt,
                              const SliceOptions& opts = {});

/// Representation of the free group on the given loop names, each loop
/// being a word over lasso1, lasso2, ...
MonodromyRep named_loop_rep(const SliceMonodromy& m, const std::vector<std::pair<std::string, std::string>>& loops);

/// Index in the basepoint fiber of the sheet that, followed along the tail
/// of the lasso about `branch_point`, runs into the root nearest to `w`.
std::uint32_t sheet_approaching(const CoverSlice& c, const SliceMonodromy& m, Complex branch_point, Complex w,
                                const SliceOptions& opts = {});

/// Coefficients a_0(z), ..., a_b(z) of ∏_j (ζ − h(z, w_j)) as polynomials in
/// z, index = power of ζ.
std::vector<CPoly> weierstrass_poly_of_function(const CoverSlice& c, const Bivariate& h,
                                                const SliceOptions& opts = {});

/// Whether h(z, ·) takes pairwise distinct values on the fiber over z.
bool separates_fiber(const CoverSlice& c, const Bivariate& h, Complex z, const SliceOptions& opts = {});

}  // namespace covext
