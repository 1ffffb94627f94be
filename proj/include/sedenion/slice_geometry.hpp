#pragma once

/// \file slice_geometry.hpp
/// Slice units (sedenions s with L_s^2 = -id), their polar coordinates, the
/// psi parametrization, hyper-solution pairs and the kernel curve through a
/// pair, and points of the slice cone written as x + y I.

#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "sedenion/cd_core.hpp"
#include "sedenion/zero_structure.hpp"

namespace sedenion {

inline constexpr double slice_tol = 1e-9;

inline bool is_slice_unit(const element& s) {
  const matrix16 l = left_mult_matrix(s).matrix;
  const matrix16 sq = l * l + matrix16::Identity();
  return sq.cwiseAbs().maxCoeff() <= slice_tol;
}

/// Polar data of a slice unit: s = sin(a)cos(t) j + (cos(a) + sin(a)sin(t) j) e8.
/// The trigonometric values are kept alongside the angles; they come straight
/// from the coordinates, so basis-aligned units stay exact.
struct polar_coordinates {
  double alpha = 0.0;
  double theta = 0.0;
  element jmath = element::basis(1, 3);
  double cos_alpha = 1.0;
  double sin_alpha = 0.0;
  double cos_theta = 1.0;
  double sin_theta = 0.0;
};

namespace detail {

inline polar_coordinates polar_from_coordinates(const element& s) {
  const element u = o_left(s);
  element v = o_right(s);
  polar_coordinates pc;
  pc.cos_alpha = v[0];
  v[0] = 0.0;
  const double nu = norm(u);
  const double nv = norm(v);
  pc.sin_alpha = std::hypot(nu, nv);
  if (pc.sin_alpha < 1e-12) {
    pc.cos_alpha = pc.cos_alpha >= 0.0 ? 1.0 : -1.0;
    pc.sin_alpha = 0.0;
    pc.alpha = pc.cos_alpha > 0.0 ? 0.0 : std::numbers::pi;
    return pc;
  }
  pc.alpha = std::atan2(pc.sin_alpha, pc.cos_alpha);
  if (nv > 1e-12 * pc.sin_alpha) {
    pc.jmath = v / nv;
    double st = nv / pc.sin_alpha;
    double ct = inner(u, pc.jmath) / pc.sin_alpha;
    const double h = std::hypot(ct, st);
    pc.cos_theta = ct / h;
    pc.sin_theta = st / h;
  } else {
    pc.jmath = u / nu;
  }
  pc.theta = std::atan2(pc.sin_theta, pc.cos_theta);
  if (pc.theta >= std::numbers::pi) {
    pc.theta = 0.0;
    pc.cos_theta = 1.0;
    pc.sin_theta = 0.0;
    pc.jmath = -pc.jmath;
  }
  return pc;
}

}  // namespace detail

/// A sedenion whose left multiplication squares to minus the identity, with
/// its polar coordinates cached at construction.
class slice_unit {
 public:
  /// Validates `s`; throws argument_error if it is not a slice unit.
  explicit slice_unit(const element& s) : slice_unit(s.promoted(max_level), 0) {
    if (!is_slice_unit(s_)) throw argument_error("not a slice unit");
  }

  /// Skips the L_s^2 = -id check; for values produced by psi and similar.
  static slice_unit trusted(const element& s) { return slice_unit(s.promoted(max_level), 0); }

  const element& value() const { return s_; }
  const polar_coordinates& polar() const { return polar_; }
  double alpha() const { return polar_.alpha; }
  double theta() const { return polar_.theta; }
  const element& jmath() const { return polar_.jmath; }

  /// True for +e8 and -e8, where theta and j are fixed by convention.
  bool is_pole() const { return polar_.sin_alpha == 0.0; }

  slice_unit operator-() const { return trusted(-s_); }

  /// Coefficient distance below 1e-9.
  bool approx_equal(const slice_unit& o, double tol = slice_tol) const {
    return norm(s_ - o.s_) < tol;
  }

 private:
  slice_unit(const element& s, int) : s_(s), polar_(detail::polar_from_coordinates(s)) {}

  element s_;
  polar_coordinates polar_;
};

/// The base slice used for real points.
inline slice_unit base_slice() { return slice_unit::trusted(e(1)); }

inline polar_coordinates polar(const element& s) { return slice_unit(s).polar(); }

// ---------------------------------------------------------------------------
// psi

/// An orthonormal pair of imaginary octonions.
struct octonion_frame {
  element i1 = element::basis(1, 3);
  element i2 = element::basis(2, 3);
};

inline void validate_frame(const octonion_frame& f) {
  const element a = as_octonion(f.i1);
  const element b = as_octonion(f.i2);
  const bool ok = std::abs(a[0]) <= slice_tol && std::abs(b[0]) <= slice_tol &&
                  std::abs(norm(a) - 1.0) <= slice_tol && std::abs(norm(b) - 1.0) <= slice_tol &&
                  std::abs(inner(a, b)) <= slice_tol;
  if (!ok) throw argument_error("frame must be two orthonormal imaginary octonions");
}

/// psi from cosines and sines of alpha and theta.
inline slice_unit psi_trig(double cos_alpha, double sin_alpha, double cos_theta, double sin_theta,
                           const octonion_frame& f) {
  validate_frame(f);
  const element kappa = cos_theta * as_octonion(f.i1) + sin_theta * as_octonion(f.i2);
  const element u = (sin_alpha * cos_theta) * kappa;
  element v = (sin_alpha * sin_theta) * kappa;
  v[0] += cos_alpha;
  return slice_unit::trusted(from_octonions(u, v));
}

inline slice_unit psi(double alpha, double theta, const octonion_frame& f) {
  return psi_trig(std::cos(alpha), std::sin(alpha), std::cos(theta), std::sin(theta), f);
}

// ---------------------------------------------------------------------------
// Hyper-solutions

inline bool is_hyper_solution(const slice_unit& j1, const slice_unit& j2) {
  if (j1.approx_equal(j2)) throw argument_error("is_hyper_solution requires J1 != J2");
  return is_zero_divisor(j1.value() - j2.value());
}

/// A hyper-solution pair with its shared alpha and the frame that places both
/// units on one psi-curve.
struct hyper_solution {
  slice_unit j1;
  slice_unit j2;
  double alpha;
  double cos_alpha;
  double sin_alpha;
  octonion_frame frame;
};

inline hyper_solution iota_frame(const slice_unit& j1, const slice_unit& j2) {
  if (!is_hyper_solution(j1, j2)) throw argument_error("iota_frame: pair is a slice-solution");
  const auto& p1 = j1.polar();
  const auto& p2 = j2.polar();
  const double det = p1.cos_theta * p2.sin_theta - p1.sin_theta * p2.cos_theta;
  if (std::abs(det) < 1e-12) throw argument_error("iota_frame: equal theta coordinates");
  octonion_frame f;
  f.i1 = (p2.sin_theta * p1.jmath - p1.sin_theta * p2.jmath) / det;
  f.i2 = (p1.cos_theta * p2.jmath - p2.cos_theta * p1.jmath) / det;
  return {j1, j2, p1.alpha, p1.cos_alpha, p1.sin_alpha, f};
}

/// Max coefficient residual of j_l = psi(alpha, theta_l, frame) for both units.
inline double frame_residual(const hyper_solution& h) {
  double worst = 0.0;
  for (const slice_unit* j : {&h.j1, &h.j2}) {
    const auto& p = j->polar();
    const slice_unit r = psi_trig(h.cos_alpha, h.sin_alpha, p.cos_theta, p.sin_theta, h.frame);
    worst = std::max(worst, norm(r.value() - j->value()));
  }
  return worst;
}

/// Point of the kernel curve through (j1, j2) at parameter theta.
inline slice_unit cker_curve_point(const slice_unit& j1, const slice_unit& j2, double theta) {
  const hyper_solution h = iota_frame(j1, j2);
  return psi_trig(h.cos_alpha, h.sin_alpha, std::cos(theta), std::sin(theta), h.frame);
}

/// Whether ker(J1 - J2) is contained in ker(J1 - K), i.e. K lies on the
/// kernel curve of the pair.
inline bool cker_membership(const slice_unit& k, const slice_unit& j1, const slice_unit& j2) {
  if (!is_hyper_solution(j1, j2)) throw argument_error("cker_membership: not a hyper-solution");
  const subspace ker = kernel_of_left_mult(j1.value() - j2.value());
  const matrix16 diff = left_mult_matrix(j1.value() - k.value()).matrix;
  for (const auto& c : ker.basis()) {
    if ((diff * c).norm() > 1e-8) return false;
  }
  return true;
}

/// Same question answered by rebuilding K from the pair's frame.
inline bool cker_membership_by_frame(const slice_unit& k, const slice_unit& j1,
                                     const slice_unit& j2) {
  const hyper_solution h = iota_frame(j1, j2);
  const auto& pk = k.polar();
  const slice_unit r = psi_trig(h.cos_alpha, h.sin_alpha, pk.cos_theta, pk.sin_theta, h.frame);
  return norm(r.value() - k.value()) < slice_tol;
}

/// Kernel pairs (-J1 c, c) for c in ker(J1 - J2).
inline std::vector<std::pair<element, element>> kernel_zeta(const slice_unit& j1,
                                                            const slice_unit& j2) {
  std::vector<std::pair<element, element>> out;
  for (const auto& c : kernel_of_left_mult(j1.value() - j2.value()).basis_elements()) {
    out.emplace_back(-(j1.value() * c), c);
  }
  return out;
}

/// Dimension of the null space of the 32 x 32 block operator
/// (x, y) -> (x + J1 y, x + J2 y), computed without going through J1 - J2.
inline int zeta_nullity(const slice_unit& j1, const slice_unit& j2) {
  Eigen::MatrixXd m(32, 32);
  m.topLeftCorner(16, 16) = matrix16::Identity();
  m.bottomLeftCorner(16, 16) = matrix16::Identity();
  m.topRightCorner(16, 16) = left_mult_matrix(j1.value()).matrix;
  m.bottomRightCorner(16, 16) = left_mult_matrix(j2.value()).matrix;
  return static_cast<int>(null_space(m).cols());
}

/// A slice unit K != I with c in ker(I - K), if one exists.
///
/// Writes c = d1 + d2 e8. Such a K exists only when d1 and d2 are imaginary
/// with equal nonzero norms; K then sits a quarter turn from I along the psi
/// curve whose frame is rotated from (j_I, kappa), kappa = -j_I (d2 d1^{-1}).
inline std::optional<slice_unit> find_companion(const slice_unit& i, const element& c) {
  if (i.is_pole()) return std::nullopt;
  const element cs = c.promoted(max_level);
  const double nc = norm(cs);
  if (nc == 0.0) return std::nullopt;
  const element d1 = o_left(cs);
  const element d2 = o_right(cs);
  const double n1 = norm(d1);
  const double n2 = norm(d2);
  if (n1 <= 1e-12 * nc || n2 <= 1e-12 * nc) return std::nullopt;
  if (std::abs(n1 - n2) > 1e-9 * nc) return std::nullopt;
  if (std::abs(d1[0]) > 1e-9 * nc || std::abs(d2[0]) > 1e-9 * nc) return std::nullopt;

  const auto& p = i.polar();
  const element d1_inv = conjugate(d1) / (n1 * n1);
  const element kappa = -cd_mul(p.jmath, cd_mul(d2, d1_inv));
  if (std::abs(norm(kappa) - 1.0) > 1e-8 || std::abs(inner(kappa, p.jmath)) > 1e-8 ||
      std::abs(kappa[0]) > 1e-8) {
    return std::nullopt;
  }
  octonion_frame f;
  f.i1 = p.cos_theta * p.jmath - p.sin_theta * kappa;
  f.i2 = p.sin_theta * p.jmath + p.cos_theta * kappa;
  double ct = -p.sin_theta;
  double st = p.cos_theta;
  if (st < 0.0 || (st == 0.0 && ct < 0.0)) {
    ct = -ct;
    st = -st;
  }
  const slice_unit k = psi_trig(p.cos_alpha, p.sin_alpha, ct, st, f);
  if (norm((i.value() - k.value()) * cs) >= 1e-8 * nc) return std::nullopt;
  return k;
}

// ---------------------------------------------------------------------------
// Sampling

inline constexpr std::uint64_t default_seed = 20240611;

inline element random_imaginary_octonion(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  element x(3);
  for (std::size_t m = 1; m < 8; ++m) x[m] = g(rng);
  return x;
}

inline octonion_frame random_frame(std::mt19937_64& rng) {
  for (;;) {
    element a = random_imaginary_octonion(rng);
    element b = random_imaginary_octonion(rng);
    const double na = norm(a);
    if (na < 1e-6) continue;
    a /= na;
    b -= inner(a, b) * a;
    const double nb = norm(b);
    if (nb < 1e-6) continue;
    return {a, b / nb};
  }
}

inline slice_unit random_slice_unit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> alpha(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> theta(0.0, std::numbers::pi);
  const double a = alpha(rng);
  const double t = theta(rng);
  return psi(a, t, random_frame(rng));
}

/// Two units on one psi-curve: shared alpha and frame, distinct theta.
inline std::pair<slice_unit, slice_unit> random_hyper_pair(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> alpha(0.05, std::numbers::pi - 0.05);
  std::uniform_real_distribution<double> theta(0.0, std::numbers::pi);
  const double a = alpha(rng);
  const octonion_frame f = random_frame(rng);
  const double t1 = theta(rng);
  double t2 = theta(rng);
  while (std::abs(t1 - t2) < 1e-2 || std::abs(std::abs(t1 - t2) - std::numbers::pi) < 1e-2) {
    t2 = theta(rng);
  }
  return {psi(a, t1, f), psi(a, t2, f)};
}

// ---------------------------------------------------------------------------
// Points of the slice cone

/// q = re + im * axis with im >= 0; real points use the base slice.
struct wpoint {
  element value;
  double re = 0.0;
  double im = 0.0;
  slice_unit axis = base_slice();

  complex_point z() const { return {re, im}; }
  bool is_real() const { return im == 0.0; }

  static wpoint from_element(const element& q) {
    const element s = q.promoted(max_level);
    wpoint w;
    w.value = s;
    w.re = s[0];
    const element v = imaginary(s);
    const double nv = norm(v);
    if (nv < 1e-12) {
      w.value = element::real(w.re);
      return w;
    }
    w.im = nv;
    w.axis = slice_unit(v / nv);
    return w;
  }

  /// x + y I, flipping to -I when y < 0.
  static wpoint on_slice(complex_point z, const slice_unit& unit) {
    wpoint w;
    w.re = z.real();
    if (z.imag() == 0.0) {
      w.value = element::real(w.re);
      return w;
    }
    w.axis = z.imag() > 0.0 ? unit : -unit;
    w.im = std::abs(z.imag());
    w.value = complex_embed({w.re, w.im}, w.axis.value());
    return w;
  }
};

}  // namespace sedenion
