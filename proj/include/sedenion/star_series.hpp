#pragma once

/// \file star_series.hpp
/// Power series sum (q - p)^{*l} a_l with sedenion coefficients: star
/// products of polynomials, the two convergence radii, membership in the
/// convergence domain and numerical evaluation through the representation
/// formula.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <compare>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sedenion/cd_core.hpp"
#include "sedenion/slice_geometry.hpp"
#include "sedenion/zero_structure.hpp"

namespace sedenion {

// ---------------------------------------------------------------------------
// Extended reals

/// A radius in [0, +inf] with 1/0 = inf and 1/inf = 0.
class extended_real {
 public:
  constexpr extended_real() = default;
  constexpr extended_real(double v) : v_(v) {}  // NOLINT: implicit on purpose

  static constexpr extended_real infinity() {
    return extended_real(std::numeric_limits<double>::infinity());
  }

  constexpr double value() const { return v_; }
  constexpr bool is_infinite() const { return v_ == std::numeric_limits<double>::infinity(); }

  constexpr extended_real reciprocal() const {
    if (v_ == 0.0) return infinity();
    if (is_infinite()) return 0.0;
    return 1.0 / v_;
  }

  friend constexpr auto operator<=>(const extended_real&, const extended_real&) = default;

 private:
  double v_ = 0.0;
};

inline std::string to_string(const extended_real& r) {
  if (r.is_infinite()) return "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", r.value());
  return buf;
}

// ---------------------------------------------------------------------------
// Polynomials in a left variable

/// sum_n q^n c_n, stored by degree with trailing zeros trimmed.
class polynomial {
 public:
  polynomial() = default;
  explicit polynomial(std::vector<element> coeffs) : c_(std::move(coeffs)) { trim(); }

  static polynomial constant(const element& c) { return polynomial({c.promoted(max_level)}); }

  const std::vector<element>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  element coeff(std::size_t n) const { return n < c_.size() ? c_[n] : element{}; }

  /// Multiplies every coefficient by c on the right.
  polynomial times_right(const element& c) const {
    std::vector<element> out;
    for (const auto& x : c_) out.push_back(x * c);
    return polynomial(std::move(out));
  }

  /// Value at a point q: sum_n q^n c_n, with q^n computed inside its slice.
  element evaluate(const wpoint& q) const {
    element acc;
    std::complex<double> qn(1.0, 0.0);
    const std::complex<double> z = q.z();
    for (const auto& c : c_) {
      acc += qn.real() * c + qn.imag() * (q.axis.value() * c);
      qn *= z;
    }
    return acc;
  }

  friend bool operator==(const polynomial& a, const polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    for (auto& x : c_) x = x.promoted(max_level);
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<element> c_;
};

/// Cauchy product of the coefficient sequences.
inline polynomial star_mul(const polynomial& p, const polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<element> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += cd_mul(a[i], b[j]);
  }
  return polynomial(std::move(out));
}

namespace detail {

inline std::optional<std::uint64_t> checked_binomial(std::uint64_t n, std::uint64_t k) {
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    std::uint64_t m = 0;
    if (__builtin_mul_overflow(r, n - k + i, &m)) return std::nullopt;
    r = m / i;
  }
  return r;
}

}  // namespace detail

/// (q - p)^{*l} with p's powers taken in its own slice.
inline polynomial star_pow_center(const wpoint& p, int ell) {
  if (ell < 0) throw argument_error("star_pow_center: negative exponent");
  const auto n = static_cast<std::uint64_t>(ell);
  std::vector<element> out(n + 1);
  std::complex<double> neg_pow(1.0, 0.0);
  const std::complex<double> neg_z = -p.z();
  for (std::uint64_t i = 0; i <= n; ++i) {
    const auto b = detail::checked_binomial(n, i);
    if (!b) {
      const polynomial factor({-p.value, element::real(1.0)});
      polynomial acc = polynomial::constant(element::real(1.0));
      for (int k = 0; k < ell; ++k) acc = star_mul(acc, factor);
      return acc;
    }
    const std::complex<double> c = static_cast<double>(*b) * neg_pow;
    out[n - i] = complex_embed(c, p.axis.value());
    neg_pow *= neg_z;
  }
  return polynomial(std::move(out));
}

// ---------------------------------------------------------------------------
// Coefficient sequences

struct geometric_term {
  element coeff;
  double ratio = 1.0;
};

/// Structured coefficient sequence a_l.
///  - geometric: a_l = sum_i c_i r_i^{-l}
///  - lacunary:  a_l = c r^{-l} when l is a power of two (l >= 1), else 0
///  - table:     finitely many listed values, zero afterwards
struct seq_spec {
  enum class kind { geometric, lacunary, table };

  kind form = kind::geometric;
  std::vector<geometric_term> terms;  // geometric; lacunary uses terms[0]
  std::vector<element> table;
  std::vector<slice_unit> candidates;  // extra slices tried for table radii

  static seq_spec geometric(std::vector<geometric_term> t) {
    for (const auto& x : t) {
      if (!(x.ratio > 0.0) || !std::isfinite(x.ratio)) {
        throw argument_error("geometric ratios must be positive and finite");
      }
    }
    seq_spec s;
    s.form = kind::geometric;
    s.terms = std::move(t);
    for (auto& x : s.terms) x.coeff = x.coeff.promoted(max_level);
    return s;
  }

  static seq_spec lacunary(const element& c, double ratio) {
    seq_spec s = geometric({{c, ratio}});
    s.form = kind::lacunary;
    return s;
  }

  static seq_spec tabulated(std::vector<element> values) {
    seq_spec s;
    s.form = kind::table;
    for (auto& v : values) s.table.push_back(v.promoted(max_level));
    return s;
  }

  bool approximate() const { return form == kind::table; }

  element coefficient(std::size_t ell) const {
    switch (form) {
      case kind::geometric: {
        element a;
        for (const auto& t : terms) a += std::pow(t.ratio, -static_cast<double>(ell)) * t.coeff;
        return a;
      }
      case kind::lacunary:
        if (ell >= 1 && (ell & (ell - 1)) == 0) {
          return std::pow(terms[0].ratio, -static_cast<double>(ell)) * terms[0].coeff;
        }
        return element{};
      case kind::table:
        return ell < table.size() ? table[ell] : element{};
    }
    return element{};
  }

  /// Terms with equal ratios merged by adding their coefficients, sorted by
  /// ratio. Zero merged coefficients are dropped.
  std::vector<geometric_term> grouped_terms() const {
    std::map<double, element> g;
    for (const auto& t : terms) g[t.ratio] += t.coeff;
    std::vector<geometric_term> out;
    for (const auto& [r, c] : g) {
      if (!c.is_zero()) out.push_back({c, r});
    }
    return out;
  }
};

namespace detail {

/// 1 / limsup |x_l|^{1/l} estimated from the second half of a finite list.
inline extended_real windowed_radius(const std::vector<double>& norms) {
  const std::size_t n = norms.size();
  double worst = 0.0;
  for (std::size_t l = std::max<std::size_t>(1, n / 2); l < n; ++l) {
    if (norms[l] > 0.0) worst = std::max(worst, std::pow(norms[l], 1.0 / static_cast<double>(l)));
  }
  return extended_real(worst).reciprocal();
}

inline bool same_slice(const slice_unit& a, const slice_unit& b) { return a.approx_equal(b); }

}  // namespace detail

inline extended_real radius_Ra(const seq_spec& a) {
  if (a.form == seq_spec::kind::table) {
    std::vector<double> norms;
    for (const auto& x : a.table) norms.push_back(norm(x));
    return detail::windowed_radius(norms);
  }
  const auto groups = a.grouped_terms();
  if (groups.empty()) return extended_real::infinity();
  return groups.front().ratio;
}

/// Radius governed by the components of a_l perpendicular to ker(I_p - J).
inline extended_real radius_RapJ(const seq_spec& a, const wpoint& p, const slice_unit& j) {
  if (p.is_real() || detail::same_slice(j, p.axis)) return radius_Ra(a);
  const subspace ker = kernel_of_left_mult(p.axis.value() - j.value());
  if (a.form == seq_spec::kind::table) {
    std::vector<double> norms;
    for (const auto& x : a.table) norms.push_back(ker.distance(x));
    return detail::windowed_radius(norms);
  }
  for (const auto& t : a.grouped_terms()) {
    if (ker.distance(t.coeff) > 1e-10 * norm(t.coeff)) return t.ratio;
  }
  return extended_real::infinity();
}

struct rap_result {
  extended_real value;
  std::optional<slice_unit> witness;
};

/// The larger of the two radii, with a slice J realizing it when it exceeds R_a.
inline rap_result radius_Rap(const seq_spec& a, const wpoint& p) {
  const extended_real ra = radius_Ra(a);
  if (p.is_real() || p.axis.is_pole()) return {ra, std::nullopt};

  std::vector<slice_unit> tries;
  if (a.form == seq_spec::kind::table) {
    tries = a.candidates;
    for (auto it = a.table.rbegin(); it != a.table.rend(); ++it) {
      if (it->is_zero()) continue;
      if (auto k = find_companion(p.axis, *it)) tries.push_back(*k);
      break;
    }
  } else {
    const auto groups = a.grouped_terms();
    if (groups.empty()) return {ra, std::nullopt};
    if (auto k = find_companion(p.axis, groups.front().coeff)) tries.push_back(*k);
  }

  rap_result best{ra, std::nullopt};
  for (const auto& k : tries) {
    const extended_real r = radius_RapJ(a, p, k);
    if (r > best.value) best = {r, k};
  }
  return best;
}

// ---------------------------------------------------------------------------
// sigma balls

namespace detail {

/// B*(center, r): the open disk together with its center.
inline bool in_punctured_ball(complex_point w, complex_point center, const extended_real& r) {
  const double d = std::abs(w - center);
  return d < 1e-12 || extended_real(d) < r;
}

}  // namespace detail

/// Membership in the sigma-ball around p: full disk on the slice of p,
/// intersection of the disk and its reflection elsewhere.
inline bool sigma_contains(const wpoint& q, const wpoint& p, const extended_real& r) {
  const complex_point w = q.z();
  const complex_point zp = p.z();
  if (detail::in_punctured_ball(w, zp, r) && detail::in_punctured_ball(w, std::conj(zp), r)) {
    return true;
  }
  if (q.is_real() || p.is_real()) return false;
  if (detail::same_slice(q.axis, p.axis)) return detail::in_punctured_ball(w, zp, r);
  if (detail::same_slice(-q.axis, p.axis)) return detail::in_punctured_ball(std::conj(w), zp, r);
  return false;
}

/// Membership in the hyper-sigma-ball: full disks on the whole kernel curve
/// of the pair, intersections elsewhere.
inline bool hyper_sigma_contains(const wpoint& q, const wpoint& p, const extended_real& r,
                                 const hyper_solution& j) {
  if (p.is_real() || !detail::same_slice(p.axis, j.j1)) {
    throw argument_error("hyper_sigma_contains: center must lie on the slice of J1");
  }
  const complex_point w = q.z();
  const complex_point zp = p.z();
  if (detail::in_punctured_ball(w, zp, r) && detail::in_punctured_ball(w, std::conj(zp), r)) {
    return true;
  }
  if (q.is_real()) return false;
  if (cker_membership(q.axis, j.j1, j.j2)) return detail::in_punctured_ball(w, zp, r);
  if (cker_membership(-q.axis, j.j1, j.j2)) {
    return detail::in_punctured_ball(std::conj(w), zp, r);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Convergence domain

enum class domain_case { real_center, sigma_ball_only, hyper_intersection };
enum class membership { interior, exterior, boundary };

inline const char* to_string(domain_case c) {
  switch (c) {
    case domain_case::real_center: return "RealCenter";
    case domain_case::sigma_ball_only: return "SigmaBallOnly";
    case domain_case::hyper_intersection: return "HyperIntersection";
  }
  return "?";
}

inline const char* to_string(membership m) {
  switch (m) {
    case membership::interior: return "Interior";
    case membership::exterior: return "Exterior";
    case membership::boundary: return "Boundary";
  }
  return "?";
}

struct domain_report {
  extended_real r_a;
  extended_real r_ap;
  std::optional<slice_unit> witness;
  domain_case which = domain_case::real_center;
  bool approximate = false;
};

inline domain_report make_domain_report(const seq_spec& a, const wpoint& p) {
  domain_report r;
  r.r_a = radius_Ra(a);
  const rap_result rap = radius_Rap(a, p);
  r.r_ap = rap.value;
  r.witness = rap.witness;
  r.approximate = a.approximate();
  if (p.is_real()) {
    r.which = domain_case::real_center;
  } else if (r.witness) {
    r.which = domain_case::hyper_intersection;
  } else {
    r.which = domain_case::sigma_ball_only;
  }
  return r;
}

/// Membership together with the smallest slack |radius - distance| over the
/// active constraints (+inf when no constraint is finite).
struct classification {
  membership verdict = membership::interior;
  double margin = std::numeric_limits<double>::infinity();
};

inline constexpr double boundary_tol = 1e-9;

/// Radii of one series around one center, with R^{p,I} cached per slice so
/// repeated queries on a few slices stay cheap.
class domain_model {
 public:
  domain_model(seq_spec a, wpoint p)
      : a_(std::move(a)), p_(std::move(p)), report_(make_domain_report(a_, p_)) {}

  const domain_report& report() const { return report_; }
  const wpoint& center() const { return p_; }
  const seq_spec& sequence() const { return a_; }

  extended_real radius_for_slice(const slice_unit& j) const {
    for (const auto& [unit, r] : cache_) {
      if (unit.approx_equal(j)) return r;
    }
    const extended_real r = radius_RapJ(a_, p_, j);
    cache_.emplace_back(j, r);
    return r;
  }

  classification classify(const wpoint& q) const {
    struct constraint {
      double distance;
      extended_real radius;
      bool center_included;
    };
    std::vector<constraint> cs;
    const complex_point zp = p_.z();
    const extended_real ra = report_.r_a;

    if (p_.is_real()) {
      cs.push_back({norm(q.value - p_.value), ra, true});
    } else if (q.is_real() || detail::same_slice(q.axis, p_.axis)) {
      cs.push_back({std::abs(q.z() - zp), ra, true});
    } else if (detail::same_slice(-q.axis, p_.axis)) {
      cs.push_back({std::abs(std::conj(q.z()) - zp), ra, true});
    } else {
      cs.push_back({std::abs(q.z() - zp), ra, true});
      cs.push_back({std::abs(q.z() - std::conj(zp)), radius_for_slice(q.axis), false});
    }

    classification out;
    bool violated = false;
    bool near = false;
    for (const auto& c : cs) {
      if (c.center_included && c.distance <= boundary_tol) continue;
      if (c.radius.is_infinite()) continue;
      const double slack = c.radius.value() - c.distance;
      out.margin = std::min(out.margin, std::abs(slack));
      if (slack < -boundary_tol) {
        violated = true;
      } else if (slack <= boundary_tol) {
        near = true;
      }
    }
    out.verdict = violated ? membership::exterior : near ? membership::boundary : membership::interior;
    return out;
  }

  membership contains(const wpoint& q) const { return classify(q).verdict; }

 private:
  seq_spec a_;
  wpoint p_;
  domain_report report_;
  mutable std::vector<std::pair<slice_unit, extended_real>> cache_;
};

inline membership domain_contains(const wpoint& q, const wpoint& p, const seq_spec& a) {
  return domain_model(a, p).contains(q);
}

// ---------------------------------------------------------------------------
// Evaluation

enum class verdict { converged, diverged, undetermined };

inline const char* to_string(verdict v) {
  switch (v) {
    case verdict::converged: return "Converged";
    case verdict::diverged: return "Diverged";
    case verdict::undetermined: return "Undetermined";
  }
  return "?";
}

struct eval_report {
  element partial_sum;
  int terms_used = 0;
  verdict result = verdict::undetermined;
  double tail_norm = 0.0;
};

struct eval_options {
  int max_terms = 400;
  double tol = 1e-8;
  int window = 50;
  double blowup = 1e6;
};

/// Partial sums of sum_l (q - p)^{*l} a_l. Each monomial is evaluated on the
/// slice of p and carried to the slice of q by the representation formula
///
///   C+ Psi(X_l) + C- Psi(Y_l),  C+- = (id -+ L_{I_q} L_{I_p}) / 2,
///
/// where X_l, Y_l use (z_q - z_p)^l and (conj(z_q) - z_p)^l.
inline eval_report evaluate_series(const wpoint& q, const wpoint& p, const seq_spec& a,
                                   const eval_options& opt = {}) {
  if (opt.max_terms < 1) throw argument_error("evaluate_series: max_terms must be >= 1");
  eval_report rep;
  if (norm(q.value - p.value) == 0.0) {
    rep.partial_sum = a.coefficient(0);
    rep.terms_used = 1;
    rep.result = verdict::converged;
    return rep;
  }

  const matrix16 lp = left_mult_matrix(p.axis.value()).matrix;
  const matrix16 lq = left_mult_matrix(q.axis.value()).matrix;
  const matrix16 prod = lq * lp;
  const matrix16 c_plus = 0.5 * (matrix16::Identity() - prod);
  const matrix16 c_minus = 0.5 * (matrix16::Identity() + prod);

  const complex_point zp = p.z();
  const complex_point dx = q.z() - zp;
  const complex_point dy = std::conj(q.z()) - zp;

  // A channel is one coefficient c with its four images C+ c, C+ (I_p c),
  // C- c, C- (I_p c). An image that vanishes in exact arithmetic (c in a
  // kernel the projector kills) comes out at rounding level; left alone, a
  // power > 1 on that channel would blow it up, so relative residues below
  // 1e-12 are set to exact zero.
  struct channel {
    vector16 xr, xi, yr, yi;
    complex_point step_x, step_y, pow_x{1.0, 0.0}, pow_y{1.0, 0.0};
    bool has_x = true, has_y = true;  // a killed side is skipped so inf * 0 never occurs
  };
  auto snapped = [](vector16 v, double scale) {
    if (v.norm() <= 1e-12 * scale) v.setZero();
    return v;
  };
  auto make_channel = [&](const element& coeff, complex_point sx, complex_point sy) {
    const vector16 c = to_vector(coeff);
    const vector16 ic = lp * c;
    const double scale = c.norm();
    channel ch{snapped(c_plus * c, scale), snapped(c_plus * ic, scale),
               snapped(c_minus * c, scale), snapped(c_minus * ic, scale), sx, sy};
    ch.has_x = !ch.xr.isZero(0.0) || !ch.xi.isZero(0.0);
    ch.has_y = !ch.yr.isZero(0.0) || !ch.yi.isZero(0.0);
    return ch;
  };

  std::vector<channel> channels;
  const bool structured = a.form != seq_spec::kind::table;
  if (structured) {
    for (const auto& t : a.grouped_terms()) {
      channels.push_back(make_channel(t.coeff, dx / t.ratio, dy / t.ratio));
    }
  }
  const bool lacunary = a.form == seq_spec::kind::lacunary;

  vector16 sum = vector16::Zero();
  std::vector<double> norms;
  norms.reserve(static_cast<std::size_t>(opt.max_terms));
  complex_point raw_x{1.0, 0.0};
  complex_point raw_y{1.0, 0.0};
  const int window_start = opt.max_terms - opt.window;
  vector16 sum_before_window = vector16::Zero();

  auto accumulate = [](vector16& term, const channel& ch, complex_point px, complex_point py) {
    if (ch.has_x) term += px.real() * ch.xr + px.imag() * ch.xi;
    if (ch.has_y) term += py.real() * ch.yr + py.imag() * ch.yi;
  };

  for (int ell = 0; ell < opt.max_terms; ++ell) {
    vector16 term = vector16::Zero();
    if (structured) {
      const bool active = !lacunary || (ell >= 1 && (ell & (ell - 1)) == 0);
      for (auto& ch : channels) {
        if (active) accumulate(term, ch, ch.pow_x, ch.pow_y);
        ch.pow_x *= ch.step_x;
        ch.pow_y *= ch.step_y;
      }
    } else {
      const element c = a.coefficient(static_cast<std::size_t>(ell));
      if (!c.is_zero()) accumulate(term, make_channel(c, {}, {}), raw_x, raw_y);
      raw_x *= dx;
      raw_y *= dy;
    }
    if (ell == window_start) sum_before_window = sum;
    sum += term;
    const double tn = term.norm();
    norms.push_back(tn);
    rep.terms_used = ell + 1;
    if (!std::isfinite(tn) || tn > opt.blowup) {
      rep.partial_sum = from_vector(sum);
      rep.result = verdict::diverged;
      rep.tail_norm = tn;
      return rep;
    }
  }

  rep.partial_sum = from_vector(sum);
  const auto n = norms.size();
  const auto w = std::min<std::size_t>(static_cast<std::size_t>(opt.window), n);
  const auto first = norms.end() - static_cast<std::ptrdiff_t>(w);
  rep.tail_norm = *std::max_element(first, norms.end());

  if (n >= static_cast<std::size_t>(opt.window)) {
    const bool small = std::all_of(first, norms.end(), [&](double t) { return t < opt.tol; });
    const bool cauchy = (sum - sum_before_window).norm() < opt.tol;
    if (small && cauchy) {
      rep.result = verdict::converged;
      return rep;
    }
    // Sustained non-decrease: the later half of the window is no smaller
    // than the earlier half, and the window is above 1.
    const auto mid = first + static_cast<std::ptrdiff_t>(w / 2);
    const double early = *std::max_element(first, mid);
    const double late = *std::max_element(mid, norms.end());
    if (rep.tail_norm > 1.0 && late >= early) rep.result = verdict::diverged;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Scan

struct scan_options {
  eval_options eval;
  double band = 0.05;                     // excluded half-width around boundaries
  std::optional<complex_point> center;  // grid center; defaults to z_p
};

struct scan_sample {
  double theta = 0.0;  // grid angle
  double radius = 0.0;
  complex_point z;     // point in the slice plane (lower half maps to -slice)
  membership predicted = membership::interior;
  double margin = 0.0;
  eval_report empirical;
  bool scored = false;
  bool agrees = false;
};

struct scan_result {
  std::vector<scan_sample> samples;
  int scored = 0;
  int agreed = 0;
  double agreement() const { return scored == 0 ? 1.0 : static_cast<double>(agreed) / scored; }
};

inline scan_result convergence_scan(const domain_model& model, const slice_unit& slice,
                                    const std::vector<double>& radial_grid,
                                    const std::vector<double>& angular_grid,
                                    const scan_options& opt = {}) {
  if (radial_grid.empty() || angular_grid.empty()) {
    throw argument_error("convergence_scan: grids must be nonempty");
  }
  const complex_point c = opt.center.value_or(model.center().z());
  scan_result out;
  for (double theta : angular_grid) {
    for (double rho : radial_grid) {
      scan_sample s;
      s.theta = theta;
      s.radius = rho;
      s.z = c + std::polar(rho, theta);
      const wpoint q = wpoint::on_slice(s.z, slice);
      const classification cl = model.classify(q);
      s.predicted = cl.verdict;
      s.margin = cl.margin;
      s.empirical = evaluate_series(q, model.center(), model.sequence(), opt.eval);
      s.scored = s.predicted != membership::boundary && s.margin >= opt.band;
      if (s.scored) {
        s.agrees = (s.predicted == membership::interior && s.empirical.result == verdict::converged) ||
                   (s.predicted == membership::exterior && s.empirical.result == verdict::diverged);
        ++out.scored;
        if (s.agrees) ++out.agreed;
      }
      out.samples.push_back(s);
    }
  }
  return out;
}

inline scan_result convergence_scan(const wpoint& p, const seq_spec& a, const slice_unit& slice,
                                    const std::vector<double>& radial_grid,
                                    const std::vector<double>& angular_grid,
                                    const scan_options& opt = {}) {
  return convergence_scan(domain_model(a, p), slice, radial_grid, angular_grid, opt);
}

}  // namespace sedenion
