#pragma once

/// \file zero_structure.hpp
/// Zero divisors of the sedenions: kernels of left multiplication, special
/// triples, the octonion-pair characterization of zero products and the
/// orthogonal decomposition attached to a zero divisor.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sedenion/cd_core.hpp"

namespace sedenion {

inline constexpr double kernel_cutoff = 1e-9;

/// A linear subspace of R^16 stored by an orthonormal basis.
class subspace {
 public:
  subspace() = default;

  /// Orthonormalizes the spanning set (modified Gram-Schmidt, dropping vectors
  /// whose residual falls below `drop_tol` of their original length).
  static subspace span(const std::vector<vector16>& generators, double drop_tol = 1e-10) {
    subspace s;
    for (const auto& g : generators) s.try_add(g, drop_tol);
    return s;
  }

  static subspace span(const std::vector<element>& generators, double drop_tol = 1e-10) {
    std::vector<vector16> v;
    v.reserve(generators.size());
    for (const auto& g : generators) v.push_back(to_vector(g));
    return span(v, drop_tol);
  }

  static subspace from_orthonormal(std::vector<vector16> basis) {
    subspace s;
    s.basis_ = std::move(basis);
    return s;
  }

  static subspace full() {
    std::vector<vector16> b;
    for (Eigen::Index m = 0; m < 16; ++m) b.push_back(vector16::Unit(m));
    return from_orthonormal(std::move(b));
  }

  std::size_t dim() const { return basis_.size(); }
  bool empty() const { return basis_.empty(); }
  const std::vector<vector16>& basis() const { return basis_; }

  std::vector<element> basis_elements() const {
    std::vector<element> out;
    for (const auto& b : basis_) out.push_back(from_vector(b));
    return out;
  }

  /// 16 x dim matrix whose columns are the basis.
  Eigen::MatrixXd matrix() const {
    Eigen::MatrixXd m(16, static_cast<Eigen::Index>(dim()));
    for (std::size_t k = 0; k < dim(); ++k) m.col(static_cast<Eigen::Index>(k)) = basis_[k];
    return m;
  }

  vector16 project(const vector16& x) const {
    vector16 r = vector16::Zero();
    for (const auto& b : basis_) r += b.dot(x) * b;
    return r;
  }

  element project(const element& x) const { return from_vector(project(to_vector(x))); }

  /// Distance from x to the subspace.
  double distance(const element& x) const {
    const vector16 v = to_vector(x);
    return (v - project(v)).norm();
  }

  bool contains(const element& x, double tol = 1e-9) const { return distance(x) <= tol; }

  subspace orthogonal_complement() const {
    subspace s = *this;
    const std::size_t own = dim();
    for (Eigen::Index m = 0; m < 16; ++m) s.try_add(vector16::Unit(m), 1e-8);
    std::vector<vector16> rest(s.basis_.begin() + static_cast<std::ptrdiff_t>(own), s.basis_.end());
    return from_orthonormal(std::move(rest));
  }

  /// Largest deviation of the Gram matrix from the identity.
  double orthonormality_error() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = 0; j < dim(); ++j) {
        const double target = i == j ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(basis_[i].dot(basis_[j]) - target));
      }
    }
    return worst;
  }

 private:
  void try_add(const vector16& g, double drop_tol) {
    const double n0 = g.norm();
    if (n0 == 0.0) return;
    vector16 v = g;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis_) v -= b.dot(v) * b;
    }
    const double n = v.norm();
    if (n <= drop_tol * n0) return;
    basis_.push_back(v / n);
  }

  std::vector<vector16> basis_;
};

/// Sine of the largest principal angle between two subspaces; +inf when the
/// dimensions differ.
inline double principal_angle_error(const subspace& a, const subspace& b) {
  if (a.dim() != b.dim()) return std::numeric_limits<double>::infinity();
  if (a.dim() == 0) return 0.0;
  // ||(I - P_b) A||_2 avoids the cancellation in sqrt(1 - cos^2).
  const Eigen::MatrixXd am = a.matrix();
  const Eigen::MatrixXd bm = b.matrix();
  const Eigen::MatrixXd residual = am - bm * (bm.transpose() * am);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(residual);
  return std::min(1.0, svd.singularValues().maxCoeff());
}

/// Null space of an arbitrary matrix with a relative singular-value cutoff.
inline Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double rel_cutoff = kernel_cutoff) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const Eigen::Index n = m.cols();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  if (smax > 0.0) {
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
      if (sv(k) > rel_cutoff * smax) ++rank;
    }
  }
  return svd.matrixV().rightCols(n - rank);
}

inline subspace kernel_of_left_mult(const element& s) {
  const Eigen::MatrixXd ns = null_space(left_mult_matrix(s).matrix);
  std::vector<vector16> basis;
  for (Eigen::Index k = 0; k < ns.cols(); ++k) basis.push_back(ns.col(k));
  return subspace::from_orthonormal(std::move(basis));
}

/// Rank of L_s by column-pivoted QR with the same relative cutoff as the kernel.
inline int left_mult_rank(const element& s) {
  Eigen::ColPivHouseholderQR<matrix16> qr(left_mult_matrix(s).matrix);
  qr.setThreshold(kernel_cutoff);
  return static_cast<int>(qr.rank());
}

inline bool is_zero_divisor(const element& s) {
  return !s.is_zero() && kernel_of_left_mult(s).dim() > 0;
}

// ---------------------------------------------------------------------------
// Octonion halves

/// Restricts to level 3; throws if the upper half is nonzero.
inline element as_octonion(const element& x) {
  if (x.level() <= 3) return x.promoted(3);
  element o(3);
  for (std::size_t m = 0; m < 16; ++m) {
    if (m < 8) {
      o[m] = x[m];
    } else if (x[m] != 0.0) {
      throw argument_error("expected an octonion, got a sedenion with e" + std::to_string(m) +
                           " component");
    }
  }
  return o;
}

/// u for p = u + v e8.
inline element o_left(const element& p) {
  const element s = p.promoted(max_level);
  element u(3);
  for (std::size_t m = 0; m < 8; ++m) u[m] = s[m];
  return u;
}

/// v for p = u + v e8.
inline element o_right(const element& p) {
  const element s = p.promoted(max_level);
  element v(3);
  for (std::size_t m = 0; m < 8; ++m) v[m] = s[m + 8];
  return v;
}

/// u + v e8 from two octonions.
inline element from_octonions(const element& u, const element& v) {
  const element uu = as_octonion(u);
  const element vv = as_octonion(v);
  element s;
  for (std::size_t m = 0; m < 8; ++m) {
    s[m] = uu[m];
    s[m + 8] = vv[m];
  }
  return s;
}

/// u - v e8.
inline element c8_conjugate(const element& p) { return from_octonions(o_left(p), -o_right(p)); }

// ---------------------------------------------------------------------------
// Special triples and zero products

inline constexpr double structure_tol = 1e-9;

inline bool is_special_triple(const element& i, const element& j, const element& k) {
  const element a = as_octonion(i);
  const element b = as_octonion(j);
  const element c = as_octonion(k);
  for (const auto* x : {&a, &b, &c}) {
    if (std::abs(norm(*x) - 1.0) > structure_tol) return false;
  }
  return norm(cd_mul(cd_mul(a, b), c) + cd_mul(a, cd_mul(b, c))) <= structure_tol;
}

struct zero_product_certificate {
  bool equal_norms = false;        // |a| == |b|
  bool d_matches_formula = false;  // d == a(bc) / (|a||b|)
  bool special_triple = false;     // {a/|a|, b/|b|, c/|c|}
  element predicted_d{3};
};

struct zero_product_result {
  bool is_zero = false;       // (a + b e8)(c + d e8) == 0 by direct multiplication
  double product_norm = 0.0;  // |(a + b e8)(c + d e8)|
  std::optional<zero_product_certificate> certificate;
  /// Whether the octonion criterion and the direct product agree.
  bool consistent = true;
};

/// Decides (a + b e8)(c + d e8) = 0 for octonions a, b, c, d, both directly
/// and through the criterion: a, b, c nonzero, |a| = |b|, d = a(bc)/(|a||b|)
/// and {a/|a|, b/|b|, c/|c|} special.
inline zero_product_result zero_product_characterization(const element& a, const element& b,
                                                         const element& c, const element& d) {
  const element oa = as_octonion(a);
  const element ob = as_octonion(b);
  const element oc = as_octonion(c);
  const element od = as_octonion(d);
  const element left = from_octonions(oa, ob);
  const element right = from_octonions(oc, od);
  if (left.is_zero() || right.is_zero()) {
    throw argument_error("zero_product_characterization: both factors must be nonzero");
  }

  zero_product_result r;
  r.product_norm = norm(left * right);
  r.is_zero = r.product_norm <= structure_tol * norm(left) * norm(right);

  const double na = norm(oa);
  const double nb = norm(ob);
  const double nc = norm(oc);
  bool criterion = false;
  if (na > 0.0 && nb > 0.0 && nc > 0.0) {
    zero_product_certificate cert;
    cert.equal_norms = std::abs(na - nb) <= structure_tol * std::max(na, nb);
    cert.predicted_d = cd_mul(oa, cd_mul(ob, oc)) / (na * nb);
    cert.d_matches_formula = norm(cert.predicted_d - od) <= structure_tol * std::max(1.0, norm(od));
    cert.special_triple = is_special_triple(oa / na, ob / nb, oc / nc);
    criterion = cert.equal_norms && cert.d_matches_formula && cert.special_triple;
    if (r.is_zero) r.certificate = cert;
  }
  r.consistent = criterion == r.is_zero;
  return r;
}

// ---------------------------------------------------------------------------
// Orthogonal decomposition

/// span{1, u, v, uv} + span{1, u, v, uv} e8 for p = u + v e8.
inline subspace octonion_part_space(const element& p) {
  const element u = o_left(p);
  const element v = o_right(p);
  const element one = element::real(1.0, 3);
  const std::vector<element> quat{one, u, v, cd_mul(u, v)};
  std::vector<element> gens;
  for (const auto& h : quat) gens.push_back(from_octonions(h, element(3)));
  for (const auto& h : quat) gens.push_back(from_octonions(element(3), h));
  return subspace::span(gens, 1e-9);
}

struct ortho_decomposition {
  element o_part;
  element ker_part;
  element kerc_part;
};

/// Splits x along O_p, ker p and ker p^{c8} for a zero divisor p.
inline ortho_decomposition ortho_decompose(const element& x, const element& p) {
  if (!is_zero_divisor(p)) throw argument_error("ortho_decompose: p is not a zero divisor");
  const subspace o = octonion_part_space(p);
  const subspace k = kernel_of_left_mult(p);
  const subspace kc = kernel_of_left_mult(c8_conjugate(p));
  const element xs = x.promoted(max_level);
  return {o.project(xs), k.project(xs), kc.project(xs)};
}

}  // namespace sedenion
