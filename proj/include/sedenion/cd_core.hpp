#pragma once

/// \file cd_core.hpp
/// Cayley-Dickson arithmetic up to level 4 (sedenions).
///
/// An element of A_level is stored as 2^level real coordinates over the basis
/// e_0 = 1, e_1, ..., e_{2^level - 1}, where e_{m + 2^n} := e_m e_{2^n}. The
/// product is evaluated by the doubling recursion
///
///   (a + b e)(c + d e) = (ac - conj(d) b) + (da + b conj(c)) e,
///
/// with real multiplication at level 0. Nothing is looked up in a table: the
/// table is derived from the recursion and checked against a fixture.

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sedenion/errors.hpp"
#include "sedenion/reference_table.hpp"

namespace sedenion {

inline constexpr int max_level = 4;
inline constexpr std::size_t sedenion_dim = 16;

constexpr std::size_t dim_of_level(int level) { return std::size_t{1} << level; }

namespace detail {

inline void check_level(int level) {
  if (level < 0) throw argument_error("negative Cayley-Dickson level");
  if (level > max_level) {
    throw unsupported_error("Cayley-Dickson level " + std::to_string(level) +
                            " exceeds the supported maximum of 4");
  }
}

// out must not alias a or b. n is a power of two, at most 16.
template <typename T>
void cd_mul_raw(const T* a, const T* b, T* out, std::size_t n) {
  if (n == 1) {
    out[0] = a[0] * b[0];
    return;
  }
  const std::size_t h = n / 2;
  const T* a0 = a;
  const T* a1 = a + h;
  const T* c = b;
  const T* d = b + h;

  std::array<T, 8> conj_c{};
  std::array<T, 8> conj_d{};
  conj_c[0] = c[0];
  conj_d[0] = d[0];
  for (std::size_t i = 1; i < h; ++i) {
    conj_c[i] = -c[i];
    conj_d[i] = -d[i];
  }

  std::array<T, 8> tmp{};
  cd_mul_raw(a0, c, out, h);
  cd_mul_raw(conj_d.data(), a1, tmp.data(), h);
  for (std::size_t i = 0; i < h; ++i) out[i] -= tmp[i];

  cd_mul_raw(d, a0, out + h, h);
  cd_mul_raw(a1, conj_c.data(), tmp.data(), h);
  for (std::size_t i = 0; i < h; ++i) out[h + i] += tmp[i];
}

}  // namespace detail

/// A level-`level` Cayley-Dickson number. Storage is fixed at 16 slots; only
/// the first 2^level are meaningful and the rest stay zero.
template <typename T>
class basic_element {
 public:
  using value_type = T;

  basic_element() : basic_element(max_level) {}

  explicit basic_element(int level) : level_(level) { detail::check_level(level); }

  basic_element(int level, std::span<const T> coeffs) : basic_element(level) {
    if (coeffs.size() != dim()) {
      throw argument_error("coefficient count " + std::to_string(coeffs.size()) +
                           " does not match level " + std::to_string(level));
    }
    std::copy(coeffs.begin(), coeffs.end(), c_.begin());
  }

  basic_element(int level, std::initializer_list<T> coeffs)
      : basic_element(level, std::span<const T>(coeffs.begin(), coeffs.size())) {}

  static basic_element basis(std::size_t m, int level = max_level) {
    basic_element e(level);
    if (m >= e.dim()) throw argument_error("basis index e" + std::to_string(m) + " out of range");
    e.c_[m] = T{1};
    return e;
  }

  static basic_element real(T x, int level = max_level) {
    basic_element e(level);
    e.c_[0] = x;
    return e;
  }

  int level() const { return level_; }
  std::size_t dim() const { return dim_of_level(level_); }

  std::span<const T> coeffs() const { return {c_.data(), dim()}; }
  std::span<T> coeffs() { return {c_.data(), dim()}; }

  T operator[](std::size_t m) const { return c_[m]; }
  T& operator[](std::size_t m) { return c_[m]; }

  T real_part() const { return c_[0]; }

  /// Zero-pads into a higher level (the natural inclusion A_l in A_{l'}).
  basic_element promoted(int level) const {
    if (level < level_) throw argument_error("cannot promote to a lower level");
    basic_element e(level);
    std::copy(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(dim()), e.c_.begin());
    return e;
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](T x) { return x == T{0}; });
  }

  template <typename U>
  basic_element<U> cast() const {
    basic_element<U> e(level_);
    for (std::size_t m = 0; m < dim(); ++m) e[m] = static_cast<U>(c_[m]);
    return e;
  }

  basic_element& operator+=(const basic_element& o) {
    *this = combine(*this, o, T{1});
    return *this;
  }
  basic_element& operator-=(const basic_element& o) {
    *this = combine(*this, o, T{-1});
    return *this;
  }
  basic_element& operator*=(T s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  basic_element& operator/=(T s) {
    for (auto& x : c_) x /= s;
    return *this;
  }

  friend basic_element operator+(basic_element a, const basic_element& b) { return a += b; }
  friend basic_element operator-(basic_element a, const basic_element& b) { return a -= b; }
  friend basic_element operator-(basic_element a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend basic_element operator*(basic_element a, T s) { return a *= s; }
  friend basic_element operator*(T s, basic_element a) { return a *= s; }
  friend basic_element operator/(basic_element a, T s) { return a /= s; }

  /// Exact coefficient equality; elements of different levels compare after promotion.
  friend bool operator==(const basic_element& a, const basic_element& b) {
    const int level = std::max(a.level_, b.level_);
    return a.promoted(level).c_ == b.promoted(level).c_;
  }

 private:
  static basic_element combine(const basic_element& a, const basic_element& b, T sign) {
    const int level = std::max(a.level_, b.level_);
    basic_element r = a.promoted(level);
    const basic_element bb = b.promoted(level);
    for (std::size_t m = 0; m < r.dim(); ++m) r.c_[m] += sign * bb.c_[m];
    return r;
  }

  int level_;
  std::array<T, 16> c_{};
};

using element = basic_element<double>;
using int_element = basic_element<long long>;

/// e_m as a sedenion.
inline element e(std::size_t m) { return element::basis(m); }

/// Cayley-Dickson product. Both factors must already share a level.
template <typename T>
basic_element<T> cd_mul(const basic_element<T>& a, const basic_element<T>& b) {
  if (a.level() != b.level()) {
    throw argument_error("cd_mul: level mismatch (" + std::to_string(a.level()) + " vs " +
                         std::to_string(b.level()) + "); promote first");
  }
  basic_element<T> r(a.level());
  std::array<T, 16> out{};
  detail::cd_mul_raw(a.coeffs().data(), b.coeffs().data(), out.data(), a.dim());
  std::copy(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(a.dim()), r.coeffs().begin());
  return r;
}

/// Product with automatic promotion to the larger level.
template <typename T>
basic_element<T> operator*(const basic_element<T>& a, const basic_element<T>& b) {
  const int level = std::max(a.level(), b.level());
  return cd_mul(a.promoted(level), b.promoted(level));
}

template <typename T>
basic_element<T> conjugate(const basic_element<T>& a) {
  basic_element<T> r = a;
  for (std::size_t m = 1; m < r.dim(); ++m) r[m] = -r[m];
  return r;
}

/// Euclidean inner product of coefficient vectors.
template <typename T>
T inner(const basic_element<T>& a, const basic_element<T>& b) {
  if (a.level() != b.level()) throw argument_error("inner: level mismatch");
  T s{0};
  for (std::size_t m = 0; m < a.dim(); ++m) s += a[m] * b[m];
  return s;
}

inline double norm(const element& a) { return std::sqrt(inner(a, a)); }

/// Imaginary part a - Re(a).
template <typename T>
basic_element<T> imaginary(basic_element<T> a) {
  a[0] = T{0};
  return a;
}

// ---------------------------------------------------------------------------
// Multiplication table

/// e_m * e_n for all basis pairs of one level, generated from the recursion
/// in exact integer arithmetic.
class multiplication_table {
 public:
  explicit multiplication_table(int level) : level_(level) {
    detail::check_level(level);
    const std::size_t n = dim_of_level(level);
    entries_.resize(n * n);
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t k = 0; k < n; ++k) {
        const int_element p = cd_mul(int_element::basis(m, level), int_element::basis(k, level));
        entries_[m * n + k] = to_signed_basis(p);
      }
    }
  }

  int level() const { return level_; }
  std::size_t size() const { return dim_of_level(level_); }

  signed_basis at(std::size_t m, std::size_t n) const { return entries_.at(m * size() + n); }

  /// Number of entries agreeing with the published 16x16 table (level 4 only).
  std::size_t count_reference_matches() const {
    if (level_ != max_level) throw argument_error("reference table is defined for sedenions only");
    std::size_t matches = 0;
    for (std::size_t m = 0; m < 16; ++m) {
      for (std::size_t n = 0; n < 16; ++n) {
        if (at(m, n) == reference_sedenion_table[m][n]) ++matches;
      }
    }
    return matches;
  }

 private:
  static signed_basis to_signed_basis(const int_element& p) {
    signed_basis out{0, -1};
    for (std::size_t k = 0; k < p.dim(); ++k) {
      if (p[k] == 0) continue;
      if (out.index >= 0 || (p[k] != 1 && p[k] != -1)) {
        throw std::logic_error("basis product is not a signed basis element");
      }
      out = {static_cast<int>(p[k]), static_cast<int>(k)};
    }
    return out;
  }

  int level_;
  std::vector<signed_basis> entries_;
};

/// "e11", "-1", "-e3" style rendering of a signed basis element.
inline std::string to_string(const signed_basis& s) {
  std::string out = s.sign < 0 ? "-" : "";
  out += s.index == 0 ? std::string("1") : "e" + std::to_string(s.index);
  return out;
}

// ---------------------------------------------------------------------------
// Left multiplication operators

using vector16 = Eigen::Matrix<double, 16, 1>;
using matrix16 = Eigen::Matrix<double, 16, 16>;

inline vector16 to_vector(const element& a) {
  const element s = a.promoted(max_level);
  vector16 v;
  for (std::size_t m = 0; m < 16; ++m) v(static_cast<Eigen::Index>(m)) = s[m];
  return v;
}

inline element from_vector(const vector16& v) {
  element s;
  for (std::size_t m = 0; m < 16; ++m) s[m] = v(static_cast<Eigen::Index>(m));
  return s;
}

/// Matrix of x -> s x on the 16-dimensional coefficient space.
struct left_mult_operator {
  element source;
  matrix16 matrix;

  element apply(const element& x) const { return from_vector(matrix * to_vector(x)); }
};

inline left_mult_operator left_mult_matrix(const element& s) {
  const element src = s.promoted(max_level);
  left_mult_operator op{src, matrix16::Zero()};
  for (std::size_t m = 0; m < 16; ++m) {
    op.matrix.col(static_cast<Eigen::Index>(m)) = to_vector(cd_mul(src, e(m)));
  }
  return op;
}

// ---------------------------------------------------------------------------
// Complex plane embeddings

using complex_point = std::complex<double>;

/// x + y i  ->  x + y s.
inline element complex_embed(complex_point z, const element& unit) {
  element r = unit.promoted(max_level) * z.imag();
  r[0] += z.real();
  return r;
}

/// Coordinates of q = x + y s in the plane R + R s, for a unit imaginary s.
inline complex_point plane_coordinates(const element& q, const element& unit) {
  const element s = unit.promoted(max_level);
  return {q.promoted(max_level)[0], inner(q.promoted(max_level), s)};
}

/// Maps x + y J to x + y I.
inline element complex_transfer(const element& q, const element& from_unit, const element& to_unit) {
  return complex_embed(plane_coordinates(q, from_unit), to_unit);
}

}  // namespace sedenion
