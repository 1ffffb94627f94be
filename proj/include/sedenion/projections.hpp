#pragma once

/// \file projections.hpp
/// Splitting a sedenion against the pair of kernels ker(I_p - I_q) and
/// ker(I_p + I_q) attached to two points of the slice cone.

#include "sedenion/slice_geometry.hpp"
#include "sedenion/zero_structure.hpp"

namespace sedenion {

struct pq_projection {
  element eq_part;      // component in ker(I_p - I_q)
  element perp_part;    // d - eq_part
  element neg_eq_part;  // component in ker(I_p + I_q)
  element pm_part;      // d - eq_part - neg_eq_part
};

/// When either point is real, eq_part and neg_eq_part vanish and the rest is d.
inline pq_projection pq_project(const element& d, const wpoint& p, const wpoint& q) {
  const element ds = d.promoted(max_level);
  if (p.is_real() || q.is_real()) return {element{}, ds, element{}, ds};
  const element ip = p.axis.value();
  const element iq = q.axis.value();
  const element eq = kernel_of_left_mult(ip - iq).project(ds);
  const element neg = kernel_of_left_mult(ip + iq).project(ds);
  return {eq, ds - eq, neg, ds - eq - neg};
}

}  // namespace sedenion
