// Acceptance checks. Prints one PASS/FAIL line per criterion and exits nonzero
// if any fails. Tolerances and sample counts are fixed here.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "sedenion/cd_core.hpp"
#include "sedenion/projections.hpp"
#include "sedenion/slice_geometry.hpp"
#include "sedenion/star_series.hpp"
#include "sedenion/zero_structure.hpp"

namespace {

using namespace sedenion;
using std::numbers::pi;

constexpr double table_time_limit = 0.1;      // seconds
constexpr double angle_tol = 1e-10;
constexpr double grid_band = 0.005;           // abstention half-width around circles
constexpr double grid_max_radius = 4.5;
constexpr double grid_time_limit = 5.0;
constexpr double scan_time_limit = 10.0;
constexpr double roundtrip_tol = 1e-9;
constexpr double identity_tol = 1e-12;
constexpr double oracle_tol = 1e-9;

struct outcome {
  bool pass = true;
  std::string detail;
};

element rand_element(std::mt19937_64& rng, int level = max_level) {
  std::normal_distribution<double> g(0.0, 1.0);
  element x(level);
  for (std::size_t m = 0; m < x.dim(); ++m) x[m] = g(rng);
  return x;
}

seq_spec example_series() {
  return seq_spec::geometric({{element::real(1.0), 3.0}, {e(4) + e(15), 2.0}});
}

wpoint example_center() { return wpoint::from_element(e(1)); }

slice_unit curve_slice() {
  return cker_curve_point(slice_unit(e(1)), slice_unit(e(10)), pi / 3);
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// C1
outcome table_matches() {
  const auto t0 = std::chrono::steady_clock::now();
  const multiplication_table t(4);
  const std::size_t hits = t.count_reference_matches();
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {hits == 256 && dt < table_time_limit,
          std::to_string(hits) + "/256 entries, " + fmt("%.4f s", dt)};
}

// C2
outcome canonical_zero_divisor() {
  const int_element p = int_element::basis(1) - int_element::basis(10);
  const int_element c = int_element::basis(4) + int_element::basis(15);
  const bool exact = cd_mul(p, c).is_zero();
  const subspace ker = kernel_of_left_mult(p.cast<double>());
  const subspace expected = subspace::span(std::vector<element>{
      e(4) + e(15), e(5) - e(14), e(6) + e(13), e(7) - e(12)});
  const double angle = principal_angle_error(ker, expected);
  return {exact && ker.dim() == 4 && angle < angle_tol,
          "exact product " + std::string(exact ? "zero" : "nonzero") + ", dim " +
              std::to_string(ker.dim()) + fmt(", angle %.2e", angle)};
}

// C3
outcome example_radii() {
  const seq_spec a = example_series();
  const wpoint p = example_center();
  const extended_real ra = radius_Ra(a);
  const rap_result rap = radius_Rap(a, p);
  bool witness_ok = false;
  std::string wdesc = "none";
  if (rap.witness) {
    const element k = rap.witness->value();
    witness_ok = cker_membership(*rap.witness, slice_unit(e(1)), slice_unit(e(10))) &&
                 !rap.witness->approx_equal(slice_unit(e(1)));
    wdesc = k == e(10) ? "e10" : "other";
  }
  const bool ok = ra == 2.0 && rap.value == 3.0 && witness_ok;
  return {ok, "R_a=" + to_string(ra) + " R_a^p=" + to_string(rap.value) + " witness=" + wdesc};
}

// C4
struct disk {
  complex_point center;
  double radius;
};

outcome grid_against_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  const domain_model model(example_series(), example_center());
  const complex_point i{0.0, 1.0};
  const slice_unit k = curve_slice();
  struct panel {
    slice_unit slice;
    std::vector<disk> oracle;
  };
  const std::vector<panel> panels = {
      {slice_unit(e(1)), {{i, 2.0}}},
      {k, {{i, 2.0}, {-i, 3.0}}},
      {-k, {{-i, 2.0}, {i, 3.0}}},
      {slice_unit(e(3)), {{i, 2.0}, {-i, 2.0}}},
  };
  int checked = 0, mismatched = 0;
  for (const auto& pn : panels) {
    for (int a = 0; a < 100; ++a) {
      const double theta = 2.0 * pi * a / 100;
      for (int r = 1; r <= 100; ++r) {
        const complex_point w = i + std::polar(grid_max_radius * r / 100, theta);
        bool inside = true, near = false;
        for (const auto& d : pn.oracle) {
          const double dist = std::abs(w - d.center);
          if (std::abs(dist - d.radius) < grid_band) near = true;
          inside = inside && dist < d.radius;
        }
        if (near) continue;
        ++checked;
        const membership got = model.contains(wpoint::on_slice(w, pn.slice));
        if (got != (inside ? membership::interior : membership::exterior)) ++mismatched;
      }
    }
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {mismatched == 0 && checked > 30000 && dt < grid_time_limit,
          std::to_string(mismatched) + " mismatches in " + std::to_string(checked) + " points, " +
              fmt("%.3f s", dt)};
}

// C5
outcome scan_agreement() {
  const auto t0 = std::chrono::steady_clock::now();
  const domain_model model(example_series(), example_center());
  std::vector<double> radii, angles;
  for (int r = 1; r <= 20; ++r) radii.push_back(0.2 * r);
  for (int a = 0; a < 8; ++a) angles.push_back(2.0 * pi * a / 8);
  scan_options opt;
  opt.band = 0.05;
  opt.eval = {400, 1e-8, 50, 1e6};
  const slice_unit k = curve_slice();
  int scored = 0, agreed = 0;
  for (const auto& s : {slice_unit(e(1)), k, -k, slice_unit(e(3))}) {
    const scan_result r = convergence_scan(model, s, radii, angles, opt);
    scored += r.scored;
    agreed += r.agreed;
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {scored > 0 && agreed == scored && dt < scan_time_limit,
          std::to_string(agreed) + "/" + std::to_string(scored) + " scored samples agree, " +
              fmt("%.3f s", dt)};
}

// C6
outcome hyper_equivalence() {
  std::mt19937_64 rng(default_seed);
  int bad = 0;
  auto check = [&](const slice_unit& j1, const slice_unit& j2, bool expect) {
    const bool a = is_hyper_solution(j1, j2);
    const bool b = !kernel_zeta(j1, j2).empty();
    const bool c = zeta_nullity(j1, j2) > 0;
    if (a != expect || b != expect || c != expect) ++bad;
  };
  for (int n = 0; n < 1000; ++n) {
    const auto [j1, j2] = random_hyper_pair(rng);
    check(j1, j2, true);
  }
  for (int n = 0; n < 1000; ++n) check(random_slice_unit(rng), random_slice_unit(rng), false);
  return {bad == 0, std::to_string(bad) + " disagreements over 1000 hyper + 1000 generic pairs"};
}

// C7
outcome polar_roundtrip() {
  std::mt19937_64 rng(default_seed + 1);
  double worst_round = 0.0, worst_alpha = 0.0, worst_frame = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const slice_unit s = random_slice_unit(rng);
    const auto& pc = s.polar();
    const element jm = as_octonion(pc.jmath);
    element other;
    do {
      other = rand_element(rng, 3);
      other[0] = 0.0;
      other -= inner(other, jm) * jm;
    } while (norm(other) < 1e-3);
    other = other / norm(other);
    // rotate so that the theta direction of the frame is jm
    const double ct = std::cos(pc.theta), st = std::sin(pc.theta);
    const octonion_frame f{ct * jm - st * other, st * jm + ct * other};
    worst_round = std::max(worst_round, norm(psi(pc.alpha, pc.theta, f).value() - s.value()));

    const auto [j1, j2] = random_hyper_pair(rng);
    worst_alpha = std::max(worst_alpha, std::abs(j1.alpha() - j2.alpha()));
    worst_frame = std::max(worst_frame, frame_residual(iota_frame(j1, j2)));
  }
  const hyper_solution h = iota_frame(slice_unit(e(1)), slice_unit(e(10)));
  const bool exact = h.frame.i1 == e(1) && h.frame.i2 == e(2);
  return {worst_round < roundtrip_tol && worst_alpha < roundtrip_tol &&
              worst_frame < roundtrip_tol && exact,
          fmt("roundtrip %.2e, alpha gap %.2e", worst_round, worst_alpha) +
              fmt(", frame residual %.2e", worst_frame) + ", (e1,e10) frame " + (exact ? "exact" : "inexact")};
}

// C8
outcome algebraic_identities() {
  std::mt19937_64 rng(default_seed + 2);
  int bad_oct = 0, bad_sed = 0, bad_proj = 0, bad_mono = 0;
  for (int n = 0; n < 100000; ++n) {
    const element a = rand_element(rng, 3), b = rand_element(rng, 3);
    const double na = norm(a), nb = norm(b);
    const double scale = std::max(1.0, na * na * nb);
    if (std::abs(norm(cd_mul(a, b)) - na * nb) > identity_tol * scale ||
        norm(cd_mul(cd_mul(a, a), b) - cd_mul(a, cd_mul(a, b))) > identity_tol * scale) {
      ++bad_oct;
    }
  }
  for (int n = 0; n < 100000; ++n) {
    const element a = rand_element(rng), b = rand_element(rng);
    if (norm(a * b) > std::sqrt(2.0) * norm(a) * norm(b)) ++bad_sed;
  }
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 0; n < 1000; ++n) {
    const auto [j1, j2] = random_hyper_pair(rng);
    const wpoint p = wpoint::on_slice({u(rng), 0.1 + std::abs(u(rng))}, j1);
    const wpoint q = wpoint::on_slice({u(rng), 0.1 + std::abs(u(rng))}, j2);
    const element d = rand_element(rng);
    const pq_projection base = pq_project(d, p, q);
    for (const element& a : {element::real(1.0), j1.value(), j2.value()}) {
      const pq_projection r = pq_project(a * d, p, q);
      if (norm(r.eq_part - a * base.eq_part) > oracle_tol ||
          norm(r.neg_eq_part - a * base.neg_eq_part) > oracle_tol ||
          norm(r.pm_part - a * base.pm_part) > oracle_tol) {
        ++bad_proj;
        break;
      }
    }

    const element c = kernel_of_left_mult(j1.value() - j2.value()).basis_elements()[n % 4];
    const complex_point z{u(rng), 0.2 + std::abs(u(rng))};
    const wpoint at = wpoint::on_slice({2.0 * u(rng), 2.0 * u(rng)}, random_slice_unit(rng));
    const int ell = 1 + n % 8;
    const element via1 = star_pow_center(wpoint::on_slice(z, j1), ell).times_right(c).evaluate(at);
    const element via2 = star_pow_center(wpoint::on_slice(z, j2), ell).times_right(c).evaluate(at);
    if (norm(via1 - via2) > oracle_tol * std::max(1.0, norm(via1))) ++bad_mono;
  }
  const bool ok = bad_oct == 0 && bad_sed == 0 && bad_proj == 0 && bad_mono == 0;
  return {ok, "failures: octonion " + std::to_string(bad_oct) + "/100000, sedenion " +
                  std::to_string(bad_sed) + "/100000, projection " + std::to_string(bad_proj) +
                  "/1000, monomial " + std::to_string(bad_mono) + "/1000"};
}

// C9
outcome center_slice_oracle() {
  std::mt19937_64 rng(default_seed + 3);
  std::uniform_real_distribution<double> rad(0.0, 0.9), ang(0.0, 2 * pi), u(-1.0, 1.0);
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const slice_unit ip = random_slice_unit(rng);
    const wpoint p = wpoint::on_slice({u(rng), 0.2 + std::abs(u(rng))}, ip);
    const std::vector<geometric_term> terms = {{rand_element(rng), 2.0}, {rand_element(rng), 3.5}};
    const seq_spec a = seq_spec::geometric(terms);
    const complex_point w = p.z() + std::polar(2.0 * rad(rng), ang(rng));
    element expected;
    for (const auto& t : terms) {
      const complex_point s = 1.0 / (1.0 - (w - p.z()) / t.ratio);
      expected += s.real() * t.coeff + s.imag() * (ip.value() * t.coeff);
    }
    const eval_report rep = evaluate_series(wpoint::on_slice(w, ip), p, a, {2000, 1e-12, 50, 1e6});
    worst = std::max(worst, norm(rep.partial_sum - expected) / std::max(1.0, norm(expected)));
  }
  return {worst < oracle_tol, fmt("max relative error %.2e over 100 points", worst)};
}

}  // namespace

int main() {
  struct criterion {
    const char* name;
    std::function<outcome()> run;
  };
  const std::vector<criterion> all = {
      {"C1 multiplication table matches reference", table_matches},
      {"C2 canonical zero divisor and kernel", canonical_zero_divisor},
      {"C3 example radii and witness", example_radii},
      {"C4 domain grid against disk oracle", grid_against_oracle},
      {"C5 convergence scan agreement", scan_agreement},
      {"C6 hyper-solution characterizations agree", hyper_equivalence},
      {"C7 polar roundtrip and frames", polar_roundtrip},
      {"C8 algebraic identities", algebraic_identities},
      {"C9 center slice against complex oracle", center_slice_oracle},
  };
  int failures = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %s  (%s) [%.3f s]\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), dt);
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failures, all.size());
  return failures == 0 ? 0 : 1;
}
