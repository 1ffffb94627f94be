#pragma once

/// \file figure.hpp
/// Cross-sections of the convergence domain on a few representative slices,
/// sampled on a polar grid, plus an SVG rendering of the panels.

#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sedenion/io.hpp"
#include "sedenion/slice_geometry.hpp"
#include "sedenion/star_series.hpp"

namespace sedenion {

struct figure_panel {
  std::string label;
  slice_unit slice;
  extended_real near_radius;  // around z_p
  std::optional<extended_real> far_radius;  // around conj(z_p); none on the slice of p
};

struct figure_sample {
  std::size_t panel = 0;
  double theta = 0.0;
  double radius = 0.0;
  complex_point z;
  membership verdict = membership::interior;
};

/// The slice of p, a point on the kernel curve through (I_p, witness), its
/// negative and a random slice. Without a witness the curve panels are skipped.
inline std::vector<figure_panel> representative_panels(const domain_model& model,
                                                       std::mt19937_64& rng) {
  const wpoint& p = model.center();
  std::vector<figure_panel> out;
  auto add = [&](std::string label, const slice_unit& s) {
    std::optional<extended_real> far;
    const bool own = p.is_real() || s.approx_equal(p.axis) || (-s).approx_equal(p.axis);
    if (!own) far = model.radius_for_slice(s);
    out.push_back({std::move(label), s, model.report().r_a, far});
  };
  add("center", p.axis);
  if (model.report().witness) {
    const slice_unit k = cker_curve_point(p.axis, *model.report().witness, std::numbers::pi / 3);
    add("cker", k);
    add("cker-negated", -k);
  }
  add("generic", random_slice_unit(rng));
  return out;
}

/// Polar grid centered at z_p; angles cover the full circle so the lower half
/// lands on the negated slice.
inline std::vector<figure_sample> sample_panels(const domain_model& model,
                                                const std::vector<figure_panel>& panels,
                                                int radial, int angular, double max_radius) {
  std::vector<figure_sample> out;
  const complex_point c = model.center().z();
  for (std::size_t k = 0; k < panels.size(); ++k) {
    for (int a = 0; a < angular; ++a) {
      const double theta = 2.0 * std::numbers::pi * a / angular;
      for (int r = 1; r <= radial; ++r) {
        const double rho = max_radius * r / radial;
        figure_sample s{k, theta, rho, c + std::polar(rho, theta), membership::interior};
        s.verdict = model.contains(wpoint::on_slice(s.z, panels[k].slice));
        out.push_back(s);
      }
    }
  }
  return out;
}

inline std::string figure_csv(const std::vector<figure_panel>& panels,
                              const std::vector<figure_sample>& samples) {
  std::ostringstream os;
  os << "panel,theta,radius,re,im,membership\n";
  for (const auto& s : samples) {
    os << panels[s.panel].label << ',' << format_number(s.theta) << ',' << format_number(s.radius)
       << ',' << format_number(s.z.real()) << ',' << format_number(s.z.imag()) << ','
       << to_string(s.verdict) << '\n';
  }
  return os.str();
}

/// One panel per slice: the two bounding circles and the sampled points.
inline std::string figure_svg(const domain_model& model, const std::vector<figure_panel>& panels,
                              const std::vector<figure_sample>& samples, double extent) {
  const double size = 260.0;
  const double scale = size / (2.0 * extent);
  const complex_point zp = model.center().z();
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size * panels.size()
     << "\" height=\"" << size + 24 << "\">\n";
  for (std::size_t k = 0; k < panels.size(); ++k) {
    const double ox = size * k;
    auto px = [&](double x) { return ox + size / 2 + x * scale; };
    auto py = [&](double y) { return 24 + size / 2 - y * scale; };
    os << "<g>\n<rect x=\"" << ox << "\" y=\"24\" width=\"" << size << "\" height=\"" << size
       << "\" fill=\"white\" stroke=\"#999\"/>\n";
    os << "<text x=\"" << ox + 6 << "\" y=\"16\" font-size=\"12\">" << panels[k].label
       << "</text>\n";
    os << "<line x1=\"" << ox << "\" y1=\"" << py(0) << "\" x2=\"" << ox + size << "\" y2=\""
       << py(0) << "\" stroke=\"#ccc\"/>\n";
    for (const auto& s : samples) {
      if (s.panel != k) continue;
      const char* fill = s.verdict == membership::interior   ? "#2b7bb9"
                         : s.verdict == membership::boundary ? "#f0a030"
                                                             : "#dddddd";
      os << "<circle cx=\"" << format_number(px(s.z.real())) << "\" cy=\""
         << format_number(py(s.z.imag())) << "\" r=\"1.2\" fill=\"" << fill << "\"/>\n";
    }
    auto ring = [&](complex_point c, const extended_real& r, const char* color) {
      if (r.is_infinite()) return;
      os << "<circle cx=\"" << format_number(px(c.real())) << "\" cy=\""
         << format_number(py(c.imag())) << "\" r=\"" << format_number(r.value() * scale)
         << "\" fill=\"none\" stroke=\"" << color << "\"/>\n";
    };
    ring(zp, panels[k].near_radius, "#1a4d80");
    if (panels[k].far_radius) ring(std::conj(zp), *panels[k].far_radius, "#b03030");
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace sedenion
