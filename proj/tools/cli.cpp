#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "sedenion/cd_core.hpp"
#include "sedenion/figure.hpp"
#include "sedenion/io.hpp"
#include "sedenion/slice_geometry.hpp"
#include "sedenion/star_series.hpp"
#include "sedenion/zero_structure.hpp"

namespace sedenion::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* out_dir_env = "SEDENION_OUT_DIR";

/// A verification step failed; maps to exit status 1.
struct verification_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Inline JSON when the argument starts with '{', otherwise a file path.
seq_spec load_seq(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') return parse_seq_spec(arg);
  return parse_seq_spec(read_file(arg));
}

fs::path output_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(out_dir_env)) return env;
  return fs::current_path();
}

std::vector<double> parse_range(const std::string& spec) {
  // start:stop:step, inclusive of stop up to rounding
  std::vector<double> out;
  double a = 0, b = 0, h = 0;
  char c1 = 0, c2 = 0;
  std::istringstream ss(spec);
  if (!(ss >> a >> c1 >> b >> c2 >> h) || c1 != ':' || c2 != ':' || h <= 0 || b < a) {
    throw parse_error("range must be start:stop:step, got '" + spec + "'");
  }
  const auto n = static_cast<long>(std::floor((b - a) / h + 1e-9));
  for (long k = 0; k <= n; ++k) out.push_back(a + h * static_cast<double>(k));
  return out;
}

slice_unit parse_slice(const std::string& text) { return slice_unit(parse_sedenion(text)); }

octonion_frame parse_frame(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw parse_error("frame must be 'i1,i2'");
  return {as_octonion(parse_sedenion(text.substr(0, comma))),
          as_octonion(parse_sedenion(text.substr(comma + 1)))};
}

void print_polar(std::ostream& out, const polar_coordinates& pc) {
  out << "alpha=" << format_number(pc.alpha) << " theta=" << format_number(pc.theta)
      << " j=" << format_sedenion(pc.jmath) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sedenion arithmetic, zero divisors and convergence domains of star-power series"};
  app.name("sedenion-cli");
  app.require_subcommand(1);
  std::uint64_t seed = default_seed;
  app.add_option("--seed", seed, "Random seed for sampled slices");

  // table
  auto* table = app.add_subcommand("table", "Print or verify the multiplication table");
  bool verify = false;
  int level = 4;
  table->add_flag("--verify", verify, "Compare against the built-in sedenion table");
  table->add_option("--level", level, "Cayley-Dickson level (0..4)");

  // mul
  auto* mul = app.add_subcommand("mul", "Product of two elements");
  std::string lhs, rhs;
  mul->add_option("a", lhs)->required();
  mul->add_option("b", rhs)->required();

  // kernel
  auto* kernel = app.add_subcommand("kernel", "Kernel of left multiplication");
  std::string kernel_arg;
  kernel->add_option("s", kernel_arg)->required();

  // decompose
  auto* decompose = app.add_subcommand("decompose", "Split x along O_p, ker p and ker p^c8");
  std::string dec_x, dec_p;
  decompose->add_option("x", dec_x)->required();
  decompose->add_option("--zd", dec_p, "Zero divisor p")->required();

  // zd-check
  auto* zd = app.add_subcommand("zd-check", "Test (a + b e8)(c + d e8) = 0 for octonions a, b, c, d");
  std::string za, zb, zc, zd_arg;
  zd->add_option("a", za)->required();
  zd->add_option("b", zb)->required();
  zd->add_option("c", zc)->required();
  zd->add_option("d", zd_arg)->required();

  // hyper
  auto* hyper = app.add_subcommand("hyper", "Classify a pair of slice units");
  std::string hj1, hj2;
  hyper->add_option("j1", hj1)->required();
  hyper->add_option("j2", hj2)->required();

  // polar
  auto* pol = app.add_subcommand("polar", "Polar coordinates of a slice unit, or psi of polar data");
  std::string pol_s, pol_frame;
  double pol_alpha = 0, pol_theta = 0;
  pol->add_option("s", pol_s);
  auto* alpha_opt = pol->add_option("--alpha", pol_alpha);
  pol->add_option("--theta", pol_theta);
  pol->add_option("--frame", pol_frame, "i1,i2");

  // cker
  auto* cker = app.add_subcommand("cker", "Kernel curve through a hyper-solution pair");
  std::string cj1, cj2, ck;
  int samples = 16;
  cker->add_option("--j1", cj1)->required();
  cker->add_option("--j2", cj2)->required();
  cker->add_option("--k", ck, "Test membership of this slice unit instead");
  cker->add_option("--samples", samples, "Curve samples in CSV output");

  // shared series options
  std::string center, seq, point, slice, out_flag;
  auto series_opts = [&](CLI::App* sub) {
    sub->add_option("--center", center, "Expansion point p")->required();
    sub->add_option("--seq", seq, "Sequence spec JSON file or inline JSON")->required();
  };

  auto* radii = app.add_subcommand("radii", "Convergence radii");
  series_opts(radii);

  auto* contains = app.add_subcommand("contains", "Membership of a point in the convergence domain");
  series_opts(contains);
  contains->add_option("--point", point)->required();

  auto* eval = app.add_subcommand("eval", "Evaluate the series at a point");
  series_opts(eval);
  eval_options eopt;
  eval->add_option("--point", point)->required();
  eval->add_option("--max-terms", eopt.max_terms);
  eval->add_option("--tol", eopt.tol);

  auto* scan = app.add_subcommand("scan", "Compare predicted membership with evaluation on a grid");
  series_opts(scan);
  std::string radial_spec = "0.2:4.0:0.2";
  int angles = 8;
  double band = 0.05;
  scan->add_option("--slice", slice)->required();
  scan->add_option("--radii", radial_spec, "start:stop:step around z_p");
  scan->add_option("--angles", angles, "Equally spaced grid angles");
  scan->add_option("--band", band, "Excluded half-width around boundaries");
  scan->add_option("--max-terms", eopt.max_terms);
  scan->add_option("--tol", eopt.tol);
  scan->add_option("--csv", out_flag, "Write samples to this CSV file");

  auto* figure = app.add_subcommand("figure", "Cross-sections of the domain on four slices");
  series_opts(figure);
  int radial = 100, angular = 100;
  double extent = 4.5;
  bool svg = false;
  figure->add_option("--radial", radial);
  figure->add_option("--angular", angular);
  figure->add_option("--extent", extent, "Largest sampled radius");
  figure->add_flag("--svg", svg, "Also write figure.svg");
  figure->add_option("--out-dir", out_flag, std::string("Output directory (default $") + out_dir_env + ")");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*table) {
      const multiplication_table t(level);
      if (verify) {
        const std::size_t hits = t.count_reference_matches();
        out << hits << "/256 entries match\n";
        return hits == 256 ? 0 : 1;
      }
      for (std::size_t n = 0; n < t.size(); ++n) out << ",e" << n;
      out << "\n";
      for (std::size_t m = 0; m < t.size(); ++m) {
        out << "e" << m;
        for (std::size_t n = 0; n < t.size(); ++n) out << "," << to_string(t.at(m, n));
        out << "\n";
      }
    } else if (*mul) {
      out << format_sedenion(parse_sedenion(lhs) * parse_sedenion(rhs)) << "\n";
    } else if (*kernel) {
      const subspace k = kernel_of_left_mult(parse_sedenion(kernel_arg));
      json j;
      j["dim"] = k.dim();
      j["basis"] = json::array();
      for (const auto& b : k.basis_elements()) j["basis"].push_back(to_json(b));
      out << j.dump() << "\n";
    } else if (*decompose) {
      const auto d = ortho_decompose(parse_sedenion(dec_x), parse_sedenion(dec_p));
      out << "o_part=" << format_sedenion(d.o_part) << "\n"
          << "ker_part=" << format_sedenion(d.ker_part) << "\n"
          << "kerc_part=" << format_sedenion(d.kerc_part) << "\n";
    } else if (*zd) {
      const auto r = zero_product_characterization(parse_sedenion(za), parse_sedenion(zb),
                                                   parse_sedenion(zc), parse_sedenion(zd_arg));
      out << "zero=" << (r.is_zero ? "true" : "false")
          << " product_norm=" << format_number(r.product_norm) << "\n";
      if (r.certificate) {
        out << "equal_norms=" << r.certificate->equal_norms
            << " d_matches_formula=" << r.certificate->d_matches_formula
            << " special_triple=" << r.certificate->special_triple
            << " predicted_d=" << format_sedenion(r.certificate->predicted_d) << "\n";
      }
      if (!r.consistent) throw verification_failure("criterion and direct product disagree");
    } else if (*hyper) {
      const slice_unit j1 = parse_slice(hj1);
      const slice_unit j2 = parse_slice(hj2);
      const bool is_h = is_hyper_solution(j1, j2);
      out << "hyper_solution=" << (is_h ? "true" : "false") << "\n";
      if (is_h) {
        const hyper_solution h = iota_frame(j1, j2);
        out << "alpha=" << format_number(h.alpha) << " i1=" << format_sedenion(h.frame.i1)
            << " i2=" << format_sedenion(h.frame.i2) << "\n";
      }
    } else if (*pol) {
      if (alpha_opt->count() > 0) {
        const slice_unit s = psi(pol_alpha, pol_theta, pol_frame.empty() ? octonion_frame{} : parse_frame(pol_frame));
        out << format_sedenion(s.value()) << "\n";
      } else {
        if (pol_s.empty()) throw parse_error("polar needs a slice unit or --alpha/--theta");
        print_polar(out, polar(parse_sedenion(pol_s)));
      }
    } else if (*cker) {
      const slice_unit j1 = parse_slice(cj1);
      const slice_unit j2 = parse_slice(cj2);
      if (!ck.empty()) {
        out << "member=" << (cker_membership(parse_slice(ck), j1, j2) ? "true" : "false") << "\n";
      } else {
        out << "theta";
        for (int m = 0; m < 16; ++m) out << ",e" << m;
        out << "\n";
        for (int k = 0; k < samples; ++k) {
          const double t = std::numbers::pi * k / samples;
          const slice_unit u = cker_curve_point(j1, j2, t);
          out << format_number(t);
          for (std::size_t m = 0; m < 16; ++m) out << "," << format_number(u.value()[m]);
          out << "\n";
        }
      }
    } else if (*radii) {
      const domain_model model(load_seq(seq), wpoint::from_element(parse_sedenion(center)));
      const auto& r = model.report();
      out << "R_a=" << format_number(r.r_a) << " R_a^p=" << format_number(r.r_ap)
          << " witness=" << (r.witness ? format_sedenion(r.witness->value()) : std::string("none"))
          << " case=" << to_string(r.which) << (r.approximate ? " (approximate)" : "") << "\n";
    } else if (*contains) {
      const domain_model model(load_seq(seq), wpoint::from_element(parse_sedenion(center)));
      out << to_string(model.contains(wpoint::from_element(parse_sedenion(point)))) << "\n";
    } else if (*eval) {
      const auto r = evaluate_series(wpoint::from_element(parse_sedenion(point)),
                                     wpoint::from_element(parse_sedenion(center)), load_seq(seq), eopt);
      out << "sum=" << format_sedenion(r.partial_sum) << "\n"
          << "terms=" << r.terms_used << " verdict=" << to_string(r.result)
          << " tail_norm=" << format_number(r.tail_norm) << "\n";
    } else if (*scan) {
      const domain_model model(load_seq(seq), wpoint::from_element(parse_sedenion(center)));
      std::vector<double> angle_grid;
      for (int k = 0; k < angles; ++k) angle_grid.push_back(2.0 * std::numbers::pi * k / angles);
      scan_options sopt;
      sopt.eval = eopt;
      sopt.band = band;
      const scan_result res = convergence_scan(model, parse_slice(slice), parse_range(radial_spec), angle_grid, sopt);
      if (!out_flag.empty()) {
        std::ofstream csv(out_flag);
        csv << "theta,re,im,predicted,empirical,terms_used,tail_norm\n";
        for (const auto& s : res.samples) {
          csv << format_number(s.theta) << ',' << format_number(s.z.real()) << ','
              << format_number(s.z.imag()) << ',' << to_string(s.predicted) << ','
              << to_string(s.empirical.result) << ',' << s.empirical.terms_used << ','
              << format_number(s.empirical.tail_norm) << '\n';
        }
      }
      out << "agreement=" << res.agreed << "/" << res.scored << " ("
          << format_number(100.0 * res.agreement()) << "%)\n";
      if (res.agreed != res.scored) return 1;
    } else if (*figure) {
      const domain_model model(load_seq(seq), wpoint::from_element(parse_sedenion(center)));
      std::mt19937_64 rng(seed);
      const auto panels = representative_panels(model, rng);
      const auto samples_out = sample_panels(model, panels, radial, angular, extent);
      const fs::path dir = output_dir(out_flag);
      fs::create_directories(dir);
      for (std::size_t k = 0; k < panels.size(); ++k) {
        std::vector<figure_sample> mine;
        for (const auto& s : samples_out) {
          if (s.panel == k) mine.push_back(s);
        }
        const fs::path file = dir / ("figure_" + panels[k].label + ".csv");
        std::ofstream(file) << figure_csv(panels, mine);
        out << panels[k].label << ": slice=" << format_sedenion(panels[k].slice.value())
            << " near=" << format_number(panels[k].near_radius) << " far="
            << (panels[k].far_radius ? format_number(*panels[k].far_radius) : std::string("-"))
            << " -> " << file.string() << "\n";
      }
      if (svg) {
        const fs::path file = dir / "figure.svg";
        std::ofstream(file) << figure_svg(model, panels, samples_out, extent + 1.5);
        out << "svg -> " << file.string() << "\n";
      }
    }
  } catch (const verification_failure& e) {
    err << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace sedenion::cli
