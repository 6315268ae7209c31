#include "lmi/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "lmi/analysis.hpp"
#include "lmi/classify.hpp"
#include "lmi/errors.hpp"
#include "lmi/oracle.hpp"
#include "lmi/plot.hpp"
#include "lmi/serialize.hpp"

namespace lmi::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool parse_double(const std::string& s, double& v) {
  if (s.empty()) return false;
  char* end = nullptr;
  v = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size() && std::isfinite(v);
}

// Decimal float prefix: sign, digits, point, exponent. Returns chars consumed.
std::size_t scan_decimal(const std::string& s, std::size_t pos) {
  std::size_t k = pos;
  if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
  std::size_t digits = 0;
  while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k, ++digits;
  if (k < s.size() && s[k] == '.') {
    ++k;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k, ++digits;
  }
  if (digits == 0) return 0;
  if (k < s.size() && (s[k] == 'e' || s[k] == 'E')) {
    std::size_t e = k + 1;
    if (e < s.size() && (s[e] == '+' || s[e] == '-')) ++e;
    std::size_t ed = e;
    while (ed < s.size() && std::isdigit(static_cast<unsigned char>(s[ed]))) ++ed;
    if (ed > e) k = ed;
  }
  return k - pos;
}

std::string fmt(double v) { return format_number(v); }

std::string interval_text(const RealInterval& iv) {
  if (iv.empty) return "empty";
  return "(" + fmt(iv.lo) + ", " + fmt(iv.hi) + ")";
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v;
    if (!parse_double(item, v)) throw UsageError(flag + ": '" + item + "' is not a finite number");
    vals.push_back(v);
  }
  if (vals.empty()) throw UsageError(flag + ": empty list");
  return vals;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

bool usage_class(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::ShapeError:
    case ErrorCode::NotSymmetricL:
    case ErrorCode::InvalidArgument:
    case ErrorCode::ParameterOutOfRange:
    case ErrorCode::IoError:
      return true;
    default:
      return false;
  }
}

LmiRegion build_named(const std::string& name, const std::vector<double>& p) {
  struct Entry {
    const char* name;
    std::size_t arity;
  };
  static const Entry table[] = {{"left_halfplane", 0}, {"disk", 2},   {"conic_sector", 1}, {"sliced_sector", 2},
                                {"vstrip", 2},         {"hstrip", 1}, {"s_region", 3},     {"parabola", 1}};
  for (const Entry& e : table) {
    if (name != e.name) continue;
    if (p.size() != e.arity)
      throw UsageError("--params: " + name + " takes " + std::to_string(e.arity) + " parameter(s), got " +
                       std::to_string(p.size()));
    if (name == "left_halfplane") return builders::left_halfplane();
    if (name == "disk") return builders::disk(p[0], p[1]);
    if (name == "conic_sector") return builders::conic_sector(p[0]);
    if (name == "sliced_sector") return builders::sliced_sector(p[0], p[1]);
    if (name == "vstrip") return builders::vstrip(p[0], p[1]);
    if (name == "hstrip") return builders::hstrip(p[0]);
    if (name == "s_region") return builders::s_region(p[0], p[1], p[2]);
    return builders::parabola(p[0]);
  }
  throw UsageError("builder: unknown region name '" + name + "'");
}

Matrix parse_matrix_file(const std::string& path) {
  Json j = parse_json_text(read_text_file(path), path);
  if (j.is_object()) {
    if (!j.contains("A")) throw Error(ErrorCode::ShapeError, path + ": field A: missing");
    j = j["A"];
  }
  Matrix a = matrix_from_json(j, "A");
  if (!a.square()) throw Error(ErrorCode::ShapeError, path + ": field A: not square");
  return a;
}

void write_region(std::ostream& out, const LmiRegion& r, const std::string& path) {
  const std::string text = region_file_text(r);
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
    out << "wrote " << path << "\n";
  }
}

struct Verification {
  RealInterval scan;
  bool interval_ok = true;
  std::optional<double> angle_scan;
  bool angle_ok = true;
  std::optional<bool> disk_ok;
  bool all_ok() const { return interval_ok && angle_ok && disk_ok.value_or(true); }
};

bool endpoint_close(double a, double b, double tol) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= tol;
}

Verification verify(const LmiRegion& r, const RegionReport& rep, const ToleranceConfig& cfg) {
  Verification v;
  double s = 1.0;
  if (!rep.interval.empty) {
    if (std::isfinite(rep.interval.lo)) s = std::max(s, std::abs(rep.interval.lo));
    if (std::isfinite(rep.interval.hi)) s = std::max(s, std::abs(rep.interval.hi));
  }
  const double window = 100.0 * s;
  const int steps = 20000;
  v.scan = interval_by_scan(r, -window, window, steps, cfg, 30);
  const double tol = 1e-6 * s;
  if (rep.interval.empty || v.scan.empty) {
    v.interval_ok = rep.interval.empty == v.scan.empty;
  } else {
    v.interval_ok = endpoint_close(rep.interval.lo, v.scan.lo, tol) && endpoint_close(rep.interval.hi, v.scan.hi, tol);
  }
  if (rep.recession && rep.recession->kind == ConeKind::ProperCone && rep.recession->angle) {
    v.angle_scan = angle_by_ray_scan(r, 1e6 * s, 4096, cfg);
    v.angle_ok = std::abs(*v.angle_scan - *rep.recession->angle) <= std::numbers::pi / 2048.0;
  }
  if (!rep.empty) {
    Disk d = inscribed_disk(r, std::nullopt, cfg);
    if (std::isfinite(d.radius)) {
      d.radius *= 1.0 - 1e-9;
      // The shrink is as small as the default margin, so sample with a finer one.
      ToleranceConfig fine = cfg;
      fine.def_margin = std::min(cfg.def_margin, 1e-12);
      v.disk_ok = containment_by_sampling(r, d, 720, fine);
    }
  }
  return v;
}

std::vector<Overlay> plot_overlays(const LmiRegion& r, const std::vector<std::string>& wanted,
                                   const ToleranceConfig& cfg) {
  std::vector<Overlay> overlays;
  for (const std::string& w : wanted) {
    if (w == "disk") {
      if (is_empty(r, cfg)) continue;
      Disk d = inscribed_disk(r, std::nullopt, cfg);
      overlays.push_back(d);
    } else if (w == "pieces") {
      Decomposition dec;
      try {
        dec = elementary_decomposition(r, cfg);
      } catch (const Error&) {
        try {
          dec = decomposition_simdiag(r, cfg);
        } catch (const Error&) {
          continue;
        }
      }
      for (const ElementaryPiece& p : dec.pieces) overlays.push_back(p);
    } else if (w != "none") {
      throw UsageError("--overlay: unknown overlay '" + w + "' (disk, pieces, none)");
    }
  }
  return overlays;
}

}  // namespace

std::optional<ComplexPoint> parse_complex(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return std::nullopt;
  const std::string s = text.substr(first, text.find_last_not_of(" \t\r\n") - first + 1);
  auto to_double = [](const std::string& t) { return std::strtod(t.c_str(), nullptr); };
  const std::size_t n1 = scan_decimal(s, 0);
  if (n1 == s.size()) return ComplexPoint{to_double(s), 0.0};
  if (s.back() != 'i') return std::nullopt;
  const std::string body = s.substr(0, s.size() - 1);
  // pure imaginary: "bi", "-i", "i"
  if (n1 == body.size() && n1 > 0) return ComplexPoint{0.0, to_double(body)};
  if (body.empty() || body == "+") return ComplexPoint{0.0, 1.0};
  if (body == "-") return ComplexPoint{0.0, -1.0};
  if (n1 == 0) return std::nullopt;
  const double re = to_double(body.substr(0, n1));
  std::string rest = body.substr(n1);
  if (rest.empty() || (rest[0] != '+' && rest[0] != '-')) return std::nullopt;
  double im;
  if (rest.size() == 1) {
    im = rest[0] == '-' ? -1.0 : 1.0;
  } else {
    if (scan_decimal(rest, 0) != rest.size()) return std::nullopt;
    im = to_double(rest);
  }
  if (!std::isfinite(re) || !std::isfinite(im)) return std::nullopt;
  return ComplexPoint{re, im};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analyze and plot LMI regions of the complex plane.", "lmi"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  bool json = false;
  double eig_tol = 0.0, def_margin = 0.0, geom_tol = 0.0;
  app.add_flag("--json", json, "JSON output");
  CLI::Option* eig_opt = app.add_option("--eig-tol", eig_tol, "Jacobi stopping tolerance");
  CLI::Option* def_opt = app.add_option("--def-margin", def_margin, "definiteness margin");
  CLI::Option* geom_opt = app.add_option("--geom-tol", geom_tol, "geometric tolerance");

  std::string file, file2, out_path, z_text, x0_text, name, params_text, spectrum_text, matrix_path;
  std::string viewport_text, px_text, svg_path, csv_path, new_name;
  std::vector<std::string> overlay_names{"disk"};
  double x0 = 0.0, alpha = 0.0;
  bool do_verify = false;

  auto* analyze = app.add_subcommand("analyze", "emptiness, interval, boundedness, lineality, recession cone");
  analyze->add_option("file", file, "region JSON")->required();
  analyze->add_flag("--verify", do_verify, "cross-check with the scan oracles");

  auto* contains_cmd = app.add_subcommand("contains", "membership of a point");
  contains_cmd->add_option("file", file, "region JSON")->required();
  contains_cmd->add_option("--z", z_text, "point as a+bi")->required();

  auto* interval_cmd = app.add_subcommand("interval", "intersection with the real axis");
  interval_cmd->add_option("file", file, "region JSON")->required();

  auto* slice_cmd = app.add_subcommand("slice", "half-height of the vertical slice at x0");
  slice_cmd->add_option("file", file, "region JSON")->required();
  slice_cmd->add_option("--x0", x0, "abscissa")->required();

  auto* inscribe_cmd = app.add_subcommand("inscribe", "inscribed disk centered on the real axis");
  inscribe_cmd->add_option("file", file, "region JSON")->required();
  CLI::Option* inscribe_x0 = inscribe_cmd->add_option("--x0", x0, "center abscissa");

  auto* omega_cmd = app.add_subcommand("omega", "infimum of r(x)/|x| over the real interval");
  omega_cmd->add_option("file", file, "region JSON")->required();

  auto* classify_cmd = app.add_subcommand("classify", "curve census and elementary decomposition");
  classify_cmd->add_option("file", file, "region JSON")->required();

  auto* plot_cmd = app.add_subcommand("plot", "rasterize and write SVG/CSV");
  plot_cmd->add_option("file", file, "region JSON")->required();
  plot_cmd->add_option("--viewport", viewport_text, "xlo,xhi,ylo,yhi");
  plot_cmd->add_option("--px", px_text, "W,H");
  plot_cmd->add_option("--svg", svg_path, "SVG output path");
  plot_cmd->add_option("--csv", csv_path, "CSV output path");
  plot_cmd->add_option("--overlay", overlay_names, "disk, pieces or none")->delimiter(',');

  auto* intersect_cmd = app.add_subcommand("intersect", "intersection of two regions");
  intersect_cmd->add_option("file", file, "first region JSON")->required();
  intersect_cmd->add_option("file2", file2, "second region JSON")->required();
  intersect_cmd->add_option("--name", new_name, "name of the result");
  intersect_cmd->add_option("--out", out_path, "output path");

  auto* shift_cmd = app.add_subcommand("shift", "translate along the real axis");
  shift_cmd->add_option("file", file, "region JSON")->required();
  shift_cmd->add_option("--alpha", alpha, "shift")->required();
  shift_cmd->add_option("--out", out_path, "output path");

  auto* scale_cmd = app.add_subcommand("scale", "scale by a nonzero real");
  scale_cmd->add_option("file", file, "region JSON")->required();
  scale_cmd->add_option("--alpha", alpha, "factor")->required();
  scale_cmd->add_option("--out", out_path, "output path");

  auto* builder_cmd = app.add_subcommand("builder", "write a standard region file");
  builder_cmd->add_option("name", name,
                          "left_halfplane, disk, conic_sector, sliced_sector, vstrip, hstrip, s_region, parabola")
      ->required();
  builder_cmd->add_option("--params", params_text, "comma-separated parameters");
  builder_cmd->add_option("--out", out_path, "output path");

  auto* dstable_cmd = app.add_subcommand("dstable", "whether a spectrum or matrix is stable for the region");
  dstable_cmd->add_option("file", file, "region JSON")->required();
  auto* spec_opt = dstable_cmd->add_option("--spectrum", spectrum_text, "comma-separated a+bi list");
  auto* mat_opt = dstable_cmd->add_option("--matrix", matrix_path, "JSON matrix file");
  spec_opt->excludes(mat_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    ToleranceConfig cfg;
    if (const char* env = std::getenv("LMI_TOL_DEF")) {
      double v;
      if (!parse_double(env, v) || v <= 0.0) throw UsageError("LMI_TOL_DEF: expected a positive number");
      cfg.def_margin = v;
    }
    if (eig_opt->count()) cfg.eig_tol = eig_tol;
    if (def_opt->count()) cfg.def_margin = def_margin;
    if (geom_opt->count()) cfg.geom_tol = geom_tol;
    try {
      cfg.validate();
    } catch (const Error& e) {
      throw UsageError(std::string("tolerances: ") + e.what());
    }

    if (analyze->parsed()) {
      LmiRegion r = parse_region_file(file, cfg);
      RegionReport rep = region_report(r, cfg);
      std::optional<Verification> v;
      if (do_verify) v = verify(r, rep, cfg);
      if (json) {
        Json j = to_json(rep);
        if (v) {
          Json jv = Json::object();
          jv["interval_scan"] = to_json(v->scan);
          jv["interval_ok"] = v->interval_ok;
          jv["angle_scan"] = v->angle_scan ? number_json(*v->angle_scan) : Json(nullptr);
          jv["angle_ok"] = v->angle_ok;
          jv["disk_ok"] = v->disk_ok ? Json(*v->disk_ok) : Json(nullptr);
          j["verify"] = std::move(jv);
        }
        emit(out, j);
      } else {
        if (!r.name().empty()) out << "name: " << r.name() << "\n";
        out << "order: " << rep.order << "\n";
        out << "empty: " << (rep.empty ? "true" : "false") << "\n";
        out << "interval: " << interval_text(rep.interval) << "\n";
        out << "bounded: " << (rep.bounded ? "true" : "false") << "\n";
        if (rep.lineality) out << "lineality: " << lineality_name(*rep.lineality) << "\n";
        if (rep.recession) {
          out << "recession: " << cone_kind_name(rep.recession->kind);
          if (rep.recession->orientation != Orientation::None)
            out << " (" << orientation_name(rep.recession->orientation) << ")";
          out << "\n";
          if (rep.recession->angle) out << "angle: " << fmt(*rep.recession->angle) << "\n";
        }
        if (v) {
          out << "verify interval: " << (v->interval_ok ? "ok" : "MISMATCH") << " (scan " << interval_text(v->scan)
              << ")\n";
          if (v->angle_scan)
            out << "verify angle: " << (v->angle_ok ? "ok" : "MISMATCH") << " (scan " << fmt(*v->angle_scan)
                << ")\n";
          if (v->disk_ok) out << "verify disk: " << (*v->disk_ok ? "ok" : "MISMATCH") << "\n";
        }
      }
      return v && !v->all_ok() ? 1 : 0;
    }

    if (contains_cmd->parsed()) {
      auto z = parse_complex(z_text);
      if (!z) throw UsageError("--z: '" + z_text + "' is not a complex literal a+bi");
      LmiRegion r = parse_region_file(file, cfg);
      const bool in = contains(r, *z, cfg);
      if (json) {
        Json j = Json::object();
        j["re"] = number_json(z->x);
        j["im"] = number_json(z->y);
        j["contains"] = in;
        emit(out, j);
      } else {
        out << (in ? "true" : "false") << "\n";
      }
      return 0;
    }

    if (interval_cmd->parsed()) {
      LmiRegion r = parse_region_file(file, cfg);
      RealInterval iv = real_interval(r, cfg);
      if (json)
        emit(out, to_json(iv));
      else
        out << interval_text(iv) << "\n";
      return 0;
    }

    if (slice_cmd->parsed()) {
      LmiRegion r = parse_region_file(file, cfg);
      const double y = slice_bound(r, x0, cfg);
      if (json) {
        Json j = Json::object();
        j["x0"] = number_json(x0);
        j["slice_bound"] = number_json(y);
        emit(out, j);
      } else {
        out << fmt(y) << "\n";
      }
      return 0;
    }

    if (inscribe_cmd->parsed()) {
      LmiRegion r = parse_region_file(file, cfg);
      Disk d = inscribed_disk(r, inscribe_x0->count() ? std::optional<double>(x0) : std::nullopt, cfg);
      if (json)
        emit(out, to_json(d));
      else
        out << "center " << fmt(d.center_x) << "\nradius " << fmt(d.radius) << "\n";
      return 0;
    }

    if (omega_cmd->parsed()) {
      LmiRegion r = parse_region_file(file, cfg);
      OmegaResult om = omega(r, cfg);
      if (json)
        emit(out, to_json(om));
      else
        out << "omega " << fmt(om.value) << "\nargmin " << fmt(om.argmin) << "\nsamples " << om.samples << "\n";
      return 0;
    }

    if (classify_cmd->parsed()) {
      LmiRegion r = parse_region_file(file, cfg);
      CurveCensus census = curve_census(r, cfg);
      std::optional<Decomposition> dec;
      std::string method, reason;
      try {
        dec = elementary_decomposition(r, cfg);
        method = "elementary";
      } catch (const Error& e1) {
        if (e1.code() != ErrorCode::NotNormal && e1.code() != ErrorCode::NotCommuting) throw;
        try {
          dec = decomposition_simdiag(r, cfg);
          method = "simdiag";
        } catch (const Error& e2) {
          if (e2.code() != ErrorCode::NotReducible && e2.code() != ErrorCode::SingularSymM) throw;
          reason = std::string(e1.what()) + "; " + e2.what();
        }
      }
      if (json) {
        Json j = Json::object();
        j["census"] = to_json(census);
        Json jd = Json::object();
        jd["method"] = dec ? Json(method) : Json(nullptr);
        jd["pieces"] = dec ? to_json(*dec) : Json(nullptr);
        jd["reason"] = dec ? Json(nullptr) : Json(reason);
        j["decomposition"] = std::move(jd);
        emit(out, j);
      } else {
        out << "inertia: " << census.inertia.n_pos << " " << census.inertia.n_neg << " " << census.inertia.n_zero
            << "\n";
        out << "elliptic: " << census.elliptic << " (bound " << census.elliptic_bound << ")\n";
        out << "hyperbolic_or_pair: " << census.hyperbolic_or_pair << " (bound " << census.hyperbolic_bound << ")\n";
        out << "parabolic: " << census.parabolic << " (reference " << census.parabolic_reference << ")\n";
        out << "degenerate: " << census.degenerate << "\n";
        for (const CurveRegion& c : census.curves)
          out << "  P(" << c.i << "," << c.j << ") " << conic_kind_name(c.kind) << ": a11=" << fmt(c.a11)
              << " a22=" << fmt(c.a22) << " a13=" << fmt(c.a13) << " a33=" << fmt(c.a33) << "\n";
        if (dec) {
          out << "decomposition (" << method << "):\n";
          for (const ElementaryPiece& p : dec->pieces) {
            out << "  " << piece_kind_name(p.kind);
            for (double v : p.params()) out << " " << fmt(v);
            out << "\n";
          }
        } else {
          out << "decomposition: unavailable (" << reason << ")\n";
        }
      }
      return 0;
    }

    if (plot_cmd->parsed()) {
      LmiRegion r = parse_region_file(file, cfg);
      int w = 256, h = 256;
      if (!px_text.empty()) {
        std::vector<double> p = parse_list(px_text, "--px");
        if (p.size() != 2 || p[0] != std::floor(p[0]) || p[1] != std::floor(p[1]) || p[0] > 8192 || p[1] > 8192)
          throw UsageError("--px: expected W,H as two integers");
        w = static_cast<int>(p[0]);
        h = static_cast<int>(p[1]);
      }
      Viewport vp;
      if (!viewport_text.empty()) {
        std::vector<double> v = parse_list(viewport_text, "--viewport");
        if (v.size() != 4) throw UsageError("--viewport: expected xlo,xhi,ylo,yhi");
        vp = Viewport{v[0], v[1], v[2], v[3], w, h};
      } else {
        vp = default_viewport(r, w, h, cfg);
      }
      try {
        vp.validate();
      } catch (const Error& e) {
        throw UsageError(std::string("--viewport/--px: ") + e.what());
      }
      MembershipGrid grid = raster(r, vp, cfg);
      std::vector<Polyline> curves;
      for (std::size_t j = 1; j <= r.order(); ++j) {
        std::vector<Polyline> c = minor_curves(r, vp, j, cfg);
        curves.insert(curves.end(), c.begin(), c.end());
      }
      std::vector<Overlay> overlays = plot_overlays(r, overlay_names, cfg);
      if (!svg_path.empty()) emit_svg(grid, curves, overlays, svg_path);
      if (!csv_path.empty()) emit_csv(grid, csv_path);
      int boundary = static_cast<int>(std::count(grid.boundary_mask.begin(), grid.boundary_mask.end(), true));
      if (json) {
        Json j = Json::object();
        j["viewport"] = {number_json(vp.x_lo), number_json(vp.x_hi), number_json(vp.y_lo), number_json(vp.y_hi)};
        j["px"] = {vp.width_px, vp.height_px};
        j["members"] = grid.member_count();
        j["boundary_cells"] = boundary;
        j["curves"] = curves.size();
        j["svg"] = svg_path.empty() ? Json(nullptr) : Json(svg_path);
        j["csv"] = csv_path.empty() ? Json(nullptr) : Json(csv_path);
        emit(out, j);
      } else {
        out << "viewport " << fmt(vp.x_lo) << "," << fmt(vp.x_hi) << "," << fmt(vp.y_lo) << "," << fmt(vp.y_hi)
            << "\n";
        out << "cells " << vp.width_px << "x" << vp.height_px << ", " << grid.member_count() << " member, "
            << boundary << " boundary\n";
        out << "curves " << curves.size() << "\n";
        if (!svg_path.empty()) out << "svg " << svg_path << "\n";
        if (!csv_path.empty()) out << "csv " << csv_path << "\n";
      }
      return 0;
    }

    if (intersect_cmd->parsed()) {
      LmiRegion r = intersect(parse_region_file(file, cfg), parse_region_file(file2, cfg));
      if (!new_name.empty()) r = r.renamed(new_name);
      write_region(out, r, out_path);
      return 0;
    }

    if (shift_cmd->parsed()) {
      write_region(out, shift(parse_region_file(file, cfg), alpha), out_path);
      return 0;
    }

    if (scale_cmd->parsed()) {
      write_region(out, scale(parse_region_file(file, cfg), alpha), out_path);
      return 0;
    }

    if (builder_cmd->parsed()) {
      std::vector<double> p;
      if (!params_text.empty()) p = parse_list(params_text, "--params");
      write_region(out, build_named(name, p), out_path);
      return 0;
    }

    if (dstable_cmd->parsed()) {
      LmiRegion r = parse_region_file(file, cfg);
      bool stable;
      if (spec_opt->count()) {
        std::vector<std::complex<double>> spectrum;
        std::stringstream ss(spectrum_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
          auto z = parse_complex(item);
          if (!z) throw UsageError("--spectrum: '" + item + "' is not a complex literal a+bi");
          spectrum.emplace_back(z->x, z->y);
        }
        if (spectrum.empty()) throw UsageError("--spectrum: empty list");
        stable = dstable(spectrum, r, cfg);
      } else if (mat_opt->count()) {
        stable = dstable_matrix(parse_matrix_file(matrix_path), r, cfg);
      } else {
        throw UsageError("dstable: one of --spectrum or --matrix is required");
      }
      if (json) {
        Json j = Json::object();
        j["dstable"] = stable;
        emit(out, j);
      } else {
        out << (stable ? "true" : "false") << "\n";
      }
      return 0;
    }
    throw UsageError("no subcommand");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage_class(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lmi::cli
