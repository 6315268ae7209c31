#include "lmi/plot.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "lmi/errors.hpp"

namespace lmi {

void Viewport::validate() const {
  if (!(std::isfinite(x_lo) && std::isfinite(x_hi) && std::isfinite(y_lo) && std::isfinite(y_hi)))
    throw Error(ErrorCode::InvalidArgument, "viewport bounds must be finite");
  if (!(x_lo < x_hi) || !(y_lo < y_hi)) throw Error(ErrorCode::InvalidArgument, "viewport needs lo < hi");
  if (width_px < 16 || height_px < 16) throw Error(ErrorCode::InvalidArgument, "viewport needs at least 16 pixels per side");
}

ComplexPoint Viewport::cell_center(int row, int col) const {
  return {x_lo + (col + 0.5) * dx(), y_hi - (row + 0.5) * dy()};
}

int MembershipGrid::member_count() const {
  return static_cast<int>(std::count(cells.begin(), cells.end(), true));
}

double boundary_band(const LmiRegion& r) {
  return 1e-3 * std::max(1.0, r.l().frobenius() + 2.0 * r.m().frobenius());
}

MembershipGrid raster(const LmiRegion& r, const Viewport& vp, const ToleranceConfig& cfg) {
  vp.validate();
  MembershipGrid g;
  g.viewport = vp;
  const std::size_t cells = static_cast<std::size_t>(vp.width_px) * vp.height_px;
  g.cells.assign(cells, false);
  g.boundary_mask.assign(cells, false);
  g.lambda.assign(cells, 0.0);
  const double band = boundary_band(r);
  for (int row = 0; row < vp.height_px; ++row)
    for (int col = 0; col < vp.width_px; ++col) {
      ComplexPoint z = vp.cell_center(row, col);
      std::size_t k = static_cast<std::size_t>(row) * vp.width_px + col;
      g.cells[k] = contains(r, z, cfg);
      g.lambda[k] = lambda_max(r, z, cfg);
      g.boundary_mask[k] = std::abs(g.lambda[k]) <= band;
    }
  return g;
}

double leading_minor(const LmiRegion& r, ComplexPoint z, std::size_t j) {
  if (j < 1 || j > r.order()) throw Error(ErrorCode::IndexOutOfRange, "minor order must lie in 1..n");
  CharValue f = char_fn(r, z);
  std::vector<std::complex<double>> a(j * j);
  for (std::size_t p = 0; p < j; ++p)
    for (std::size_t q = 0; q < j; ++q) a[p * j + q] = {f.a(p, q), f.b(p, q)};
  std::complex<double> det = 1.0;
  for (std::size_t k = 0; k < j; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < j; ++i)
      if (std::abs(a[i * j + k]) > std::abs(a[piv * j + k])) piv = i;
    if (std::abs(a[piv * j + k]) == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t q = 0; q < j; ++q) std::swap(a[piv * j + q], a[k * j + q]);
      det = -det;
    }
    det *= a[k * j + k];
    for (std::size_t i = k + 1; i < j; ++i) {
      std::complex<double> m = a[i * j + k] / a[k * j + k];
      for (std::size_t q = k; q < j; ++q) a[i * j + q] -= m * a[k * j + q];
    }
  }
  return det.real();
}

std::vector<Polyline> minor_curves(const LmiRegion& r, const Viewport& vp, std::size_t j,
                                   const ToleranceConfig& cfg) {
  (void)cfg;
  vp.validate();
  if (j < 1 || j > r.order()) throw Error(ErrorCode::IndexOutOfRange, "minor order must lie in 1..n");
  const int w = vp.width_px, h = vp.height_px;
  const int stride = w + 1;
  std::vector<double> v(static_cast<std::size_t>(stride) * (h + 1));
  auto vx = [&](int c) { return vp.x_lo + c * vp.dx(); };
  auto vy = [&](int row) { return vp.y_hi - row * vp.dy(); };
  for (int row = 0; row <= h; ++row)
    for (int c = 0; c <= w; ++c) v[row * stride + c] = leading_minor(r, {vx(c), vy(row)}, j);
  auto val = [&](int row, int c) { return v[row * stride + c]; };
  auto pos = [&](int row, int c) { return val(row, c) > 0.0; };

  std::map<long, Point2> points;
  auto edge_point = [&](int r0, int c0, int r1, int c1) -> long {
    long id = 2L * (static_cast<long>(r0) * stride + c0) + (r1 != r0 ? 1 : 0);
    if (!points.count(id)) {
      double a = val(r0, c0), b = val(r1, c1);
      double t = a / (a - b);
      points[id] = {vx(c0) + t * (vx(c1) - vx(c0)), vy(r0) + t * (vy(r1) - vy(r0))};
    }
    return id;
  };

  std::map<long, std::vector<long>> adj;
  auto link = [&](long a, long b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int row = 0; row < h; ++row)
    for (int c = 0; c < w; ++c) {
      bool tl = pos(row, c), tr = pos(row, c + 1), br = pos(row + 1, c + 1), bl = pos(row + 1, c);
      std::vector<long> e;  // top, right, bottom, left order
      long top = -1, right = -1, bottom = -1, left = -1;
      if (tl != tr) e.push_back(top = edge_point(row, c, row, c + 1));
      if (tr != br) e.push_back(right = edge_point(row, c + 1, row + 1, c + 1));
      if (bl != br) e.push_back(bottom = edge_point(row + 1, c, row + 1, c + 1));
      if (tl != bl) e.push_back(left = edge_point(row, c, row + 1, c));
      if (e.size() == 2) {
        link(e[0], e[1]);
      } else if (e.size() == 4) {
        double center = 0.25 * (val(row, c) + val(row, c + 1) + val(row + 1, c + 1) + val(row + 1, c));
        if ((center > 0.0) == tl) {
          link(top, right);
          link(bottom, left);
        } else {
          link(top, left);
          link(right, bottom);
        }
      }
    }

  std::vector<Polyline> out;
  std::map<long, bool> used;
  auto walk = [&](long start) {
    Polyline line{points[start]};
    used[start] = true;
    long cur = start;
    while (true) {
      long next = -1;
      for (long nb : adj[cur])
        if (!used[nb]) {
          next = nb;
          break;
        }
      if (next < 0) {
        // close loops back onto the start point
        for (long nb : adj[cur])
          if (nb == start && line.size() > 2) line.push_back(points[start]);
        break;
      }
      used[next] = true;
      line.push_back(points[next]);
      cur = next;
    }
    out.push_back(std::move(line));
  };
  for (const auto& [id, nbs] : adj)
    if (nbs.size() == 1 && !used[id]) walk(id);
  for (const auto& [id, nbs] : adj)
    if (!used[id]) walk(id);
  return out;
}

Viewport default_viewport(const LmiRegion& r, int width_px, int height_px, const ToleranceConfig& cfg) {
  Viewport vp;
  vp.width_px = width_px;
  vp.height_px = height_px;
  RealInterval iv = real_interval(r, cfg);
  if (iv.empty) return vp;
  const bool lo_fin = std::isfinite(iv.lo), hi_fin = std::isfinite(iv.hi);
  if (lo_fin && hi_fin) {
    double m = 0.1 * (iv.hi - iv.lo);
    vp.x_lo = iv.lo - m;
    vp.x_hi = iv.hi + m;
  } else if (hi_fin) {
    vp.x_lo = iv.hi - 5.0;
    vp.x_hi = iv.hi + 0.5;
  } else if (lo_fin) {
    vp.x_lo = iv.lo - 0.5;
    vp.x_hi = iv.lo + 5.0;
  } else {
    vp.x_lo = -5.0;
    vp.x_hi = 5.0;
  }
  const double a = std::max(iv.lo, vp.x_lo), b = std::min(iv.hi, vp.x_hi);
  double h = 0.0;
  for (int k = 0; k < 32; ++k) {
    double x = a + (k + 0.5) * (b - a) / 32.0;
    try {
      h = std::max(h, slice_bound(r, x, cfg));
    } catch (const Error&) {
    }
  }
  if (!std::isfinite(h)) h = 5.0;
  if (h <= 0.0) h = 1.0;
  vp.y_lo = -1.1 * h;
  vp.y_hi = 1.1 * h;
  // Equal units per pixel on both axes.
  const double unit = std::max(vp.dx(), vp.dy());
  const double cx = 0.5 * (vp.x_lo + vp.x_hi);
  vp.x_lo = cx - 0.5 * unit * width_px;
  vp.x_hi = cx + 0.5 * unit * width_px;
  vp.y_lo = -0.5 * unit * height_px;
  vp.y_hi = 0.5 * unit * height_px;
  return vp;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  const double target = std::strtod(buf, nullptr);
  std::string best = buf;
  for (int p = 1; p <= 9; ++p) {
    char trial[64];
    std::snprintf(trial, sizeof trial, "%.*g", p, v);
    if (std::strtod(trial, nullptr) == target && std::strlen(trial) < best.size()) best = trial;
  }
  return best;
}

namespace {

struct PixelMap {
  const Viewport& vp;
  double px(double x) const { return (x - vp.x_lo) / vp.dx(); }
  double py(double y) const { return (vp.y_hi - y) / vp.dy(); }
};

void svg_line(std::ostringstream& os, const PixelMap& pm, double x0, double y0, double x1, double y1) {
  os << "<line x1=\"" << format_number(pm.px(x0)) << "\" y1=\"" << format_number(pm.py(y0)) << "\" x2=\""
     << format_number(pm.px(x1)) << "\" y2=\"" << format_number(pm.py(y1)) << "\"/>\n";
}

void svg_polyline(std::ostringstream& os, const PixelMap& pm, const Polyline& line) {
  if (line.size() < 2) return;
  os << "<polyline points=\"";
  for (std::size_t k = 0; k < line.size(); ++k) {
    if (k) os << ' ';
    os << format_number(pm.px(line[k].x)) << ',' << format_number(pm.py(line[k].y));
  }
  os << "\"/>\n";
}

void svg_overlay(std::ostringstream& os, const PixelMap& pm, const Overlay& ov) {
  const Viewport& vp = pm.vp;
  const double span = std::hypot(vp.x_hi - vp.x_lo, vp.y_hi - vp.y_lo) +
                      std::max({std::abs(vp.x_lo), std::abs(vp.x_hi), std::abs(vp.y_lo), std::abs(vp.y_hi)});
  if (const Disk* d = std::get_if<Disk>(&ov)) {
    if (!std::isfinite(d->radius) || d->radius <= 0.0) return;
    os << "<ellipse cx=\"" << format_number(pm.px(d->center_x)) << "\" cy=\"" << format_number(pm.py(0.0))
       << "\" rx=\"" << format_number(d->radius / vp.dx()) << "\" ry=\"" << format_number(d->radius / vp.dy())
       << "\"/>\n";
    return;
  }
  const ElementaryPiece& p = std::get<ElementaryPiece>(ov);
  switch (p.kind) {
    case PieceKind::ShiftedHalfplane:
      svg_line(os, pm, p.abscissa, vp.y_lo, p.abscissa, vp.y_hi);
      break;
    case PieceKind::ShiftedCone: {
      double dir = p.orientation == Orientation::Negative ? -1.0 : 1.0;
      double ex = p.vertex + dir * span * std::cos(p.half_angle);
      double ey = span * std::sin(p.half_angle);
      svg_line(os, pm, p.vertex, 0.0, ex, ey);
      svg_line(os, pm, p.vertex, 0.0, ex, -ey);
      break;
    }
    case PieceKind::HorizontalStripe:
      svg_line(os, pm, vp.x_lo, p.half_width, vp.x_hi, p.half_width);
      svg_line(os, pm, vp.x_lo, -p.half_width, vp.x_hi, -p.half_width);
      break;
    case PieceKind::Hyperbola: {
      if (p.a22 == 0.0) break;
      for (double sign : {1.0, -1.0}) {
        Polyline cur;
        for (int c = 0; c <= vp.width_px; ++c) {
          double x = vp.x_lo + c * vp.dx();
          double y2 = -(p.a11 * x * x + 2.0 * p.a13 * x + p.a33) / p.a22;
          if (y2 >= 0.0) {
            cur.push_back({x, sign * std::sqrt(y2)});
          } else {
            svg_polyline(os, pm, cur);
            cur.clear();
          }
        }
        svg_polyline(os, pm, cur);
      }
      break;
    }
    case PieceKind::WholePlane:
    case PieceKind::Empty:
      break;
  }
}

}  // namespace

std::string render_svg(const MembershipGrid& grid, const std::vector<Polyline>& curves,
                       const std::vector<Overlay>& overlays) {
  const Viewport& vp = grid.viewport;
  PixelMap pm{vp};
  std::ostringstream os;
  const int w = vp.width_px, h = vp.height_px;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"#ffffff\"/>\n";
  if (grid.member_count() > 0) os << "<g fill=\"#9ecae1\" stroke=\"none\" shape-rendering=\"crispEdges\">\n";
  for (int row = 0; row < h; ++row) {
    int c = 0;
    while (c < w) {
      if (!grid.member(row, c)) {
        ++c;
        continue;
      }
      int start = c;
      while (c < w && grid.member(row, c)) ++c;
      os << "<rect x=\"" << start << "\" y=\"" << row << "\" width=\"" << (c - start) << "\" height=\"1\"/>\n";
    }
  }
  if (grid.member_count() > 0) os << "</g>\n";
  os << "<g stroke=\"#808080\" stroke-width=\"0.5\">\n";
  if (vp.y_lo <= 0.0 && vp.y_hi >= 0.0) svg_line(os, pm, vp.x_lo, 0.0, vp.x_hi, 0.0);
  if (vp.x_lo <= 0.0 && vp.x_hi >= 0.0) svg_line(os, pm, 0.0, vp.y_lo, 0.0, vp.y_hi);
  os << "</g>\n";
  os << "<g fill=\"none\" stroke=\"#08519c\" stroke-width=\"1\">\n";
  for (const Polyline& line : curves) svg_polyline(os, pm, line);
  os << "</g>\n";
  os << "<g fill=\"none\" stroke=\"#d62728\" stroke-width=\"1\">\n";
  for (const Overlay& ov : overlays) svg_overlay(os, pm, ov);
  os << "</g>\n";
  os << "</svg>\n";
  return os.str();
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  f << text;
  if (!f) throw Error(ErrorCode::IoError, "failed writing " + path);
}

}  // namespace

void emit_svg(const MembershipGrid& grid, const std::vector<Polyline>& curves,
              const std::vector<Overlay>& overlays, const std::string& path) {
  write_file(path, render_svg(grid, curves, overlays));
}

std::string render_csv(const MembershipGrid& grid) {
  std::ostringstream os;
  os << "x,y,member,lambda_max\r\n";
  const Viewport& vp = grid.viewport;
  for (int row = 0; row < vp.height_px; ++row)
    for (int col = 0; col < vp.width_px; ++col) {
      ComplexPoint z = vp.cell_center(row, col);
      os << format_number(z.x) << ',' << format_number(z.y) << ',' << (grid.member(row, col) ? 1 : 0) << ','
         << format_number(grid.lambda_max(row, col)) << "\r\n";
    }
  return os.str();
}

void emit_csv(const MembershipGrid& grid, const std::string& path) { write_file(path, render_csv(grid)); }

}  // namespace lmi
