#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lmi/analysis.hpp"
#include "lmi/classify.hpp"
#include "lmi/region.hpp"

namespace lmi {

struct Viewport {
  double x_lo = -1.0, x_hi = 1.0, y_lo = -1.0, y_hi = 1.0;
  int width_px = 64, height_px = 64;

  void validate() const;
  double dx() const { return (x_hi - x_lo) / width_px; }
  double dy() const { return (y_hi - y_lo) / height_px; }
  // Center of cell (row, col); row 0 is the top row.
  ComplexPoint cell_center(int row, int col) const;
};

struct MembershipGrid {
  Viewport viewport;
  std::vector<bool> cells;          // row-major, height × width
  std::vector<bool> boundary_mask;  // |λmax| within the band
  std::vector<double> lambda;       // λmax per cell

  bool member(int row, int col) const { return cells[row * viewport.width_px + col]; }
  bool boundary(int row, int col) const { return boundary_mask[row * viewport.width_px + col]; }
  double lambda_max(int row, int col) const { return lambda[row * viewport.width_px + col]; }
  int member_count() const;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point2&) const = default;
};

using Polyline = std::vector<Point2>;

using Overlay = std::variant<Disk, ElementaryPiece>;

// |λmax| at or below this marks a boundary cell.
double boundary_band(const LmiRegion& r);
MembershipGrid raster(const LmiRegion& r, const Viewport& vp, const ToleranceConfig& cfg = {});

// Real value of det of the leading j×j block of f(z) (a Hermitian matrix).
double leading_minor(const LmiRegion& r, ComplexPoint z, std::size_t j);
std::vector<Polyline> minor_curves(const LmiRegion& r, const Viewport& vp, std::size_t j,
                                   const ToleranceConfig& cfg = {});

Viewport default_viewport(const LmiRegion& r, int width_px, int height_px, const ToleranceConfig& cfg = {});

std::string render_svg(const MembershipGrid& grid, const std::vector<Polyline>& curves,
                       const std::vector<Overlay>& overlays);
void emit_svg(const MembershipGrid& grid, const std::vector<Polyline>& curves,
              const std::vector<Overlay>& overlays, const std::string& path);

std::string render_csv(const MembershipGrid& grid);
void emit_csv(const MembershipGrid& grid, const std::string& path);

// Shortest of %.1g … %.9g that round-trips at 9 significant digits.
std::string format_number(double v);

}  // namespace lmi
