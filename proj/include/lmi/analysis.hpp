#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <vector>

#include "lmi/matkernel.hpp"
#include "lmi/region.hpp"

namespace lmi {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Open interval (lo, hi); lo may be -inf and hi +inf.
struct RealInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool empty = true;

  static RealInterval make_empty() { return {}; }
  static RealInterval open(double lo, double hi) { return {lo, hi, false}; }

  bool contains(double x) const { return !empty && x > lo && x < hi; }
  bool bounded() const { return !empty && std::isfinite(lo) && std::isfinite(hi); }
};

enum class LinealityClass { Zero, RealAxis, ImaginaryAxis, WholePlane };

enum class ConeKind {
  Point,
  RayPos,
  RayNeg,
  ProperCone,
  LeftHalfplane,
  RightHalfplane,
  RealLine,
  ImaginaryAxisLine,
  VerticalHalfplaneClosed,
  Plane,
};

// Direction of the real axis a cone, ray or closed halfplane opens toward.
enum class Orientation { None, Positive, Negative };

struct RecessionCone {
  ConeKind kind = ConeKind::Point;
  std::optional<double> angle;  // half-angle, ProperCone only
  Orientation orientation = Orientation::None;
};

struct RegionReport {
  bool empty = true;
  bool bounded = true;
  RealInterval interval;
  std::optional<LinealityClass> lineality;  // absent for the empty region
  std::optional<RecessionCone> recession;   // absent for the empty region
  std::size_t order = 0;
};

struct Disk {
  double center_x = 0.0;
  double radius = 0.0;
};

struct ConeAngleRoutes {
  double theta = 0.0;        // reported value (congruence route)
  double polar = 0.0;        // min |π/2 − φ| over the orthogonal polar factor
  double congruence = 0.0;   // arctan(1/ν_max) after Cholesky congruence
  bool m_normal = false;
  bool routes_agree = false;  // |polar − congruence| ≤ geom_tol
};

struct OmegaResult {
  double value = 0.0;
  double argmin = 0.0;  // abscissa where the sampled ratio is smallest
  int samples = 0;
  double grid_lo = 0.0;  // sampled |x| range
  double grid_hi = 0.0;
};

const char* lineality_name(LinealityClass c);
const char* cone_kind_name(ConeKind k);
const char* orientation_name(Orientation o);

RealInterval real_interval(const LmiRegion& r, const ToleranceConfig& cfg = {});
bool is_empty(const LmiRegion& r, const ToleranceConfig& cfg = {});
bool necessary_nonempty(const LmiRegion& r, const ToleranceConfig& cfg = {});
LinealityClass lineality(const LmiRegion& r, const ToleranceConfig& cfg = {});
RecessionCone recession_cone(const LmiRegion& r, const ToleranceConfig& cfg = {});
double cone_angle(const LmiRegion& r, const ToleranceConfig& cfg = {});
ConeAngleRoutes cone_angle_routes(const LmiRegion& r, const ToleranceConfig& cfg = {});
double slice_bound(const LmiRegion& r, double x0, const ToleranceConfig& cfg = {});
Disk inscribed_disk(const LmiRegion& r, std::optional<double> x0 = std::nullopt,
                    const ToleranceConfig& cfg = {});
double default_center(const RealInterval& iv);
OmegaResult omega(const LmiRegion& r, const ToleranceConfig& cfg = {});
RegionReport region_report(const LmiRegion& r, const ToleranceConfig& cfg = {});

bool dstable(const std::vector<std::complex<double>>& spectrum, const LmiRegion& r,
             const ToleranceConfig& cfg = {});
bool dstable_matrix(const Matrix& a, const LmiRegion& r, const ToleranceConfig& cfg = {});

}  // namespace lmi
