#include "lmi/oracle.hpp"

#include <cmath>
#include <numbers>

#include "lmi/errors.hpp"

namespace lmi {

namespace {

double bisect(const LmiRegion& r, double out, double in, int iters, const ToleranceConfig& cfg) {
  for (int k = 0; k < iters; ++k) {
    double mid = 0.5 * (out + in);
    (contains(r, {mid, 0.0}, cfg) ? in : out) = mid;
  }
  return 0.5 * (out + in);
}

}  // namespace

RealInterval interval_by_scan(const LmiRegion& r, double lo, double hi, int steps, const ToleranceConfig& cfg,
                              int bisections) {
  if (steps < 1000) throw Error(ErrorCode::InvalidArgument, "interval scan needs at least 1000 steps");
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "scan window must satisfy lo < hi");
  const double h = (hi - lo) / steps;
  int first = -1, last = -1;
  for (int k = 0; k <= steps; ++k) {
    if (contains(r, {lo + k * h, 0.0}, cfg)) {
      if (first < 0) first = k;
      last = k;
    }
  }
  if (first < 0) return RealInterval::make_empty();
  double a = first == 0 ? -kInf : bisect(r, lo + (first - 1) * h, lo + first * h, bisections, cfg);
  double b = last == steps ? kInf : bisect(r, lo + (last + 1) * h, lo + last * h, bisections, cfg);
  return RealInterval::open(a, b);
}

bool containment_by_sampling(const LmiRegion& r, const Disk& d, int samples, const ToleranceConfig& cfg) {
  if (samples < 360) throw Error(ErrorCode::InvalidArgument, "containment sampling needs at least 360 samples");
  if (!contains(r, {d.center_x, 0.0}, cfg)) return false;
  for (int ring = 6; ring >= 1; --ring) {
    double rho = d.radius * ring / 6.0;
    for (int k = 0; k < samples; ++k) {
      double t = 2.0 * std::numbers::pi * k / samples;
      if (!contains(r, {d.center_x + rho * std::cos(t), rho * std::sin(t)}, cfg)) return false;
    }
  }
  return true;
}

double angle_by_ray_scan(const LmiRegion& r, double radius, int angular_steps, const ToleranceConfig& cfg) {
  if (radius < 1e4) throw Error(ErrorCode::InvalidArgument, "ray scan radius must be at least 1e4");
  if (angular_steps < 2) throw Error(ErrorCode::InvalidArgument, "ray scan needs at least 2 steps");
  double dir;
  if (contains(r, {radius, 0.0}, cfg))
    dir = 1.0;
  else if (contains(r, {-radius, 0.0}, cfg))
    dir = -1.0;
  else
    throw Error(ErrorCode::NotCone, "no member along either real half-axis at the scan radius");
  auto member = [&](double phi) {
    return contains(r, {dir * radius * std::cos(phi), radius * std::sin(phi)}, cfg);
  };
  const double step = std::numbers::pi / angular_steps;
  const int count = angular_steps / 2;
  for (int k = 1; k <= count; ++k) {
    double phi = k * step;
    if (!member(phi)) {
      double in = phi - step, out = phi;
      for (int it = 0; it < 40; ++it) {
        double mid = 0.5 * (in + out);
        (member(mid) ? in : out) = mid;
      }
      return 0.5 * (in + out);
    }
  }
  return std::numbers::pi / 2;
}

}  // namespace lmi
