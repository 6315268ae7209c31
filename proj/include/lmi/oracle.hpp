#pragma once

#include "lmi/analysis.hpp"
#include "lmi/region.hpp"

namespace lmi {

// Brute-force checks built only on contains(); they share no code with the
// analytic routines they are meant to validate.

// Members of the real axis on [lo, hi], endpoints refined by bisection to
// (hi − lo)/steps/2^bisections. A member at a window edge reports that end
// as infinite.
RealInterval interval_by_scan(const LmiRegion& r, double lo, double hi, int steps,
                              const ToleranceConfig& cfg = {}, int bisections = 10);

// Circle of the disk plus five interior rings and the center, `samples`
// points per ring.
bool containment_by_sampling(const LmiRegion& r, const Disk& d, int samples,
                             const ToleranceConfig& cfg = {});

// Half-angle of the member directions at distance `radius` from the origin,
// measured from the real half-axis the region extends along.
double angle_by_ray_scan(const LmiRegion& r, double radius, int angular_steps,
                         const ToleranceConfig& cfg = {});

}  // namespace lmi
