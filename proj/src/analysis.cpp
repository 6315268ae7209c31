#include "lmi/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lmi/errors.hpp"

namespace lmi {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

bool skew_negligible(const LmiRegion& r, const ToleranceConfig& cfg) {
  return negligible(r.skew_m(), r.m().frobenius(), cfg);
}

// K' = T⁻¹ K T⁻ᵀ for lower-triangular T.
Matrix whiten(const Matrix& t, const Matrix& k) {
  Matrix left = solve_lower(t, k);                    // T⁻¹K
  Matrix both = solve_lower(t, left.transpose());     // T⁻¹KᵀT⁻ᵀ = −K'
  return skew_part(-both);
}

double max_nu(const Matrix& k, const ToleranceConfig& cfg) {
  SkewSpectrum sp = skew_spectrum(k, cfg);
  return sp.nus.empty() ? 0.0 : sp.nus.front();
}

// Half-angle of {x·S + i·y·K ⪯ 0} for definite S.
double congruence_angle(const Matrix& s, const Matrix& k, bool positive, const ToleranceConfig& cfg) {
  Matrix t = cholesky_spd(positive ? s : -s, cfg);
  double nu = max_nu(whiten(t, k), cfg);
  return nu == 0.0 ? kHalfPi : std::atan2(1.0, nu);
}

bool is_normal(const Matrix& m) {
  Matrix c = m * m.transpose() - m.transpose() * m;
  return c.frobenius() <= 1e-9 * std::max(1.0, m.frobenius() * m.frobenius());
}

void require_nonempty(const RealInterval& iv) {
  if (iv.empty) throw Error(ErrorCode::EmptyRegion, "region is empty");
}

}  // namespace

const char* lineality_name(LinealityClass c) {
  switch (c) {
    case LinealityClass::Zero: return "Zero";
    case LinealityClass::RealAxis: return "RealAxis";
    case LinealityClass::ImaginaryAxis: return "ImaginaryAxis";
    case LinealityClass::WholePlane: return "WholePlane";
  }
  return "?";
}

const char* cone_kind_name(ConeKind k) {
  switch (k) {
    case ConeKind::Point: return "Point";
    case ConeKind::RayPos: return "RayPos";
    case ConeKind::RayNeg: return "RayNeg";
    case ConeKind::ProperCone: return "ProperCone";
    case ConeKind::LeftHalfplane: return "LeftHalfplane";
    case ConeKind::RightHalfplane: return "RightHalfplane";
    case ConeKind::RealLine: return "RealLine";
    case ConeKind::ImaginaryAxisLine: return "ImaginaryAxisLine";
    case ConeKind::VerticalHalfplaneClosed: return "VerticalHalfplaneClosed";
    case ConeKind::Plane: return "Plane";
  }
  return "?";
}

const char* orientation_name(Orientation o) {
  switch (o) {
    case Orientation::None: return "none";
    case Orientation::Positive: return "+";
    case Orientation::Negative: return "-";
  }
  return "?";
}

RealInterval real_interval(const LmiRegion& r, const ToleranceConfig& cfg) {
  const Matrix& l = r.l();
  const Matrix& s = r.sym_m();
  auto feasible = [&](double x) { return is_negative_definite(l + (2.0 * x) * s, cfg); };

  if (definiteness(s, cfg) == Definiteness::Zero)
    return feasible(0.0) ? RealInterval::open(-kInf, kInf) : RealInterval::make_empty();

  SymEigen es = sym_eigen(s, cfg);
  const double thr = definiteness_threshold(s, cfg);
  std::vector<std::size_t> range, null;
  for (std::size_t k = 0; k < es.values.size(); ++k)
    (std::abs(es.values[k]) > thr ? range : null).push_back(k);

  Matrix lq = congruence(l, es.vectors.transpose());  // Qᵀ L Q
  Matrix schur = lq.select(range);
  if (!null.empty()) {
    Matrix lnn = lq.select(null);
    if (!is_negative_definite(lnn, cfg)) return RealInterval::make_empty();
    Matrix lrn(range.size(), null.size());
    for (std::size_t a = 0; a < range.size(); ++a)
      for (std::size_t b = 0; b < null.size(); ++b) lrn(a, b) = lq(range[a], null[b]);
    schur -= lrn * solve(lnn, lrn.transpose());
  }

  // det(L + 2xS) vanishes exactly where −½·D⁻¹·schur has eigenvalue x.
  double smin = kInf;
  Matrix pencil(range.size(), range.size());
  for (std::size_t a = 0; a < range.size(); ++a) {
    double sa = es.values[range[a]];
    smin = std::min(smin, std::abs(sa));
    for (std::size_t b = 0; b < range.size(); ++b) pencil(a, b) = -0.5 * schur(a, b) / sa;
  }
  // Real parts of every eigenvalue are kept: spurious candidates only add test
  // points, and near-double roots may come back as a tight complex pair.
  std::vector<double> cand;
  for (const auto& z : general_eigenvalues(pencil, cfg))
    cand.push_back(z.real());
  std::sort(cand.begin(), cand.end());
  std::vector<double> uniq;
  for (double c : cand)
    if (uniq.empty() || c - uniq.back() > 1e-12 * std::max(1.0, std::abs(c))) uniq.push_back(c);

  double sentinel = 10.0 * (1.0 + l.frobenius() / std::max(smin, cfg.def_margin));
  for (double c : uniq) sentinel = std::max(sentinel, 2.0 * std::abs(c) + 1.0);

  const std::size_t gaps = uniq.size() + 1;
  std::vector<bool> ok(gaps);
  for (std::size_t g = 0; g < gaps; ++g) {
    double x;
    if (g == 0)
      x = -sentinel;
    else if (g == gaps - 1)
      x = sentinel;
    else
      x = 0.5 * (uniq[g - 1] + uniq[g]);
    ok[g] = feasible(x);
  }
  auto first = std::find(ok.begin(), ok.end(), true);
  if (first == ok.end()) return RealInterval::make_empty();
  std::size_t lo_gap = static_cast<std::size_t>(first - ok.begin());
  std::size_t hi_gap = gaps - 1 - static_cast<std::size_t>(std::find(ok.rbegin(), ok.rend(), true) - ok.rbegin());
  double lo = lo_gap == 0 ? -kInf : uniq[lo_gap - 1];
  double hi = hi_gap == gaps - 1 ? kInf : uniq[hi_gap];
  return RealInterval::open(lo, hi);
}

bool is_empty(const LmiRegion& r, const ToleranceConfig& cfg) { return real_interval(r, cfg).empty; }

bool necessary_nonempty(const LmiRegion& r, const ToleranceConfig& cfg) {
  if (inertia(r.sym_m(), cfg).n_zero > 0) throw Error(ErrorCode::SingularSymM, "Sym(M) is singular");
  Matrix c = solve(r.sym_m(), r.l());
  return real_eigenspaces(c, cfg).has_value();
}

LinealityClass lineality(const LmiRegion& r, const ToleranceConfig& cfg) {
  require_nonempty(real_interval(r, cfg));
  const double mnorm = r.m().frobenius();
  if (negligible(r.m(), 0.0, cfg)) return LinealityClass::WholePlane;
  if (negligible(r.skew_m(), mnorm, cfg)) return LinealityClass::ImaginaryAxis;
  if (negligible(r.sym_m(), mnorm, cfg)) return LinealityClass::RealAxis;
  return LinealityClass::Zero;
}

RecessionCone recession_cone(const LmiRegion& r, const ToleranceConfig& cfg) {
  require_nonempty(real_interval(r, cfg));
  const bool skew_zero = skew_negligible(r, cfg);
  const Definiteness d = definiteness(r.sym_m(), cfg);
  RecessionCone rc;
  switch (d) {
    case Definiteness::Zero:
      rc.kind = skew_zero ? ConeKind::Plane : ConeKind::RealLine;
      return rc;
    case Definiteness::Indefinite:
      rc.kind = skew_zero ? ConeKind::ImaginaryAxisLine : ConeKind::Point;
      return rc;
    case Definiteness::PosDef:
    case Definiteness::NegDef: {
      const bool pos = d == Definiteness::PosDef;
      rc.orientation = pos ? Orientation::Negative : Orientation::Positive;
      if (skew_zero) {
        rc.kind = pos ? ConeKind::LeftHalfplane : ConeKind::RightHalfplane;
      } else {
        rc.kind = ConeKind::ProperCone;
        rc.angle = cone_angle(r, cfg);
      }
      return rc;
    }
    case Definiteness::PosSemi:
    case Definiteness::NegSemi: {
      const bool pos = d == Definiteness::PosSemi;
      rc.orientation = pos ? Orientation::Negative : Orientation::Positive;
      if (skew_zero) {
        rc.kind = ConeKind::VerticalHalfplaneClosed;
        return rc;
      }
      SymEigen es = sym_eigen(r.sym_m(), cfg);
      const double thr = definiteness_threshold(r.sym_m(), cfg);
      std::vector<std::size_t> range, null;
      for (std::size_t k = 0; k < es.values.size(); ++k)
        (std::abs(es.values[k]) > thr ? range : null).push_back(k);
      Matrix qn(r.order(), null.size()), qr(r.order(), range.size());
      for (std::size_t i = 0; i < r.order(); ++i) {
        for (std::size_t b = 0; b < null.size(); ++b) qn(i, b) = es.vectors(i, null[b]);
        for (std::size_t b = 0; b < range.size(); ++b) qr(i, b) = es.vectors(i, range[b]);
      }
      if (!negligible(r.skew_m() * qn, r.skew_m().frobenius(), cfg)) {
        rc.kind = pos ? ConeKind::RayNeg : ConeKind::RayPos;
        return rc;
      }
      // Skew(M) lives on the range of Sym(M): the cone is proper there.
      Matrix sr = sym_part(qr.transpose() * r.sym_m() * qr);
      Matrix kr = skew_part(qr.transpose() * r.skew_m() * qr);
      rc.kind = ConeKind::ProperCone;
      rc.angle = congruence_angle(sr, kr, pos, cfg);
      return rc;
    }
  }
  return rc;
}

ConeAngleRoutes cone_angle_routes(const LmiRegion& r, const ToleranceConfig& cfg) {
  const Definiteness d = definiteness(r.sym_m(), cfg);
  if (d != Definiteness::PosDef && d != Definiteness::NegDef)
    throw Error(ErrorCode::NotDefinite, "Sym(M) is not definite");
  ConeAngleRoutes out;
  out.m_normal = is_normal(r.m());
  if (skew_negligible(r, cfg)) {
    out.theta = out.polar = out.congruence = kHalfPi;
    out.routes_agree = true;
    return out;
  }
  out.congruence = congruence_angle(r.sym_m(), r.skew_m(), d == Definiteness::PosDef, cfg);
  PolarParts pp = polar_decompose(r.m(), cfg);
  double best = kInf;
  for (double phi : orthogonal_arg_spectrum(pp.u, cfg)) best = std::min(best, std::abs(kHalfPi - phi));
  out.polar = best;
  out.routes_agree = std::abs(out.polar - out.congruence) <= cfg.geom_tol;
  out.theta = out.congruence;
  return out;
}

double cone_angle(const LmiRegion& r, const ToleranceConfig& cfg) { return cone_angle_routes(r, cfg).theta; }

double slice_bound(const LmiRegion& r, double x0, const ToleranceConfig& cfg) {
  if (!real_interval(r, cfg).contains(x0))
    throw Error(ErrorCode::OutOfInterval, "x0 is not inside the real interval of the region");
  if (skew_negligible(r, cfg)) return kInf;
  Matrix neg = -(r.l() + (2.0 * x0) * r.sym_m());
  Matrix t;
  try {
    t = cholesky_spd(neg, cfg);
  } catch (const Error&) {
    throw Error(ErrorCode::OutOfInterval, "L(x0) is not negative definite");
  }
  double nu = max_nu(whiten(t, r.skew_m()), cfg);
  return nu == 0.0 ? kInf : 0.5 / nu;
}

double default_center(const RealInterval& iv) {
  const bool lo_fin = std::isfinite(iv.lo), hi_fin = std::isfinite(iv.hi);
  if (lo_fin && hi_fin) return 0.5 * (iv.lo + iv.hi);
  if (lo_fin) return iv.lo + 1.0;
  if (hi_fin) return iv.hi - 1.0;
  return 0.0;
}

Disk inscribed_disk(const LmiRegion& r, std::optional<double> x0, const ToleranceConfig& cfg) {
  RealInterval iv = real_interval(r, cfg);
  require_nonempty(iv);
  const double x = x0.value_or(default_center(iv));
  if (!iv.contains(x)) throw Error(ErrorCode::OutOfInterval, "center is not inside the real interval");
  const double y = slice_bound(r, x, cfg);
  double d = kInf;
  if (std::isfinite(iv.lo)) d = std::min(d, x - iv.lo);
  if (std::isfinite(iv.hi)) d = std::min(d, iv.hi - x);
  double rho;
  if (std::isfinite(d) && std::isfinite(y))
    rho = d * y / std::hypot(d, y);
  else if (std::isfinite(d))
    rho = d;
  else
    rho = y;
  return {x, rho};
}

OmegaResult omega(const LmiRegion& r, const ToleranceConfig& cfg) {
  RealInterval iv = real_interval(r, cfg);
  require_nonempty(iv);
  if (iv.lo < 0.0 && iv.hi > 0.0)
    throw Error(ErrorCode::ContainsOrigin, "the real interval contains the origin");
  const bool left = iv.hi <= 0.0;
  const double u_near = left ? -iv.hi : iv.lo;
  const double u_far = left ? -iv.lo : iv.hi;
  const double a = u_near > 0.0 ? u_near * (1.0 + 1e-6) : 1e-6;
  double b = std::isfinite(u_far) ? u_far * (1.0 - 1e-6) : std::max(1e3, 10.0 * a);
  constexpr int kSamples = 256;
  OmegaResult out;
  out.value = kInf;
  out.grid_lo = a;
  out.grid_hi = std::max(a, b);
  const int count = b > a ? kSamples : 1;
  for (int k = 0; k < count; ++k) {
    double u = count == 1 ? 0.5 * (u_near + u_far) : a * std::pow(b / a, k / double(kSamples - 1));
    double x = left ? -u : u;
    double ratio = inscribed_disk(r, x, cfg).radius / u;
    if (ratio < out.value) {
      out.value = ratio;
      out.argmin = x;
    }
  }
  out.samples = count;
  return out;
}

RegionReport region_report(const LmiRegion& r, const ToleranceConfig& cfg) {
  RegionReport rep;
  rep.order = r.order();
  rep.interval = real_interval(r, cfg);
  rep.empty = rep.interval.empty;
  if (rep.empty) {
    rep.bounded = true;
    return rep;
  }
  rep.lineality = lineality(r, cfg);
  rep.recession = recession_cone(r, cfg);
  rep.bounded = rep.recession->kind == ConeKind::Point;
  return rep;
}

bool dstable(const std::vector<std::complex<double>>& spectrum, const LmiRegion& r,
             const ToleranceConfig& cfg) {
  return std::all_of(spectrum.begin(), spectrum.end(),
                     [&](const auto& z) { return contains(r, {z.real(), z.imag()}, cfg); });
}

bool dstable_matrix(const Matrix& a, const LmiRegion& r, const ToleranceConfig& cfg) {
  return dstable(general_eigenvalues(a, cfg), r, cfg);
}

}  // namespace lmi
