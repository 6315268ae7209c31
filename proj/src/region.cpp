#include "lmi/region.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "lmi/errors.hpp"

namespace lmi {

LmiRegion::LmiRegion(Matrix l, Matrix m, const ToleranceConfig& cfg, std::string name)
    : l_(std::move(l)), m_(std::move(m)), name_(std::move(name)) {
  if (!l_.square() || l_.rows() == 0)
    throw Error(ErrorCode::DimensionMismatch, "L must be square and non-empty");
  if (m_.rows() != l_.rows() || m_.cols() != l_.cols())
    throw Error(ErrorCode::DimensionMismatch, "L and M must have the same size");
  if (!l_.all_finite() || !m_.all_finite())
    throw Error(ErrorCode::InvalidArgument, "generating matrices must be finite");
  double asym = 0.0;
  for (std::size_t i = 0; i < l_.rows(); ++i)
    for (std::size_t j = i + 1; j < l_.cols(); ++j) asym += 2.0 * std::pow(l_(i, j) - l_(j, i), 2);
  if (std::sqrt(asym) > cfg.def_margin * l_.frobenius())
    throw Error(ErrorCode::NotSymmetricL, "L is not symmetric");
  l_ = sym_part(l_);
  sym_m_ = sym_part(m_);
  skew_m_ = skew_part(m_);
}

LmiRegion LmiRegion::renamed(std::string name) const {
  LmiRegion r = *this;
  r.name_ = std::move(name);
  return r;
}

LmiRegion new_region(const Matrix& l, const Matrix& m, const ToleranceConfig& cfg) {
  return LmiRegion(l, m, cfg);
}

CharValue char_fn(const LmiRegion& r, ComplexPoint z) {
  return {r.l() + (2.0 * z.x) * r.sym_m(), (2.0 * z.y) * r.skew_m()};
}

bool contains(const LmiRegion& r, ComplexPoint z, const ToleranceConfig& cfg) {
  CharValue f = char_fn(r, z);
  return hermitian_negdef(f.a, f.b, cfg);
}

double lambda_max(const LmiRegion& r, ComplexPoint z, const ToleranceConfig& cfg) {
  CharValue f = char_fn(r, z);
  return hermitian_max_eigenvalue(f.a, f.b, cfg);
}

bool contains_closure(const LmiRegion& r, ComplexPoint z, const ToleranceConfig& cfg) {
  CharValue f = char_fn(r, z);
  Matrix e = hermitian_embedding(f.a, f.b);
  return sym_eigen(e, cfg).values.front() <= definiteness_threshold(e, cfg);
}

LmiRegion intersect(const LmiRegion& r1, const LmiRegion& r2) {
  std::string name;
  if (!r1.name().empty() || !r2.name().empty()) name = r1.name() + "&" + r2.name();
  return LmiRegion(block_diag(r1.l(), r2.l()), block_diag(r1.m(), r2.m()), {}, name);
}

LmiRegion shift(const LmiRegion& r, double alpha) {
  return LmiRegion(r.l() - (2.0 * alpha) * r.sym_m(), r.m(), {}, r.name());
}

LmiRegion scale(const LmiRegion& r, double alpha) {
  if (alpha == 0.0 || !std::isfinite(alpha))
    throw Error(ErrorCode::ZeroScale, "scale factor must be finite and nonzero");
  double sign = alpha > 0.0 ? 1.0 : -1.0;
  return LmiRegion(std::abs(alpha) * r.l(), sign * r.m(), {}, r.name());
}

namespace builders {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::ParameterOutOfRange, what);
}

bool finite(double v) { return std::isfinite(v); }

Matrix sector_block(double theta) {
  double s = std::sin(theta), c = std::cos(theta);
  return Matrix{{s, c}, {-c, s}};
}

}  // namespace

LmiRegion left_halfplane() { return LmiRegion(Matrix{{0.0}}, Matrix{{1.0}}, {}, "left-halfplane"); }

LmiRegion disk(double a, double r) {
  require(finite(a) && finite(r) && r > 0.0, "disk needs finite a and r > 0");
  return LmiRegion(Matrix{{-r, -a}, {-a, -r}}, Matrix{{0.0, 1.0}, {0.0, 0.0}}, {}, "disk");
}

LmiRegion conic_sector(double theta) {
  require(finite(theta) && theta > 0.0 && theta < std::numbers::pi / 2, "sector needs 0 < theta < pi/2");
  return LmiRegion(Matrix(2, 2), sector_block(theta), {}, "sector");
}

LmiRegion sliced_sector(double theta, double delta) {
  require(finite(theta) && theta > 0.0 && theta < std::numbers::pi / 2,
          "sliced sector needs 0 < theta < pi/2");
  require(finite(delta) && delta < 0.0, "sliced sector needs delta < 0");
  Matrix l = Matrix::diagonal({0.0, 0.0, -2.0 * delta});
  Matrix m = block_diag(sector_block(theta), Matrix{{1.0}});
  return LmiRegion(l, m, {}, "sliced-sector");
}

LmiRegion vstrip(double alpha, double beta) {
  require(finite(alpha) && finite(beta) && alpha > 0.0 && alpha < beta, "vstrip needs 0 < alpha < beta");
  return LmiRegion(Matrix::diagonal({2.0 * alpha, -2.0 * beta}), Matrix::diagonal({1.0, -1.0}), {},
                   "vstrip");
}

LmiRegion hstrip(double w0) {
  require(finite(w0) && w0 > 0.0, "hstrip needs w0 > 0");
  return LmiRegion(Matrix::diagonal({-w0, -w0}), Matrix{{0.0, -1.0}, {1.0, 0.0}}, {}, "hstrip");
}

LmiRegion s_region(double alpha, double r, double theta) {
  require(finite(alpha) && alpha < 0.0, "S region needs alpha < 0");
  require(finite(r) && r > 0.0, "S region needs r > 0");
  require(finite(theta) && theta > 0.0 && theta < std::numbers::pi / 2, "S region needs 0 < theta < pi/2");
  Matrix l = Matrix::diagonal({-2.0 * alpha, -r, -r, 0.0, 0.0});
  Matrix m = block_diag(block_diag(Matrix{{1.0}}, Matrix{{0.0, 1.0}, {0.0, 0.0}}), sector_block(theta));
  return LmiRegion(l, m, {}, "s-region");
}

LmiRegion parabola(double eps) {
  require(finite(eps) && eps > 0.0, "parabola needs eps > 0");
  return LmiRegion(Matrix::diagonal({-eps * eps, 0.0}), Matrix{{0.5, -1.0}, {0.0, 0.5}}, {}, "parabola");
}

}  // namespace builders

}  // namespace lmi
