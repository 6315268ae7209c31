#pragma once

#include <string>

#include "lmi/matkernel.hpp"
#include "lmi/matrix.hpp"

namespace lmi {

struct ComplexPoint {
  double x = 0.0;
  double y = 0.0;
};

// {z : L + Mz + Mᵀz̄ ≺ 0}. Immutable once built.
class LmiRegion {
 public:
  LmiRegion(Matrix l, Matrix m, const ToleranceConfig& cfg = {}, std::string name = {});

  const Matrix& l() const { return l_; }
  const Matrix& m() const { return m_; }
  const Matrix& sym_m() const { return sym_m_; }
  const Matrix& skew_m() const { return skew_m_; }
  std::size_t order() const { return l_.rows(); }
  const std::string& name() const { return name_; }

  LmiRegion renamed(std::string name) const;

 private:
  Matrix l_;
  Matrix m_;
  Matrix sym_m_;
  Matrix skew_m_;
  std::string name_;
};

LmiRegion new_region(const Matrix& l, const Matrix& m, const ToleranceConfig& cfg = {});

struct CharValue {
  Matrix a;  // symmetric part L + 2x·Sym(M)
  Matrix b;  // skew part 2y·Skew(M)
};

CharValue char_fn(const LmiRegion& r, ComplexPoint z);
bool contains(const LmiRegion& r, ComplexPoint z, const ToleranceConfig& cfg = {});
bool contains_closure(const LmiRegion& r, ComplexPoint z, const ToleranceConfig& cfg = {});
// Largest eigenvalue of f(z); negative exactly on the region.
double lambda_max(const LmiRegion& r, ComplexPoint z, const ToleranceConfig& cfg = {});

LmiRegion intersect(const LmiRegion& r1, const LmiRegion& r2);
LmiRegion shift(const LmiRegion& r, double alpha);
LmiRegion scale(const LmiRegion& r, double alpha);

namespace builders {

LmiRegion left_halfplane();
LmiRegion disk(double a, double r);
LmiRegion conic_sector(double theta);
LmiRegion sliced_sector(double theta, double delta);
LmiRegion vstrip(double alpha, double beta);
LmiRegion hstrip(double w0);
LmiRegion s_region(double alpha, double r, double theta);
LmiRegion parabola(double eps);

}  // namespace builders

}  // namespace lmi
