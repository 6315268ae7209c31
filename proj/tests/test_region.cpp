#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "expect_error.hpp"
#include "lmi/analysis.hpp"
#include "lmi/region.hpp"
#include "support.hpp"

using namespace lmi;
using lmi::testing::clearly_inside;
using lmi::testing::clearly_outside;
using lmi::testing::expect_code;

namespace {

LmiRegion intro() { return lmi::testing::load_fixture("intro"); }

LmiRegion unit_disk() { return builders::disk(0.0, 1.0); }

// Compares two membership predicates on a grid, skipping points near either boundary.
template <class A, class B>
int grid_mismatches(const LmiRegion& ra, A pa, const LmiRegion& rb, B pb, double span) {
  int bad = 0;
  for (int i = 0; i < 64; ++i)
    for (int k = 0; k < 64; ++k) {
      ComplexPoint z{-span + 2 * span * (i + 0.5) / 64, -span + 2 * span * (k + 0.5) / 64};
      ComplexPoint za = pa(z), zb = pb(z);
      bool decided_a = clearly_inside(ra, za) || clearly_outside(ra, za);
      bool decided_b = clearly_inside(rb, zb) || clearly_outside(rb, zb);
      if (!decided_a || !decided_b) continue;
      if (contains(ra, za) != contains(rb, zb)) ++bad;
    }
  return bad;
}

ComplexPoint same(ComplexPoint z) { return z; }

}  // namespace

TEST(NewRegion, Examples) {
  LmiRegion lhp = new_region(Matrix{{0.0}}, Matrix{{1.0}});
  EXPECT_EQ(lhp.order(), 1u);
  EXPECT_TRUE(contains(lhp, {-0.1, 3}));
  EXPECT_FALSE(contains(lhp, {0.1, 0}));
  EXPECT_EQ(intro().order(), 3u);
  expect_code(ErrorCode::NotSymmetricL, [] { new_region(Matrix{{0, 1}, {0, 0}}, Matrix(2, 2)); });
  expect_code(ErrorCode::DimensionMismatch, [] { new_region(Matrix(2, 2), Matrix(3, 3)); });
}

TEST(NewRegion, SplitSumsToM) {
  LmiRegion r = intro();
  EXPECT_EQ((r.sym_m() + r.skew_m() - r.m()).max_abs(), 0.0);
  EXPECT_EQ((r.sym_m() - r.sym_m().transpose()).max_abs(), 0.0);
  EXPECT_EQ((r.skew_m() + r.skew_m().transpose()).max_abs(), 0.0);
}

TEST(CharFn, Examples) {
  CharValue at0 = char_fn(intro(), {0, 0});
  EXPECT_EQ((at0.a - intro().l()).max_abs(), 0.0);
  EXPECT_EQ(at0.b.max_abs(), 0.0);
  CharValue lhp = char_fn(builders::left_halfplane(), {-1, 0});
  EXPECT_EQ(lhp.a(0, 0), -2.0);
  EXPECT_EQ(lhp.b(0, 0), 0.0);
  CharValue d = char_fn(unit_disk(), {0.5, 0.5});
  EXPECT_EQ((d.a - Matrix{{-1, 0.5}, {0.5, -1}}).max_abs(), 0.0);
  EXPECT_EQ((d.b - Matrix{{0, 0.5}, {-0.5, 0}}).max_abs(), 0.0);
}

TEST(Contains, Examples) {
  LmiRegion lhp = builders::left_halfplane();
  EXPECT_TRUE(contains(lhp, {-1, 5}));
  EXPECT_FALSE(contains(lhp, {0, 0}));
  EXPECT_TRUE(contains(unit_disk(), {0, 0}));
  EXPECT_FALSE(contains(unit_disk(), {1, 0}));
  EXPECT_TRUE(contains(intro(), {0.49, 0}));
  EXPECT_FALSE(contains(intro(), {0.51, 0}));
}

TEST(Contains, StrictAtBoundaryClosureIncludesIt) {
  EXPECT_FALSE(contains(unit_disk(), {1, 0}));
  EXPECT_TRUE(contains_closure(unit_disk(), {1, 0}));
  EXPECT_FALSE(contains_closure(unit_disk(), {1.01, 0}));
  EXPECT_FALSE(contains(intro(), {0.5, 0}));
  EXPECT_TRUE(contains_closure(intro(), {0.5, 0}));
}

TEST(Contains, LambdaMaxSignMatches) {
  LmiRegion r = intro();
  for (double x = -1; x <= 1; x += 0.125)
    for (double y = -1; y <= 1; y += 0.125) {
      double lm = lambda_max(r, {x, y});
      if (std::abs(lm) > 1e-8) EXPECT_EQ(contains(r, {x, y}), lm < 0) << x << "," << y;
    }
}

TEST(Intersect, VerticalStripFromHalfplanes) {
  const double alpha = 1, beta = 2;
  LmiRegion a = shift(builders::left_halfplane(), -alpha);         // x < −α
  LmiRegion b = scale(shift(builders::left_halfplane(), beta), -1);  // x > −β
  LmiRegion s = intersect(a, b);
  EXPECT_EQ(s.order(), 2u);
  EXPECT_EQ(grid_mismatches(s, same, builders::vstrip(alpha, beta), same, 4), 0);
  RealInterval iv = real_interval(s);
  EXPECT_NEAR(iv.lo, -beta, 1e-12);
  EXPECT_NEAR(iv.hi, -alpha, 1e-12);
}

TEST(Intersect, WithWholePlaneIsIdentity) {
  LmiRegion whole = new_region(Matrix{{-1.0}}, Matrix{{0.0}});
  LmiRegion r = intro();
  EXPECT_EQ(grid_mismatches(intersect(r, whole), same, r, same, 2), 0);
}

TEST(Intersect, IsConjunction) {
  LmiRegion r1 = unit_disk(), r2 = builders::conic_sector(std::numbers::pi / 4);
  LmiRegion both = intersect(r1, r2);
  int checked = 0;
  for (int i = 0; i < 64; ++i)
    for (int k = 0; k < 64; ++k) {
      ComplexPoint z{-1.5 + 3.0 * (i + 0.5) / 64, -1.5 + 3.0 * (k + 0.5) / 64};
      if (!(clearly_inside(r1, z) || clearly_outside(r1, z))) continue;
      if (!(clearly_inside(r2, z) || clearly_outside(r2, z))) continue;
      ++checked;
      EXPECT_EQ(contains(both, z), contains(r1, z) && contains(r2, z));
    }
  EXPECT_GT(checked, 3500);
}

TEST(Intersect, SRegionIsDiskSectorHalfplane) {
  const double alpha = -0.5, radius = 2, theta = std::numbers::pi / 4;
  LmiRegion composite =
      intersect(intersect(builders::disk(0, radius), builders::conic_sector(theta)),
                shift(builders::left_halfplane(), alpha));
  LmiRegion s = builders::s_region(alpha, radius, theta);
  EXPECT_EQ(grid_mismatches(s, same, composite, same, 2.5), 0);
}

TEST(Shift, Examples) {
  const double alpha = 0.75;
  LmiRegion c = shift(builders::left_halfplane(), -alpha);
  EXPECT_DOUBLE_EQ(c.l()(0, 0), 2 * alpha);
  EXPECT_TRUE(contains(c, {-alpha - 0.01, 0}));
  EXPECT_FALSE(contains(c, {-alpha + 0.01, 0}));
  LmiRegion r = intro();
  LmiRegion zero = shift(r, 0);
  EXPECT_EQ((zero.l() - r.l()).max_abs(), 0.0);
  EXPECT_EQ((zero.m() - r.m()).max_abs(), 0.0);
  const double a = 1.3;
  LmiRegion moved = shift(unit_disk(), a);
  EXPECT_EQ(grid_mismatches(moved, same, builders::disk(a, 1), same, 3), 0);
  EXPECT_EQ(grid_mismatches(moved, same, unit_disk(), [a](ComplexPoint z) { return ComplexPoint{z.x - a, z.y}; }, 3), 0);
}

TEST(Scale, Examples) {
  EXPECT_EQ(grid_mismatches(scale(unit_disk(), 2), same, builders::disk(0, 2), same, 3), 0);
  LmiRegion r = intro();
  LmiRegion one = scale(r, 1);
  EXPECT_EQ((one.l() - r.l()).max_abs(), 0.0);
  EXPECT_EQ((one.m() - r.m()).max_abs(), 0.0);
  LmiRegion rhp = scale(builders::left_halfplane(), -1);
  EXPECT_TRUE(contains(rhp, {0.5, 2}));
  EXPECT_FALSE(contains(rhp, {-0.5, 2}));
  expect_code(ErrorCode::ZeroScale, [&] { scale(r, 0); });
  for (double alpha : {-3.0, -0.5, 0.25, 4.0})
    EXPECT_EQ(grid_mismatches(scale(r, alpha), same, r,
                              [alpha](ComplexPoint z) { return ComplexPoint{z.x / alpha, z.y / alpha}; }, 2),
              0);
}

TEST(Builders, UnitDiskMatrices) {
  LmiRegion d = unit_disk();
  EXPECT_EQ((d.l() + Matrix::identity(2)).max_abs(), 0.0);
  EXPECT_EQ((d.m() - Matrix{{0, 1}, {0, 0}}).max_abs(), 0.0);
}

TEST(Builders, SectorMatrices) {
  const double t = std::numbers::pi / 4;
  LmiRegion s = builders::conic_sector(t);
  EXPECT_EQ(s.l().max_abs(), 0.0);
  EXPECT_EQ((s.m() - Matrix{{std::sin(t), std::cos(t)}, {-std::cos(t), std::sin(t)}}).max_abs(), 0.0);
  // Half-angle t about the negative real axis.
  EXPECT_TRUE(contains(s, {-1, 0.99}));
  EXPECT_FALSE(contains(s, {-1, 1.01}));
}

TEST(Builders, ParameterRanges) {
  expect_code(ErrorCode::ParameterOutOfRange, [] { builders::conic_sector(std::numbers::pi / 2); });
  expect_code(ErrorCode::ParameterOutOfRange, [] { builders::conic_sector(0); });
  expect_code(ErrorCode::ParameterOutOfRange, [] { builders::disk(0, 0); });
  expect_code(ErrorCode::ParameterOutOfRange, [] { builders::sliced_sector(0.5, 0.1); });
  expect_code(ErrorCode::ParameterOutOfRange, [] { builders::vstrip(2, 1); });
  expect_code(ErrorCode::ParameterOutOfRange, [] { builders::vstrip(0, 1); });
  expect_code(ErrorCode::ParameterOutOfRange, [] { builders::hstrip(-1); });
  expect_code(ErrorCode::ParameterOutOfRange, [] { builders::s_region(0, -1, 0.5); });
  expect_code(ErrorCode::ParameterOutOfRange, [] { builders::parabola(0); });
}

TEST(Builders, SRegionEmptyWhenAlphaBelowMinusR) {
  EXPECT_TRUE(is_empty(builders::s_region(-2, 1, std::numbers::pi / 4)));
  EXPECT_FALSE(is_empty(builders::s_region(-0.5, 1, std::numbers::pi / 4)));
}

TEST(Builders, Membership) {
  LmiRegion v = builders::vstrip(1, 2);
  EXPECT_TRUE(contains(v, {-1.5, 100}));
  EXPECT_FALSE(contains(v, {-0.5, 0}));
  EXPECT_FALSE(contains(v, {-2.5, 0}));
  LmiRegion p = builders::parabola(0.5);
  EXPECT_TRUE(contains(p, {-4, 0.99}));   // y² < −ε²x = 1
  EXPECT_FALSE(contains(p, {-4, 1.01}));
  LmiRegion ss = builders::sliced_sector(std::numbers::pi / 4, -1);
  EXPECT_TRUE(contains(ss, {-2, 0.99}));
  EXPECT_FALSE(contains(ss, {-0.9, 0}));
}
