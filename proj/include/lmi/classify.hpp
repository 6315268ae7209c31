#pragma once

#include <string>
#include <vector>

#include "lmi/analysis.hpp"
#include "lmi/matkernel.hpp"
#include "lmi/region.hpp"

namespace lmi {

enum class ConicKind { Elliptic, Hyperbolic, Parabolic, DegeneratePair, Degenerate };

const char* conic_kind_name(ConicKind k);

// a11 x² + a22 y² + 2 a13 x + a33 > 0, from the (i, j) principal 2×2 minor.
struct CurveRegion {
  std::size_t i = 1;  // 1-based, i < j
  std::size_t j = 2;
  double a11 = 0.0;
  double a22 = 0.0;
  double a13 = 0.0;
  double a33 = 0.0;
  ConicKind kind = ConicKind::Degenerate;

  bool contains(ComplexPoint z) const;
};

enum class PieceKind { ShiftedHalfplane, ShiftedCone, HorizontalStripe, Hyperbola, WholePlane, Empty };

const char* piece_kind_name(PieceKind k);

struct ElementaryPiece {
  PieceKind kind = PieceKind::WholePlane;
  // ShiftedHalfplane: x < abscissa (side −1) or x > abscissa (side +1)
  double abscissa = 0.0;
  int side = 0;
  // ShiftedCone: apex on the real axis, half-angle about the oriented axis
  double vertex = 0.0;
  double half_angle = 0.0;
  Orientation orientation = Orientation::None;
  // HorizontalStripe: |y| < half_width
  double half_width = 0.0;
  // Hyperbola: a11 x² + a22 y² + 2 a13 x + a33 > 0
  double a11 = 0.0, a22 = 0.0, a13 = 0.0, a33 = 0.0;

  bool contains(ComplexPoint z) const;
  std::vector<double> params() const;
};

struct Decomposition {
  std::vector<ElementaryPiece> pieces;  // sorted, duplicates merged, WholePlane dropped
  std::vector<std::string> log;
};

bool pieces_contain(const std::vector<ElementaryPiece>& pieces, ComplexPoint z);

struct CurveCensus {
  int elliptic = 0;
  int hyperbolic_or_pair = 0;
  int parabolic = 0;
  int degenerate = 0;
  Inertia inertia;
  int elliptic_bound = 0;    // i₊·i₋
  int hyperbolic_bound = 0;  // C(i₊,2) + C(i₋,2)
  int parabolic_reference = 0;  // C(i₀,2) + i₀(i₊+i₋), reported only
  bool bounds_hold = true;
  std::vector<CurveRegion> curves;  // eigenbasis of Sym(M)
};

// Indices are 1-based throughout this header.
double mixed_minor(const Matrix& l, const Matrix& m, std::size_t i, std::size_t j);
CurveRegion pij_region(const LmiRegion& r, std::size_t i, std::size_t j, const ToleranceConfig& cfg = {});
ConicKind classify_conic(double a11, double a22, double a13, double a33, const ToleranceConfig& cfg = {});
LmiRegion diagonal_localization(const LmiRegion& r);
LmiRegion principal_localization(const LmiRegion& r, const std::vector<std::size_t>& alpha);
Decomposition elementary_decomposition(const LmiRegion& r, const ToleranceConfig& cfg = {});
Decomposition decomposition_simdiag(const LmiRegion& r, const ToleranceConfig& cfg = {});
CurveCensus curve_census(const LmiRegion& r, const ToleranceConfig& cfg = {});

}  // namespace lmi
