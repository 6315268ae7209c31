#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "lmi/matrix.hpp"

namespace lmi {

struct ToleranceConfig {
  double eig_tol = 1e-12;     // Jacobi off-diagonal convergence, relative to ‖A‖_F
  double def_margin = 1e-9;   // eigenvalue sign threshold, relative to max(1, ‖A‖_F)
  double geom_tol = 1e-9;     // absolute, for interval and angle comparisons

  // Throws InvalidArgument unless every field is finite and strictly positive.
  void validate() const;
};

struct SymEigen {
  std::vector<double> values;  // weakly decreasing
  Matrix vectors;              // column k pairs with values[k]
};

struct Inertia {
  int n_pos = 0;
  int n_neg = 0;
  int n_zero = 0;
  bool operator==(const Inertia&) const = default;
};

enum class Definiteness { PosDef, PosSemi, NegDef, NegSemi, Indefinite, Zero };

const char* definiteness_name(Definiteness d);

struct SkewSpectrum {
  std::vector<double> nus;  // one entry per conjugate pair ±iν, decreasing
  int zero_count = 0;
};

struct PolarParts {
  Matrix p;
  Matrix u;
};

struct EigenCluster {
  double value = 0.0;
  Matrix basis;  // n×k, orthonormal columns spanning the eigenspace
};

SymEigen sym_eigen(const Matrix& a, const ToleranceConfig& cfg = {});

// Lower-triangular T with A = T Tᵀ. NotPositiveDefinite when a pivot falls to
// def_margin·‖A‖_F or below.
Matrix cholesky_spd(const Matrix& a, const ToleranceConfig& cfg = {});

// Non-throwing variant used on hot paths; the returned flag has the same
// meaning as a successful cholesky_spd.
bool is_positive_definite(const Matrix& a, const ToleranceConfig& cfg = {});
bool is_negative_definite(const Matrix& a, const ToleranceConfig& cfg = {});

double definiteness_threshold(const Matrix& a, const ToleranceConfig& cfg);
Inertia inertia(const Matrix& a, const ToleranceConfig& cfg = {});
Definiteness definiteness(const Matrix& a, const ToleranceConfig& cfg = {});

// Whether ‖A‖_F is below the definiteness threshold of a matrix of size `scale`.
bool negligible(const Matrix& a, double scale, const ToleranceConfig& cfg);

// [[A, -B], [B, A]]; its spectrum is that of A + iB with doubled multiplicity.
Matrix hermitian_embedding(const Matrix& a, const Matrix& b);
bool hermitian_negdef(const Matrix& a, const Matrix& b, const ToleranceConfig& cfg = {});
double hermitian_max_eigenvalue(const Matrix& a, const Matrix& b,
                                const ToleranceConfig& cfg = {});

SkewSpectrum skew_spectrum(const Matrix& k, const ToleranceConfig& cfg = {});
PolarParts polar_decompose(const Matrix& a, const ToleranceConfig& cfg = {});
std::vector<double> orthogonal_arg_spectrum(const Matrix& u, const ToleranceConfig& cfg = {});

// Sorted by decreasing real part, then decreasing imaginary part.
std::vector<std::complex<double>> general_eigenvalues(const Matrix& a,
                                                      const ToleranceConfig& cfg = {});

// Eigenspaces of a matrix with real, non-defective spectrum; nullopt when
// the spectrum is complex or some eigenvalue lacks a full eigenbasis.
std::optional<std::vector<EigenCluster>> real_eigenspaces(const Matrix& c,
                                                          const ToleranceConfig& cfg = {});

std::vector<double> singular_values(const Matrix& a, const ToleranceConfig& cfg = {});

// S A Sᵀ.
Matrix congruence(const Matrix& a, const Matrix& s);

}  // namespace lmi
