#pragma once

#include <random>
#include <string>
#include <vector>

#include "lmi/analysis.hpp"
#include "lmi/plot.hpp"
#include "lmi/region.hpp"

namespace lmi::testing {

std::string fixture_dir();
std::string source_dir();
std::vector<std::string> fixture_names();  // sorted file stems
LmiRegion load_fixture(const std::string& stem);

struct NamedRegion {
  std::string name;
  LmiRegion region;
};
std::vector<NamedRegion> all_fixtures();

using Rng = std::mt19937_64;

Matrix random_matrix(Rng& rng, std::size_t n, double lo = -1.0, double hi = 1.0);
Matrix random_symmetric(Rng& rng, std::size_t n, double lo = -1.0, double hi = 1.0);
Matrix random_skew(Rng& rng, std::size_t n);
Matrix random_orthogonal(Rng& rng, std::size_t n);
// Q1·diag(e^u)·Q2 with u uniform in [-spread, spread].
Matrix random_nonsingular(Rng& rng, std::size_t n, double spread = 0.5);
// L = −(BBᵀ + 0.1 I), so the origin is a member.
LmiRegion random_nonempty_region(Rng& rng, std::size_t n);
// Sym(M) with a chosen inertia pattern, optional skew part, origin inside.
LmiRegion random_structured_region(Rng& rng, std::size_t n);
// Normal M with L commuting; quasi-diagonal in a random orthonormal basis.
LmiRegion random_commuting_region(Rng& rng, std::size_t n);
// Congruence image of a quasi-diagonal pair whose 2×2 blocks carry unequal
// L entries, so only decomposition_simdiag applies.
LmiRegion random_simdiag_region(Rng& rng, std::size_t n);

// Magnitude used for boundary bands around the zero level of λmax.
double lambda_scale(const LmiRegion& r, ComplexPoint z);
bool clearly_inside(const LmiRegion& r, ComplexPoint z, double band = 1e-7);
bool clearly_outside(const LmiRegion& r, ComplexPoint z, double band = 1e-7);

// A viewport that frames the region, or [-3,3]² when empty.
Viewport framing_viewport(const LmiRegion& r, int px);

std::vector<ComplexPoint> sample_members(const LmiRegion& r, Rng& rng, std::size_t count);

struct PropertyResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void check(bool pass, const std::string& what);
};

PropertyResult prop_symmetry();
PropertyResult prop_convexity();
PropertyResult prop_openness();
PropertyResult prop_congruence();
PropertyResult prop_recession_law();
PropertyResult prop_origin_membership();
PropertyResult prop_bounded_point();
PropertyResult prop_localization();
PropertyResult prop_decomposition_grid();
PropertyResult prop_census_bounds();

std::vector<PropertyResult> run_property_suites();

}  // namespace lmi::testing
