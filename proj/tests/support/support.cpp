#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>

#include "lmi/classify.hpp"
#include "lmi/errors.hpp"
#include "lmi/serialize.hpp"

namespace lmi::testing {

namespace fs = std::filesystem;

std::string source_dir() { return LMI_SOURCE_DIR; }
std::string fixture_dir() { return source_dir() + "/fixtures"; }

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(fixture_dir()))
    if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

LmiRegion load_fixture(const std::string& stem) { return parse_region_file(fixture_dir() + "/" + stem + ".json"); }

std::vector<NamedRegion> all_fixtures() {
  std::vector<NamedRegion> out;
  for (const std::string& n : fixture_names()) out.push_back({n, load_fixture(n)});
  return out;
}

Matrix random_matrix(Rng& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = u(rng);
  return a;
}

Matrix random_symmetric(Rng& rng, std::size_t n, double lo, double hi) {
  return sym_part(random_matrix(rng, n, lo, hi));
}

Matrix random_skew(Rng& rng, std::size_t n) { return skew_part(random_matrix(rng, n)); }

Matrix random_orthogonal(Rng& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix q(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    while (true) {
      std::vector<double> v(n);
      for (double& x : v) x = g(rng);
      for (std::size_t k = 0; k < j; ++k) {
        double d = 0.0;
        for (std::size_t i = 0; i < n; ++i) d += v[i] * q(i, k);
        for (std::size_t i = 0; i < n; ++i) v[i] -= d * q(i, k);
      }
      double norm = 0.0;
      for (double x : v) norm += x * x;
      norm = std::sqrt(norm);
      if (norm < 1e-6) continue;
      for (std::size_t i = 0; i < n; ++i) q(i, j) = v[i] / norm;
      break;
    }
  }
  return q;
}

Matrix random_nonsingular(Rng& rng, std::size_t n, double spread) {
  std::uniform_real_distribution<double> u(-spread, spread);
  std::vector<double> d(n);
  for (double& x : d) x = std::exp(u(rng));
  return random_orthogonal(rng, n) * Matrix::diagonal(d) * random_orthogonal(rng, n);
}

namespace {

Matrix negative_definite(Rng& rng, std::size_t n) {
  Matrix b = random_matrix(rng, n);
  return -(b * b.transpose() + 0.1 * Matrix::identity(n));
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

}  // namespace

LmiRegion random_nonempty_region(Rng& rng, std::size_t n) {
  return LmiRegion(negative_definite(rng, n), random_matrix(rng, n));
}

LmiRegion random_structured_region(Rng& rng, std::size_t n) {
  const int pattern = static_cast<int>(rng() % 6);
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    double mag = uniform(rng, 0.2, 1.5);
    switch (pattern) {
      case 0: d[i] = mag; break;                               // definite +
      case 1: d[i] = -mag; break;                              // definite −
      case 2: d[i] = (i % 2 == 0) ? mag : -mag; break;         // indefinite
      case 3: d[i] = (i == 0) ? 0.0 : mag; break;              // semidefinite +
      case 4: d[i] = (i == 0) ? 0.0 : -mag; break;             // semidefinite −
      default: d[i] = 0.0; break;                              // Sym(M) = 0
    }
  }
  if (pattern == 2 && n == 1) d[0] = uniform(rng, -1.0, 1.0);
  Matrix q = random_orthogonal(rng, n);
  Matrix s = q * Matrix::diagonal(d) * q.transpose();
  Matrix k = (rng() % 4 == 0) ? Matrix(n, n) : random_skew(rng, n);
  return LmiRegion(negative_definite(rng, n), s + k);
}

LmiRegion random_commuting_region(Rng& rng, std::size_t n) {
  Matrix mb(n, n), lb(n, n);
  std::size_t i = 0;
  while (i < n) {
    if (n - i >= 2 && rng() % 2 == 0) {
      double mu = (rng() % 5 == 0) ? 0.0 : uniform(rng, -1.0, 1.0);
      double nu = uniform(rng, 0.2, 1.5);
      double lam = uniform(rng, -2.0, 0.5);
      mb(i, i) = mb(i + 1, i + 1) = mu;
      mb(i, i + 1) = nu;
      mb(i + 1, i) = -nu;
      lb(i, i) = lb(i + 1, i + 1) = lam;
      i += 2;
    } else {
      mb(i, i) = (rng() % 10 == 0) ? 0.0 : uniform(rng, -1.0, 1.0);
      lb(i, i) = uniform(rng, -2.0, 0.5);
      i += 1;
    }
  }
  Matrix q = random_orthogonal(rng, n);
  return LmiRegion(congruence(lb, q), congruence(mb, q));
}

LmiRegion random_simdiag_region(Rng& rng, std::size_t n) {
  Matrix mb(n, n), lb(n, n);
  std::size_t i = 0;
  auto nonzero = [&](double lo, double hi) {
    double v = uniform(rng, lo, hi);
    return (rng() % 2 == 0) ? v : -v;
  };
  while (i < n) {
    if (n - i >= 2 && rng() % 3 != 0) {
      double mu = nonzero(0.2, 1.0);
      double nu = uniform(rng, 0.2, 1.5);
      mb(i, i) = mb(i + 1, i + 1) = mu;
      mb(i, i + 1) = nu;
      mb(i + 1, i) = -nu;
      lb(i, i) = uniform(rng, -2.0, -0.2);
      lb(i + 1, i + 1) = uniform(rng, -2.0, -0.2);
      i += 2;
    } else {
      mb(i, i) = nonzero(0.2, 1.0);
      lb(i, i) = uniform(rng, -2.0, 0.5);
      i += 1;
    }
  }
  Matrix t = random_nonsingular(rng, n, 0.4);
  return LmiRegion(congruence(lb, t), congruence(mb, t));
}

double lambda_scale(const LmiRegion& r, ComplexPoint z) {
  return std::max(1.0, r.l().frobenius() + 2.0 * r.m().frobenius() * std::hypot(z.x, z.y));
}

bool clearly_inside(const LmiRegion& r, ComplexPoint z, double band) {
  return lambda_max(r, z) < -band * lambda_scale(r, z);
}

bool clearly_outside(const LmiRegion& r, ComplexPoint z, double band) {
  return lambda_max(r, z) > band * lambda_scale(r, z);
}

Viewport framing_viewport(const LmiRegion& r, int px) {
  if (is_empty(r)) return Viewport{-3.0, 3.0, -3.0, 3.0, px, px};
  return default_viewport(r, px, px);
}

std::vector<ComplexPoint> sample_members(const LmiRegion& r, Rng& rng, std::size_t count) {
  std::vector<ComplexPoint> out;
  if (is_empty(r)) return out;
  Viewport vp = framing_viewport(r, 16);
  std::uniform_real_distribution<double> ux(vp.x_lo, vp.x_hi), uy(vp.y_lo, vp.y_hi);
  for (std::size_t attempt = 0; attempt < count * 2000 && out.size() < count; ++attempt) {
    ComplexPoint z{ux(rng), uy(rng)};
    if (contains(r, z)) out.push_back(z);
  }
  return out;
}

void PropertyResult::check(bool pass, const std::string& what) {
  ++cases;
  if (!pass) {
    if (failures == 0) first_failure = what;
    ++failures;
  }
}

namespace {

std::string at(const std::string& region, ComplexPoint z) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s at %.17g%+.17gi", region.c_str(), z.x, z.y);
  return buf;
}

std::vector<NamedRegion> fixtures_plus_random(std::uint64_t seed, int count, bool nonempty_only) {
  std::vector<NamedRegion> out;
  for (NamedRegion& f : all_fixtures())
    if (!nonempty_only || !is_empty(f.region)) out.push_back(std::move(f));
  Rng rng(seed);
  for (int k = 0; k < count; ++k) {
    std::size_t n = 1 + rng() % 5;
    out.push_back({"random" + std::to_string(k), random_nonempty_region(rng, n)});
  }
  return out;
}

}  // namespace

PropertyResult prop_symmetry() {
  PropertyResult res{"symmetry: contains(z) == contains(conj z)"};
  Rng rng(101);
  for (const NamedRegion& nr : fixtures_plus_random(102, 40, false)) {
    Viewport vp = framing_viewport(nr.region, 16);
    std::uniform_real_distribution<double> ux(vp.x_lo, vp.x_hi), uy(vp.y_lo, vp.y_hi);
    for (int k = 0; k < 100; ++k) {
      ComplexPoint z{ux(rng), uy(rng)};
      res.check(contains(nr.region, z) == contains(nr.region, {z.x, -z.y}), at(nr.name, z));
    }
  }
  return res;
}

PropertyResult prop_convexity() {
  PropertyResult res{"convexity: midpoints of member pairs are members"};
  Rng rng(201);
  for (const NamedRegion& nr : fixtures_plus_random(202, 10, true)) {
    std::vector<ComplexPoint> pts = sample_members(nr.region, rng, 400);
    if (pts.size() < 2) continue;
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    for (int k = 0; k < 1000; ++k) {
      ComplexPoint a = pts[pick(rng)], b = pts[pick(rng)];
      ComplexPoint mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
      res.check(contains(nr.region, mid), at(nr.name, mid));
    }
  }
  return res;
}

PropertyResult prop_openness() {
  PropertyResult res{"openness: members away from the boundary have a member ball"};
  Rng rng(301);
  for (const NamedRegion& nr : fixtures_plus_random(302, 20, true)) {
    const double mnorm = nr.region.m().frobenius();
    int tested = 0;
    for (const ComplexPoint& z : sample_members(nr.region, rng, 400)) {
      if (tested >= 100) break;
      const double delta = 1e-6 * (1.0 + std::hypot(z.x, z.y));
      if (lambda_max(nr.region, z) >= -(20.0 * mnorm * delta + 1e-7 * lambda_scale(nr.region, z))) continue;
      ++tested;
      for (int k = 0; k < 8; ++k) {
        const double phi = k * std::numbers::pi / 4.0;
        ComplexPoint w{z.x + delta * std::cos(phi), z.y + delta * std::sin(phi)};
        res.check(contains(nr.region, w), at(nr.name, w));
      }
    }
  }
  return res;
}

PropertyResult prop_congruence() {
  PropertyResult res{"congruence invariance of membership (64x64 grids)"};
  Rng rng(401);
  for (const NamedRegion& nr : fixtures_plus_random(402, 10, true)) {
    const std::size_t n = nr.region.order();
    Matrix s = random_nonsingular(rng, n);
    LmiRegion image(congruence(nr.region.l(), s), congruence(nr.region.m(), s));
    Viewport vp = framing_viewport(nr.region, 64);
    for (int row = 0; row < 64; ++row)
      for (int col = 0; col < 64; ++col) {
        ComplexPoint z = vp.cell_center(row, col);
        if (std::abs(lambda_max(nr.region, z)) <= 1e-6 * lambda_scale(nr.region, z)) continue;
        res.check(contains(nr.region, z) == contains(image, z), at(nr.name, z));
      }
  }
  return res;
}

PropertyResult prop_recession_law() {
  PropertyResult res{"recession law: z0 + t z stays in the region for z in the recession cone"};
  Rng rng(501);
  std::vector<NamedRegion> regions = fixtures_plus_random(502, 0, true);
  for (int k = 0; k < 40; ++k)
    regions.push_back({"structured" + std::to_string(k), random_structured_region(rng, 1 + rng() % 4)});
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (const NamedRegion& nr : regions) {
    const LmiRegion& r = nr.region;
    if (is_empty(r)) continue;
    const double tol = 1e-12 * std::max(1.0, r.m().frobenius());
    std::vector<ComplexPoint> dirs;
    auto in_cone = [&](ComplexPoint z) {
      return hermitian_max_eigenvalue(2.0 * z.x * r.sym_m(), 2.0 * z.y * r.skew_m()) <= tol;
    };
    for (ComplexPoint z : {ComplexPoint{1, 0}, ComplexPoint{-1, 0}, ComplexPoint{0, 1}, ComplexPoint{0, -1}})
      if (in_cone(z)) dirs.push_back(z);
    for (int k = 0; k < 2000 && dirs.size() < 100; ++k) {
      const double phi = angle(rng);
      ComplexPoint z{std::cos(phi), std::sin(phi)};
      if (in_cone(z)) dirs.push_back(z);
    }
    std::vector<ComplexPoint> bases;
    for (const ComplexPoint& z0 : sample_members(r, rng, 200))
      if (bases.size() < 20 && clearly_inside(r, z0)) bases.push_back(z0);
    for (const ComplexPoint& z0 : bases)
      for (const ComplexPoint& z : dirs)
        for (double t : {1.0, 10.0, 100.0}) {
          ComplexPoint w{z0.x + t * z.x, z0.y + t * z.y};
          res.check(contains(r, w), at(nr.name, w));
        }
  }
  return res;
}

PropertyResult prop_origin_membership() {
  PropertyResult res{"origin is a member iff L is negative definite"};
  Rng rng(601);
  std::vector<NamedRegion> regions = fixtures_plus_random(602, 0, false);
  for (int k = 0; k < 1000; ++k) {
    std::size_t n = 1 + rng() % 5;
    Matrix l = random_symmetric(rng, n) - uniform(rng, 0.0, 2.0) * Matrix::identity(n);
    regions.push_back({"random" + std::to_string(k), LmiRegion(l, random_matrix(rng, n))});
  }
  for (const NamedRegion& nr : regions)
    res.check(contains(nr.region, {0.0, 0.0}) == (definiteness(nr.region.l()) == Definiteness::NegDef),
              at(nr.name, {0.0, 0.0}));
  return res;
}

PropertyResult prop_bounded_point() {
  PropertyResult res{"bounded iff the recession cone is a point (ray scan at radius 1e6)"};
  Rng rng(701);
  std::vector<NamedRegion> regions = fixtures_plus_random(702, 0, true);
  for (int k = 0; k < 1000; ++k)
    regions.push_back({"structured" + std::to_string(k), random_structured_region(rng, 1 + rng() % 4)});
  for (const NamedRegion& nr : regions) {
    RegionReport rep = region_report(nr.region);
    if (rep.empty) continue;
    const double x0 = default_center(rep.interval);
    bool far_member = false;
    for (int k = 0; k < 360 && !far_member; ++k) {
      const double phi = k * std::numbers::pi / 180.0;
      far_member = contains(nr.region, {x0 + 1e6 * std::cos(phi), 1e6 * std::sin(phi)});
    }
    const bool point = rep.recession && rep.recession->kind == ConeKind::Point;
    res.check(rep.bounded == !far_member && rep.bounded == point, nr.name);
  }
  return res;
}

PropertyResult prop_localization() {
  PropertyResult res{"localization inclusions (diagonal, principal, second-order)"};
  std::vector<NamedRegion> regions = fixtures_plus_random(802, 30, true);
  for (const NamedRegion& nr : regions) {
    const LmiRegion& r = nr.region;
    const std::size_t n = r.order();
    LmiRegion diag = diagonal_localization(r);
    std::vector<LmiRegion> principal;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::size_t> alpha;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) alpha.push_back(i + 1);
      principal.push_back(principal_localization(r, alpha));
    }
    std::vector<CurveRegion> curves;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) curves.push_back(pij_region(r, i, j));
    Viewport vp = framing_viewport(r, 64);
    for (int row = 0; row < 64; ++row)
      for (int col = 0; col < 64; ++col) {
        ComplexPoint z = vp.cell_center(row, col);
        if (!clearly_inside(r, z)) continue;
        res.check(contains(diag, z), "diagonal " + at(nr.name, z));
        for (const LmiRegion& p : principal) res.check(contains(p, z), "principal " + at(nr.name, z));
        for (const CurveRegion& c : curves) res.check(c.contains(z), "pij " + at(nr.name, z));
      }
  }
  return res;
}

PropertyResult prop_decomposition_grid() {
  PropertyResult res{"elementary pieces reproduce the region (128x128 grids)"};
  std::vector<NamedRegion> regions;
  for (const char* stem : {"sector", "hstrip", "vstrip", "left_halfplane"})
    regions.push_back({stem, load_fixture(stem)});
  Rng rng(901);
  for (int k = 0; k < 15; ++k)
    regions.push_back({"commuting" + std::to_string(k), random_commuting_region(rng, 1 + rng() % 5)});
  for (int k = 0; k < 10; ++k)
    regions.push_back({"simdiag" + std::to_string(k), random_simdiag_region(rng, 2 + rng() % 3)});
  for (const NamedRegion& nr : regions) {
    const LmiRegion& r = nr.region;
    Decomposition dec;
    try {
      dec = elementary_decomposition(r);
    } catch (const Error&) {
      try {
        dec = decomposition_simdiag(r);
      } catch (const Error& e) {
        res.check(false, nr.name + ": " + e.what());
        continue;
      }
    }
    Viewport vp = framing_viewport(r, 128);
    for (int row = 0; row < 128; ++row)
      for (int col = 0; col < 128; ++col) {
        ComplexPoint z = vp.cell_center(row, col);
        if (std::abs(lambda_max(r, z)) <= 1e-7 * lambda_scale(r, z)) continue;
        res.check(contains(r, z) == pieces_contain(dec.pieces, z), at(nr.name, z));
      }
  }
  return res;
}

PropertyResult prop_census_bounds() {
  PropertyResult res{"curve census bounds; no elliptic curves for normal M"};
  Rng rng(1001);
  for (int k = 0; k < 1000; ++k) {
    std::size_t n = 3 + rng() % 3;
    LmiRegion r(random_symmetric(rng, n), random_matrix(rng, n));
    CurveCensus c = curve_census(r);
    const bool ok = c.bounds_hold && c.elliptic <= c.inertia.n_pos * c.inertia.n_neg &&
                    c.hyperbolic_or_pair <= c.inertia.n_pos * (c.inertia.n_pos - 1) / 2 +
                                                c.inertia.n_neg * (c.inertia.n_neg - 1) / 2;
    res.check(ok, "random" + std::to_string(k));
  }
  for (int k = 0; k < 200; ++k) {
    LmiRegion r = random_commuting_region(rng, 2 + rng() % 4);
    res.check(curve_census(r).elliptic == 0, "normal" + std::to_string(k));
  }
  return res;
}

std::vector<PropertyResult> run_property_suites() {
  return {prop_symmetry(),      prop_convexity(),   prop_openness(),    prop_congruence(),
          prop_recession_law(), prop_origin_membership(),  prop_bounded_point(), prop_localization(),
          prop_decomposition_grid(), prop_census_bounds()};
}

}  // namespace lmi::testing
