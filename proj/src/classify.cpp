#include "lmi/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <tuple>

#include "lmi/errors.hpp"

namespace lmi {

namespace {

constexpr double kClusterGap = 1e-7;
constexpr double kBlockTol = 1e-7;

void check_pair(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j <= i || j > n) throw Error(ErrorCode::IndexOutOfRange, "need 1 <= i < j <= n");
}

// 1×1 block: (mu, l1). 2×2 block: Sym part mu·I, Skew part ±nu·J, L = diag(l1, l2).
struct QuasiBlock {
  int size = 1;
  double mu = 0.0;
  double nu = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
};

std::vector<std::vector<std::size_t>> cluster_sorted(const std::vector<double>& v, double gap) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (out.empty() || std::abs(v[out.back().back()] - v[k]) > gap)
      out.push_back({k});
    else
      out.back().push_back(k);
  }
  return out;
}

Matrix columns(const Matrix& a, const std::vector<std::size_t>& idx) {
  Matrix c(a.rows(), idx.size());
  for (std::size_t b = 0; b < idx.size(); ++b)
    for (std::size_t i = 0; i < a.rows(); ++i) c(i, b) = a(i, idx[b]);
  return c;
}

// Orthogonal quasi-diagonalization of (L, S, K): S symmetric, K skew, with K
// and L required to respect the eigenspaces of S. Returns nullopt (and a
// reason) when the triple does not split into 1×1 and 2×2 blocks.
std::optional<std::vector<QuasiBlock>> quasi_blocks(const Matrix& l, const Matrix& s, const Matrix& k,
                                                    const ToleranceConfig& cfg, std::string* why) {
  const std::size_t n = l.rows();
  SymEigen es = sym_eigen(s, cfg);
  double smax = 0.0;
  for (double v : es.values) smax = std::max(smax, std::abs(v));
  const double lscale = std::max(1.0, l.frobenius());

  std::vector<Matrix> vecs;  // n×1 columns in block order
  std::vector<int> sizes;

  for (const auto& sc : cluster_sorted(es.values, kClusterGap * std::max(1.0, smax))) {
    Matrix v = columns(es.vectors, sc);
    Matrix lc = sym_part(v.transpose() * l * v);
    Matrix kc = skew_part(v.transpose() * k * v);
    SymEigen eg = sym_eigen(sym_part(kc.transpose() * kc), cfg);
    std::vector<double> nus;
    for (double g : eg.values) nus.push_back(std::sqrt(std::max(g, 0.0)));
    const double kscale = std::max(1.0, kc.frobenius());
    for (const auto& nc : cluster_sorted(nus, kClusterGap * kscale)) {
      Matrix w = v * columns(eg.vectors, nc);
      double nu = 0.0;
      for (std::size_t idx : nc) nu += nus[idx];
      nu /= static_cast<double>(nc.size());
      Matrix l2 = sym_part(w.transpose() * l * w);
      if (nu <= 1e-7 * kscale) {
        SymEigen el = sym_eigen(l2, cfg);
        for (std::size_t c = 0; c < nc.size(); ++c) {
          vecs.push_back(w * el.vectors.column(c));
          sizes.push_back(1);
        }
        continue;
      }
      if (nc.size() % 2 != 0) {
        if (why) *why = "odd-dimensional rotation eigenspace";
        return std::nullopt;
      }
      Matrix j = skew_part(w.transpose() * k * w) * (1.0 / nu);
      Matrix jt = j.transpose();
      Matrix lpart = sym_part(0.5 * (l2 + jt * l2 * j));
      Matrix apart = sym_part(0.5 * (l2 - jt * l2 * j));
      SymEigen ec = sym_eigen(lpart, cfg);
      for (const auto& lcl : cluster_sorted(ec.values, kClusterGap * lscale)) {
        Matrix f = columns(ec.vectors, lcl);
        Matrix af = sym_part(f.transpose() * apart * f);
        Matrix jf = f.transpose() * j * f;
        SymEigen ea = sym_eigen(af, cfg);
        const std::size_t p = lcl.size();
        std::vector<Matrix> chosen;
        for (std::size_t c = 0; c < p && chosen.size() < p; ++c) {
          Matrix u = ea.vectors.column(c);
          for (const Matrix& q : chosen) u -= dot_columns(q, 0, u, 0) * q;
          double norm = u.frobenius();
          if (norm < 0.5) continue;
          u *= 1.0 / norm;
          Matrix ju = jf * u;
          for (const Matrix& q : chosen) ju -= dot_columns(q, 0, ju, 0) * q;
          ju -= dot_columns(u, 0, ju, 0) * u;
          double jn = ju.frobenius();
          if (jn < 0.5) {
            if (why) *why = "rotation pairing degenerated";
            return std::nullopt;
          }
          ju *= 1.0 / jn;
          chosen.push_back(u);
          chosen.push_back(ju);
          vecs.push_back(w * (f * u));
          vecs.push_back(w * (f * ju));
          sizes.push_back(2);
        }
        if (chosen.size() != p) {
          if (why) *why = "could not pair a rotation eigenspace";
          return std::nullopt;
        }
      }
    }
  }

  if (vecs.size() != n) {
    if (why) *why = "basis construction lost vectors";
    return std::nullopt;
  }
  Matrix t(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) t(r, c) = vecs[r](c, 0);
  Matrix lt = congruence(l, t), st = congruence(s, t), kt = congruence(k, t);

  // every entry outside the diagonal 1×1/2×2 pattern must vanish
  std::vector<std::size_t> block_of(n);
  std::vector<QuasiBlock> blocks;
  for (std::size_t b = 0, pos = 0; b < sizes.size(); pos += sizes[b], ++b) {
    for (int q = 0; q < sizes[b]; ++q) block_of[pos + q] = b;
    QuasiBlock qb;
    qb.size = sizes[b];
    if (qb.size == 1) {
      qb.mu = st(pos, pos);
      qb.l1 = lt(pos, pos);
    } else {
      qb.mu = 0.5 * (st(pos, pos) + st(pos + 1, pos + 1));
      qb.nu = std::abs(kt(pos, pos + 1));
      qb.l1 = lt(pos, pos);
      qb.l2 = lt(pos + 1, pos + 1);
    }
    blocks.push_back(qb);
  }
  const double tol_s = kBlockTol * std::max(1.0, s.frobenius() + k.frobenius());
  const double tol_l = kBlockTol * lscale;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const bool same = block_of[a] == block_of[b];
      if (std::abs(st(a, b)) > tol_s || std::abs(lt(a, b)) > tol_l || (!same && std::abs(kt(a, b)) > tol_s)) {
        if (why) *why = "generators do not share a quasi-diagonal basis";
        return std::nullopt;
      }
    }
  for (std::size_t b = 0, pos = 0; b < sizes.size(); pos += sizes[b], ++b)
    if (sizes[b] == 2 && std::abs(st(pos, pos) - st(pos + 1, pos + 1)) > tol_s) {
      if (why) *why = "unequal Sym(M) entries on a rotation block";
      return std::nullopt;
    }
  return blocks;
}

ElementaryPiece halfplane_piece(double mu, double lambda) {
  ElementaryPiece p;
  p.kind = PieceKind::ShiftedHalfplane;
  p.abscissa = -lambda / (2.0 * mu);
  p.side = mu > 0.0 ? -1 : 1;
  return p;
}

ElementaryPiece simple_piece(PieceKind kind) {
  ElementaryPiece p;
  p.kind = kind;
  return p;
}

ElementaryPiece stripe_piece(double half_width) {
  ElementaryPiece p;
  p.kind = PieceKind::HorizontalStripe;
  p.half_width = half_width;
  return p;
}

Decomposition pieces_from_blocks(const std::vector<QuasiBlock>& blocks, double mu_tol, double l_tol,
                                 const ToleranceConfig& cfg) {
  std::vector<ElementaryPiece> raw;
  for (const QuasiBlock& b : blocks) {
    const bool mu_zero = std::abs(b.mu) <= mu_tol;
    if (b.size == 1) {
      if (mu_zero)
        raw.push_back(simple_piece(b.l1 < -l_tol ? PieceKind::WholePlane : PieceKind::Empty));
      else
        raw.push_back(halfplane_piece(b.mu, b.l1));
      continue;
    }
    const bool equal = std::abs(b.l1 - b.l2) <= l_tol;
    if (equal) {
      const double lam = 0.5 * (b.l1 + b.l2);
      if (mu_zero) {
        raw.push_back(lam < -l_tol ? stripe_piece(-lam / (2.0 * b.nu)) : simple_piece(PieceKind::Empty));
      } else {
        ElementaryPiece p;
        p.kind = PieceKind::ShiftedCone;
        p.vertex = -lam / (2.0 * b.mu);
        p.half_angle = std::atan2(std::abs(b.mu), b.nu);
        p.orientation = b.mu > 0.0 ? Orientation::Negative : Orientation::Positive;
        raw.push_back(p);
      }
      continue;
    }
    if (mu_zero) {
      if (b.l1 < -l_tol && b.l2 < -l_tol)
        raw.push_back(stripe_piece(std::sqrt(b.l1 * b.l2) / (2.0 * b.nu)));
      else
        raw.push_back(simple_piece(PieceKind::Empty));
      continue;
    }
    raw.push_back(halfplane_piece(b.mu, b.l1));
    raw.push_back(halfplane_piece(b.mu, b.l2));
    ElementaryPiece h;
    h.kind = PieceKind::Hyperbola;
    h.a11 = 4.0 * b.mu * b.mu;
    h.a22 = -4.0 * b.nu * b.nu;
    h.a13 = b.mu * (b.l1 + b.l2);
    h.a33 = b.l1 * b.l2;
    raw.push_back(h);
  }

  Decomposition out;
  for (const ElementaryPiece& p : raw) {
    if (p.kind == PieceKind::WholePlane) {
      out.log.push_back("dropped WholePlane piece");
      continue;
    }
    bool dup = false;
    for (const ElementaryPiece& q : out.pieces) {
      if (q.kind != p.kind) continue;
      auto a = p.params(), b = q.params();
      bool same = true;
      for (std::size_t k = 0; k < a.size(); ++k) same = same && std::abs(a[k] - b[k]) <= cfg.geom_tol;
      if (same) {
        dup = true;
        break;
      }
    }
    if (dup)
      out.log.push_back(std::string("merged duplicate ") + piece_kind_name(p.kind));
    else
      out.pieces.push_back(p);
  }
  std::sort(out.pieces.begin(), out.pieces.end(), [](const ElementaryPiece& a, const ElementaryPiece& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.params() < b.params();
  });
  return out;
}

double commutator_norm(const Matrix& a, const Matrix& b) { return (a * b - b * a).frobenius(); }

}  // namespace

const char* conic_kind_name(ConicKind k) {
  switch (k) {
    case ConicKind::Elliptic: return "Elliptic";
    case ConicKind::Hyperbolic: return "Hyperbolic";
    case ConicKind::Parabolic: return "Parabolic";
    case ConicKind::DegeneratePair: return "DegeneratePair";
    case ConicKind::Degenerate: return "Degenerate";
  }
  return "?";
}

const char* piece_kind_name(PieceKind k) {
  switch (k) {
    case PieceKind::ShiftedHalfplane: return "ShiftedHalfplane";
    case PieceKind::ShiftedCone: return "ShiftedCone";
    case PieceKind::HorizontalStripe: return "HorizontalStripe";
    case PieceKind::Hyperbola: return "Hyperbola";
    case PieceKind::WholePlane: return "WholePlane";
    case PieceKind::Empty: return "Empty";
  }
  return "?";
}

bool CurveRegion::contains(ComplexPoint z) const {
  return a11 * z.x * z.x + a22 * z.y * z.y + 2.0 * a13 * z.x + a33 > 0.0;
}

bool ElementaryPiece::contains(ComplexPoint z) const {
  switch (kind) {
    case PieceKind::ShiftedHalfplane:
      return side < 0 ? z.x < abscissa : z.x > abscissa;
    case PieceKind::ShiftedCone: {
      double run = orientation == Orientation::Negative ? vertex - z.x : z.x - vertex;
      return run > 0.0 && std::abs(z.y) * std::cos(half_angle) < run * std::sin(half_angle);
    }
    case PieceKind::HorizontalStripe:
      return std::abs(z.y) < half_width;
    case PieceKind::Hyperbola:
      return a11 * z.x * z.x + a22 * z.y * z.y + 2.0 * a13 * z.x + a33 > 0.0;
    case PieceKind::WholePlane:
      return true;
    case PieceKind::Empty:
      return false;
  }
  return false;
}

std::vector<double> ElementaryPiece::params() const {
  switch (kind) {
    case PieceKind::ShiftedHalfplane: return {abscissa, static_cast<double>(side)};
    case PieceKind::ShiftedCone:
      return {vertex, half_angle, orientation == Orientation::Negative ? -1.0 : 1.0};
    case PieceKind::HorizontalStripe: return {half_width};
    case PieceKind::Hyperbola: return {a11, a22, a13, a33};
    case PieceKind::WholePlane:
    case PieceKind::Empty: return {};
  }
  return {};
}

bool pieces_contain(const std::vector<ElementaryPiece>& pieces, ComplexPoint z) {
  return std::all_of(pieces.begin(), pieces.end(), [&](const ElementaryPiece& p) { return p.contains(z); });
}

double mixed_minor(const Matrix& l, const Matrix& m, std::size_t i, std::size_t j) {
  if (!l.square() || l.rows() != m.rows() || m.cols() != l.cols())
    throw Error(ErrorCode::DimensionMismatch, "L and M must be square of equal size");
  check_pair(l.rows(), i, j);
  --i;
  --j;
  return (m(i, i) * l(j, j) - l(i, j) * m(j, i)) + (l(i, i) * m(j, j) - m(i, j) * l(j, i));
}

ConicKind classify_conic(double a11, double a22, double a13, double a33, const ToleranceConfig& cfg) {
  const double c = std::max({std::abs(a11), std::abs(a22), std::abs(a13), std::abs(a33)});
  if (c == 0.0) return ConicKind::Degenerate;
  const double tol = cfg.def_margin;
  const double delta = a11 * a22;
  const double big_delta = a22 * (a11 * a33 - a13 * a13);
  const bool a11_zero = std::abs(a11) <= tol * c;
  const bool a22_zero = std::abs(a22) <= tol * c;
  if (a11_zero && a22_zero) return ConicKind::Degenerate;
  if (std::abs(delta) <= tol * c * c) return ConicKind::Parabolic;
  if (delta > 0.0) return ConicKind::Elliptic;
  return std::abs(big_delta) <= tol * c * c * c ? ConicKind::DegeneratePair : ConicKind::Hyperbolic;
}

CurveRegion pij_region(const LmiRegion& r, std::size_t i, std::size_t j, const ToleranceConfig& cfg) {
  check_pair(r.order(), i, j);
  const Matrix& l = r.l();
  const Matrix& m = r.m();
  const std::size_t a = i - 1, b = j - 1;
  CurveRegion cr;
  cr.i = i;
  cr.j = j;
  const double sab = m(a, b) + m(b, a);
  cr.a11 = 4.0 * m(a, a) * m(b, b) - sab * sab;
  const double kab = m(a, b) - m(b, a);
  cr.a22 = -kab * kab;
  cr.a13 = mixed_minor(l, m, i, j);
  cr.a33 = l(a, a) * l(b, b) - l(a, b) * l(b, a);
  cr.kind = classify_conic(cr.a11, cr.a22, cr.a13, cr.a33, cfg);
  return cr;
}

LmiRegion diagonal_localization(const LmiRegion& r) {
  const std::size_t n = r.order();
  std::vector<double> ld(n), md(n);
  for (std::size_t k = 0; k < n; ++k) {
    ld[k] = r.l()(k, k);
    md[k] = r.m()(k, k);
  }
  return LmiRegion(Matrix::diagonal(ld), Matrix::diagonal(md), {}, r.name());
}

LmiRegion principal_localization(const LmiRegion& r, const std::vector<std::size_t>& alpha) {
  if (alpha.empty()) throw Error(ErrorCode::IndexOutOfRange, "index set is empty");
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] < 1 || alpha[k] > r.order() || (k > 0 && alpha[k] <= alpha[k - 1]))
      throw Error(ErrorCode::IndexOutOfRange, "index set must be strictly increasing within 1..n");
    idx.push_back(alpha[k] - 1);
  }
  return LmiRegion(r.l().select(idx), r.m().select(idx), {}, r.name());
}

Decomposition elementary_decomposition(const LmiRegion& r, const ToleranceConfig& cfg) {
  const Matrix& m = r.m();
  const Matrix& l = r.l();
  const double mn = m.frobenius(), ln = l.frobenius();
  if (commutator_norm(m, m.transpose()) > 1e-9 * std::max(1.0, mn * mn))
    throw Error(ErrorCode::NotNormal, "M is not normal");
  if (commutator_norm(l, m) > 1e-9 * std::max(1.0, ln * mn))
    throw Error(ErrorCode::NotCommuting, "L and M do not commute");
  std::string why;
  auto blocks = quasi_blocks(l, r.sym_m(), r.skew_m(), cfg, &why);
  if (!blocks) throw Error(ErrorCode::NotCommuting, why);
  return pieces_from_blocks(*blocks, cfg.def_margin * std::max(1.0, mn), cfg.def_margin * std::max(1.0, ln), cfg);
}

Decomposition decomposition_simdiag(const LmiRegion& r, const ToleranceConfig& cfg) {
  const Matrix& s = r.sym_m();
  const std::size_t n = r.order();
  if (inertia(s, cfg).n_zero > 0) throw Error(ErrorCode::NotReducible, "Sym(M) is singular");
  Matrix c = solve(s, r.l());
  auto spaces = real_eigenspaces(c, cfg);
  if (!spaces) throw Error(ErrorCode::NotReducible, "Sym(M)^-1 L is not diagonalizable over the reals");

  // rows of X diagonalize Sym(M) and L simultaneously
  Matrix x(n, n);
  std::size_t row = 0;
  for (const EigenCluster& cl : *spaces) {
    Matrix g = sym_part(cl.basis.transpose() * s * cl.basis);
    SymEigen eg = sym_eigen(g, cfg);
    Matrix v = cl.basis * eg.vectors;
    for (std::size_t k = 0; k < v.cols(); ++k, ++row) {
      double w = std::sqrt(std::abs(eg.values[k]));
      if (w == 0.0) throw Error(ErrorCode::NotReducible, "degenerate congruence");
      for (std::size_t i = 0; i < n; ++i) x(row, i) = v(i, k) / w;
    }
  }
  Matrix st = sym_part(congruence(s, x));
  Matrix lt = sym_part(congruence(r.l(), x));
  Matrix kt = skew_part(congruence(r.skew_m(), x));
  const double tol_s = kBlockTol * std::max(1.0, st.frobenius());
  const double tol_l = kBlockTol * std::max(1.0, lt.frobenius());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && (std::abs(st(a, b)) > tol_s || std::abs(lt(a, b)) > tol_l))
        throw Error(ErrorCode::NotReducible, "simultaneous diagonalization did not converge");
  if (commutator_norm(st, kt) > kBlockTol * std::max(1.0, st.frobenius() * kt.frobenius()))
    throw Error(ErrorCode::NotReducible, "transformed Skew(M) does not commute with Sym(M)");
  std::string why;
  auto blocks = quasi_blocks(lt, st, kt, cfg, &why);
  if (!blocks) throw Error(ErrorCode::NotReducible, why);
  Decomposition d = pieces_from_blocks(*blocks, cfg.def_margin * std::max(1.0, st.frobenius() + kt.frobenius()),
                                       cfg.def_margin * std::max(1.0, lt.frobenius()), cfg);
  return d;
}

CurveCensus curve_census(const LmiRegion& r, const ToleranceConfig& cfg) {
  const std::size_t n = r.order();
  SymEigen es = sym_eigen(r.sym_m(), cfg);
  const double thr = definiteness_threshold(r.sym_m(), cfg);
  std::vector<double> snapped = es.values;
  CurveCensus out;
  for (double& v : snapped) {
    if (v > thr)
      ++out.inertia.n_pos;
    else if (v < -thr)
      ++out.inertia.n_neg;
    else {
      ++out.inertia.n_zero;
      v = 0.0;
    }
  }
  const Matrix& q = es.vectors;
  Matrix lq = sym_part(q.transpose() * r.l() * q);
  Matrix kq = skew_part(q.transpose() * r.skew_m() * q);
  LmiRegion rotated(lq, Matrix::diagonal(snapped) + kq, cfg);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      CurveRegion cr = pij_region(rotated, i, j, cfg);
      switch (cr.kind) {
        case ConicKind::Elliptic: ++out.elliptic; break;
        case ConicKind::Hyperbolic:
        case ConicKind::DegeneratePair: ++out.hyperbolic_or_pair; break;
        case ConicKind::Parabolic: ++out.parabolic; break;
        case ConicKind::Degenerate: ++out.degenerate; break;
      }
      out.curves.push_back(cr);
    }
  const int ip = out.inertia.n_pos, in = out.inertia.n_neg, i0 = out.inertia.n_zero;
  out.elliptic_bound = ip * in;
  out.hyperbolic_bound = ip * (ip - 1) / 2 + in * (in - 1) / 2;
  out.parabolic_reference = i0 * (i0 - 1) / 2 + i0 * (ip + in);
  out.bounds_hold = out.elliptic <= out.elliptic_bound && out.hyperbolic_or_pair <= out.hyperbolic_bound;
  return out;
}

}  // namespace lmi
