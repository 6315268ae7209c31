#include "lmi/matkernel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "lmi/errors.hpp"

namespace lmi {

namespace {

constexpr int kJacobiSweeps = 30;
constexpr int kFirstAttemptSweeps = 12;
constexpr int kQrIterationsPerRoot = 60;

void require_square(const Matrix& a, const char* what) {
  if (!a.square() || a.rows() == 0)
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " must be square and non-empty");
  if (!a.all_finite()) throw Error(ErrorCode::InvalidArgument, std::string(what) + " has non-finite entries");
}

double asymmetry(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      double d = a(i, j) - a(j, i);
      s += 2.0 * d * d;
    }
  return std::sqrt(s);
}

double skew_defect(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      double d = a(i, j) + a(j, i);
      s += d * d;
    }
  return std::sqrt(s);
}

void require_symmetric(const Matrix& a, const ToleranceConfig& cfg, const char* what) {
  require_square(a, what);
  if (asymmetry(a) > cfg.def_margin * a.frobenius())
    throw Error(ErrorCode::NotSymmetric, std::string(what) + " is not symmetric");
}

double off_diagonal(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

bool cholesky_into(const Matrix& a, double threshold, Matrix* t) {
  const std::size_t n = a.rows();
  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > threshold)) return false;
    double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = 0.5 * (a(i, j) + a(j, i));
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }
  if (t) *t = std::move(l);
  return true;
}

}  // namespace

void ToleranceConfig::validate() const {
  auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!ok(eig_tol) || !ok(def_margin) || !ok(geom_tol))
    throw Error(ErrorCode::InvalidArgument, "tolerances must be finite and positive");
}

const char* definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::PosDef: return "PosDef";
    case Definiteness::PosSemi: return "PosSemi";
    case Definiteness::NegDef: return "NegDef";
    case Definiteness::NegSemi: return "NegSemi";
    case Definiteness::Indefinite: return "Indefinite";
    case Definiteness::Zero: return "Zero";
  }
  return "?";
}

namespace {

// Cyclic sweeps on `a`, accumulating rotations into `v`. True once the
// off-diagonal norm reaches eig_tol·norm.
bool jacobi_sweeps(Matrix& a, Matrix& v, double norm, int budget, const ToleranceConfig& cfg) {
  const std::size_t n = a.rows();
  for (int sweep = 0; sweep <= budget; ++sweep) {
    double off = off_diagonal(a);
    if (off == 0.0 || off <= cfg.eig_tol * norm) return true;
    if (sweep == budget) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (apq == 0.0) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  return false;
}

// Fixed reflection I − 2wwᵀ with w ∝ (√2, √3, …).
Matrix restart_reflection(std::size_t n) {
  std::vector<double> w(n);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::sqrt(2.0 + static_cast<double>(i));
    norm2 += w[i] * w[i];
  }
  Matrix h = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) -= 2.0 * w[i] * w[j] / norm2;
  return h;
}

}  // namespace

SymEigen sym_eigen(const Matrix& input, const ToleranceConfig& cfg) {
  require_symmetric(input, cfg, "sym_eigen input");
  const std::size_t n = input.rows();
  Matrix a = sym_part(input);
  Matrix v = Matrix::identity(n);
  const double norm = a.frobenius();

  // Exactly structured inputs such as [[0, -K], [K, 0]] stall the cyclic
  // order at a linear rate. Those get a second attempt on a reflected copy.
  bool converged = jacobi_sweeps(a, v, norm, kFirstAttemptSweeps, cfg);
  if (!converged) {
    Matrix h = restart_reflection(n);
    a = sym_part(h * sym_part(input) * h);
    v = h;
    converged = jacobi_sweeps(a, v, norm, kJacobiSweeps - kFirstAttemptSweeps, cfg);
  }
  if (!converged) throw Error(ErrorCode::NoConvergence, "Jacobi sweep budget exhausted");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
  SymEigen out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

Matrix cholesky_spd(const Matrix& a, const ToleranceConfig& cfg) {
  require_symmetric(a, cfg, "cholesky_spd input");
  Matrix t;
  if (!cholesky_into(a, cfg.def_margin * a.frobenius(), &t))
    throw Error(ErrorCode::NotPositiveDefinite, "pivot at or below the definiteness margin");
  return t;
}

bool is_positive_definite(const Matrix& a, const ToleranceConfig& cfg) {
  return cholesky_into(a, cfg.def_margin * a.frobenius(), nullptr);
}

bool is_negative_definite(const Matrix& a, const ToleranceConfig& cfg) {
  return is_positive_definite(-a, cfg);
}

double definiteness_threshold(const Matrix& a, const ToleranceConfig& cfg) {
  return cfg.def_margin * std::max(1.0, a.frobenius());
}

Inertia inertia(const Matrix& a, const ToleranceConfig& cfg) {
  SymEigen e = sym_eigen(a, cfg);
  const double thr = definiteness_threshold(a, cfg);
  Inertia in;
  for (double l : e.values) {
    if (l > thr)
      ++in.n_pos;
    else if (l < -thr)
      ++in.n_neg;
    else
      ++in.n_zero;
  }
  return in;
}

Definiteness definiteness(const Matrix& a, const ToleranceConfig& cfg) {
  Inertia in = inertia(a, cfg);
  const int n = static_cast<int>(a.rows());
  if (in.n_zero == n) return Definiteness::Zero;
  if (in.n_pos == n) return Definiteness::PosDef;
  if (in.n_neg == n) return Definiteness::NegDef;
  if (in.n_neg == 0) return Definiteness::PosSemi;
  if (in.n_pos == 0) return Definiteness::NegSemi;
  return Definiteness::Indefinite;
}

bool negligible(const Matrix& a, double scale, const ToleranceConfig& cfg) {
  return a.frobenius() <= cfg.def_margin * std::max(1.0, scale);
}

Matrix hermitian_embedding(const Matrix& a, const Matrix& b) {
  if (!a.square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "Hermitian parts must be square of equal size");
  const std::size_t n = a.rows();
  Matrix e(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      e(i, j) = a(i, j);
      e(n + i, n + j) = a(i, j);
      e(i, n + j) = -b(i, j);
      e(n + i, j) = b(i, j);
    }
  return e;
}

bool hermitian_negdef(const Matrix& a, const Matrix& b, const ToleranceConfig& cfg) {
  Matrix e = hermitian_embedding(a, b);
  return is_positive_definite(-e, cfg);
}

double hermitian_max_eigenvalue(const Matrix& a, const Matrix& b, const ToleranceConfig& cfg) {
  return sym_eigen(hermitian_embedding(a, b), cfg).values.front();
}

SkewSpectrum skew_spectrum(const Matrix& k, const ToleranceConfig& cfg) {
  require_square(k, "skew_spectrum input");
  const double norm = k.frobenius();
  if (skew_defect(k) > cfg.def_margin * norm)
    throw Error(ErrorCode::NotSkewSymmetric, "skew_spectrum input is not skew-symmetric");
  const std::size_t n = k.rows();
  // Eigenvectors of KᵀK, with σ = ‖Kv‖ rather than √λ so that small ν keep
  // absolute accuracy ~ ε‖K‖. Cyclic Jacobi on the Jordan-Wielandt form
  // [[0, Kᵀ], [K, 0]] converges only linearly here.
  SymEigen g = sym_eigen(sym_part(k.transpose() * k), cfg);
  std::vector<double> sigma(n);
  for (std::size_t c = 0; c < n; ++c) {
    double s2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double kv = 0.0;
      for (std::size_t j = 0; j < n; ++j) kv += k(i, j) * g.vectors(j, c);
      s2 += kv * kv;
    }
    sigma[c] = std::sqrt(s2);
  }
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  const double thr = cfg.def_margin * std::max(1.0, norm);
  SkewSpectrum out;
  for (std::size_t p = 0; p + 1 < n; p += 2) {
    double nu = 0.5 * (sigma[p] + sigma[p + 1]);
    if (nu > thr) out.nus.push_back(nu);
  }
  out.zero_count = static_cast<int>(n) - 2 * static_cast<int>(out.nus.size());
  return out;
}

std::vector<double> singular_values(const Matrix& a, const ToleranceConfig& cfg) {
  Matrix g = a.transpose() * a;
  SymEigen e = sym_eigen(sym_part(g), cfg);
  std::vector<double> s;
  for (double v : e.values) s.push_back(std::sqrt(std::max(v, 0.0)));
  return s;
}

PolarParts polar_decompose(const Matrix& a, const ToleranceConfig& cfg) {
  require_square(a, "polar_decompose input");
  Matrix g = sym_part(a * a.transpose());
  SymEigen e = sym_eigen(g, cfg);
  const std::size_t n = a.rows();
  if (e.values.back() <= definiteness_threshold(g, cfg))
    throw Error(ErrorCode::Singular, "polar_decompose input is singular");
  Matrix root(n, n), inv_root(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double r = 0.0, ir = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        double s = std::sqrt(e.values[k]);
        double qq = e.vectors(i, k) * e.vectors(j, k);
        r += qq * s;
        ir += qq / s;
      }
      root(i, j) = r;
      inv_root(i, j) = ir;
    }
  return {sym_part(root), inv_root * a};
}

std::vector<double> orthogonal_arg_spectrum(const Matrix& u, const ToleranceConfig& cfg) {
  require_square(u, "orthogonal_arg_spectrum input");
  const std::size_t n = u.rows();
  double defect = (u * u.transpose() - Matrix::identity(n)).frobenius();
  if (defect > 1e-8 * std::sqrt(static_cast<double>(n)))
    throw Error(ErrorCode::NotOrthogonal, "matrix is not orthogonal");
  SymEigen e = sym_eigen(sym_part(u), cfg);
  std::vector<double> phi;
  for (double c : e.values) phi.push_back(std::acos(std::clamp(c, -1.0, 1.0)));
  return phi;
}

namespace {

// Hessenberg reduction and shifted QR on a 1-based working copy, after the
// classic EISPACK balanc/elmhes/hqr sequence.
class QrWorkspace {
 public:
  explicit QrWorkspace(const Matrix& m) : n_(static_cast<int>(m.rows())), a_((n_ + 1) * (n_ + 1), 0.0) {
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) at(i, j) = m(i - 1, j - 1);
  }

  double& at(int i, int j) { return a_[i * (n_ + 1) + j]; }

  void balance() {
    const double radix = 2.0, sqrdx = radix * radix;
    bool done = false;
    while (!done) {
      done = true;
      for (int i = 1; i <= n_; ++i) {
        double r = 0.0, c = 0.0;
        for (int j = 1; j <= n_; ++j)
          if (j != i) {
            c += std::abs(at(j, i));
            r += std::abs(at(i, j));
          }
        if (c != 0.0 && r != 0.0) {
          double g = r / radix, f = 1.0, s = c + r;
          while (c < g) {
            f *= radix;
            c *= sqrdx;
          }
          g = r * radix;
          while (c > g) {
            f /= radix;
            c /= sqrdx;
          }
          if ((c + r) / f < 0.95 * s) {
            done = false;
            g = 1.0 / f;
            for (int j = 1; j <= n_; ++j) at(i, j) *= g;
            for (int j = 1; j <= n_; ++j) at(j, i) *= f;
          }
        }
      }
    }
  }

  void hessenberg() {
    for (int m = 2; m < n_; ++m) {
      double x = 0.0;
      int i = m;
      for (int j = m; j <= n_; ++j)
        if (std::abs(at(j, m - 1)) > std::abs(x)) {
          x = at(j, m - 1);
          i = j;
        }
      if (i != m) {
        for (int j = m - 1; j <= n_; ++j) std::swap(at(i, j), at(m, j));
        for (int j = 1; j <= n_; ++j) std::swap(at(j, i), at(j, m));
      }
      if (x != 0.0) {
        for (i = m + 1; i <= n_; ++i) {
          double y = at(i, m - 1);
          if (y != 0.0) {
            y /= x;
            at(i, m - 1) = y;
            for (int j = m; j <= n_; ++j) at(i, j) -= y * at(m, j);
            for (int j = 1; j <= n_; ++j) at(j, m) += y * at(j, i);
          }
        }
      }
    }
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j < i - 1; ++j) at(i, j) = 0.0;
  }

  std::vector<std::complex<double>> qr() {
    std::vector<double> wr(n_ + 1, 0.0), wi(n_ + 1, 0.0);
    double anorm = 0.0;
    for (int i = 1; i <= n_; ++i)
      for (int j = std::max(i - 1, 1); j <= n_; ++j) anorm += std::abs(at(i, j));
    int nn = n_;
    double t = 0.0;
    double p = 0, q = 0, r = 0, s = 0, w = 0, x = 0, y = 0, z = 0;
    while (nn >= 1) {
      int its = 0, l = 0;
      do {
        for (l = nn; l >= 2; --l) {
          s = std::abs(at(l - 1, l - 1)) + std::abs(at(l, l));
          if (s == 0.0) s = anorm;
          if (std::abs(at(l, l - 1)) + s == s) {
            at(l, l - 1) = 0.0;
            break;
          }
        }
        x = at(nn, nn);
        if (l == nn) {
          wr[nn] = x + t;
          wi[nn--] = 0.0;
        } else {
          y = at(nn - 1, nn - 1);
          w = at(nn, nn - 1) * at(nn - 1, nn);
          if (l == nn - 1) {
            p = 0.5 * (y - x);
            q = p * p + w;
            z = std::sqrt(std::abs(q));
            x += t;
            if (q >= 0.0) {
              z = p + (p >= 0.0 ? std::abs(z) : -std::abs(z));
              wr[nn - 1] = wr[nn] = x + z;
              if (z != 0.0) wr[nn] = x - w / z;
              wi[nn - 1] = wi[nn] = 0.0;
            } else {
              wr[nn - 1] = wr[nn] = x + p;
              wi[nn - 1] = -(wi[nn] = z);
            }
            nn -= 2;
          } else {
            if (its == kQrIterationsPerRoot)
              throw Error(ErrorCode::NoConvergence, "QR iteration budget exhausted");
            if (its == 10 || its == 20 || its == 40) {
              t += x;
              for (int i = 1; i <= nn; ++i) at(i, i) -= x;
              s = std::abs(at(nn, nn - 1)) + std::abs(at(nn - 1, nn - 2));
              y = x = 0.75 * s;
              w = -0.4375 * s * s;
            }
            ++its;
            int m;
            for (m = nn - 2; m >= l; --m) {
              z = at(m, m);
              r = x - z;
              s = y - z;
              p = (r * s - w) / at(m + 1, m) + at(m, m + 1);
              q = at(m + 1, m + 1) - z - r - s;
              r = at(m + 2, m + 1);
              s = std::abs(p) + std::abs(q) + std::abs(r);
              p /= s;
              q /= s;
              r /= s;
              if (m == l) break;
              double u = std::abs(at(m, m - 1)) * (std::abs(q) + std::abs(r));
              double v = std::abs(p) * (std::abs(at(m - 1, m - 1)) + std::abs(z) +
                                        std::abs(at(m + 1, m + 1)));
              if (u + v == v) break;
            }
            for (int i = m + 2; i <= nn; ++i) {
              at(i, i - 2) = 0.0;
              if (i != m + 2) at(i, i - 3) = 0.0;
            }
            for (int k = m; k <= nn - 1; ++k) {
              if (k != m) {
                p = at(k, k - 1);
                q = at(k + 1, k - 1);
                r = 0.0;
                if (k != nn - 1) r = at(k + 2, k - 1);
                if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0.0) {
                  p /= x;
                  q /= x;
                  r /= x;
                }
              }
              double root = std::sqrt(p * p + q * q + r * r);
              s = p >= 0.0 ? root : -root;
              if (s != 0.0) {
                if (k == m) {
                  if (l != m) at(k, k - 1) = -at(k, k - 1);
                } else {
                  at(k, k - 1) = -s * x;
                }
                p += s;
                x = p / s;
                y = q / s;
                z = r / s;
                q /= p;
                r /= p;
                for (int j = k; j <= nn; ++j) {
                  p = at(k, j) + q * at(k + 1, j);
                  if (k != nn - 1) {
                    p += r * at(k + 2, j);
                    at(k + 2, j) -= p * z;
                  }
                  at(k + 1, j) -= p * y;
                  at(k, j) -= p * x;
                }
                int mmin = nn < k + 3 ? nn : k + 3;
                for (int i = l; i <= mmin; ++i) {
                  p = x * at(i, k) + y * at(i, k + 1);
                  if (k != nn - 1) {
                    p += z * at(i, k + 2);
                    at(i, k + 2) -= p * r;
                  }
                  at(i, k + 1) -= p * q;
                  at(i, k) -= p;
                }
              }
            }
          }
        }
      } while (l < nn - 1);
    }
    std::vector<std::complex<double>> out;
    for (int i = 1; i <= n_; ++i) out.emplace_back(wr[i], wi[i]);
    return out;
  }

 private:
  int n_;
  std::vector<double> a_;
};

}  // namespace

std::vector<std::complex<double>> general_eigenvalues(const Matrix& a, const ToleranceConfig& cfg) {
  (void)cfg;
  require_square(a, "general_eigenvalues input");
  QrWorkspace ws(a);
  ws.balance();
  ws.hessenberg();
  auto ev = ws.qr();
  // pair up conjugates exactly so downstream code sees symmetric spectra
  for (auto& z : ev)
    if (z.imag() == 0.0) z = {z.real(), 0.0};
  std::sort(ev.begin(), ev.end(), [](const auto& u, const auto& v) {
    if (u.real() != v.real()) return u.real() > v.real();
    return u.imag() > v.imag();
  });
  return ev;
}

std::optional<std::vector<EigenCluster>> real_eigenspaces(const Matrix& c, const ToleranceConfig& cfg) {
  require_square(c, "real_eigenspaces input");
  const std::size_t n = c.rows();
  const double scale = std::max(1.0, c.frobenius());
  const double tau = 1e-6 * scale;
  auto ev = general_eigenvalues(c, cfg);
  std::vector<double> re;
  for (const auto& z : ev) {
    if (std::abs(z.imag()) > tau) return std::nullopt;
    re.push_back(z.real());
  }
  std::sort(re.begin(), re.end());
  std::vector<std::vector<double>> groups;
  for (double v : re) {
    if (groups.empty() || v - groups.back().back() > tau)
      groups.push_back({v});
    else
      groups.back().push_back(v);
  }
  std::vector<EigenCluster> out;
  for (const auto& g : groups) {
    double mean = std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(g.size());
    Matrix shifted = c - mean * Matrix::identity(n);
    SymEigen e = sym_eigen(sym_part(shifted.transpose() * shifted), cfg);
    std::size_t nullity = 0;
    for (double v : e.values)
      if (v <= tau * tau) ++nullity;
    if (nullity != g.size()) return std::nullopt;
    EigenCluster cl{mean, Matrix(n, nullity)};
    for (std::size_t k = 0; k < nullity; ++k)
      for (std::size_t i = 0; i < n; ++i) cl.basis(i, k) = e.vectors(i, n - nullity + k);
    out.push_back(std::move(cl));
  }
  return out;
}

Matrix congruence(const Matrix& a, const Matrix& s) {
  if (!a.square() || s.cols() != a.rows())
    throw Error(ErrorCode::DimensionMismatch, "congruence shapes differ");
  return s * a * s.transpose();
}

}  // namespace lmi
