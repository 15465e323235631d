#include <algorithm>
#include <cmath>
#include <vector>

#include "ptm/linalg.hpp"

namespace ptm::linalg {

namespace {

constexpr int kMaxIterationsPerRoot = 60;

bool is_tridiagonal(const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if ((i > j + 1 || j > i + 1) && a(i, j) != 0.0) return false;
  return true;
}

// A tridiagonal spectrum depends only on the diagonal and the products
// p_k = b_k c_k of opposite off-diagonal entries. A zero product makes the
// matrix block triangular, so the blocks between zero products are solved on
// their own. Each block is rewritten in the diagonally similar canonical form
// with off-diagonals (sqrt|p|, sign(p) sqrt|p|): symmetric when every p > 0,
// and identical for A and A^T in all cases.
struct JacobiBlock {
  std::size_t begin = 0;
  Matrix canonical;
  bool symmetric = true;
};

std::vector<JacobiBlock> split_jacobi(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<JacobiBlock> blocks;
  std::size_t begin = 0;
  for (std::size_t end = 1; end <= n; ++end) {
    if (end < n && a(end - 1, end) * a(end, end - 1) != 0.0) continue;
    JacobiBlock b;
    b.begin = begin;
    b.canonical = Matrix(end - begin, end - begin);
    for (std::size_t k = begin; k < end; ++k) b.canonical(k - begin, k - begin) = a(k, k);
    for (std::size_t k = begin; k + 1 < end; ++k) {
      const double p = a(k, k + 1) * a(k + 1, k);
      const double r = std::sqrt(std::abs(p));
      b.canonical(k - begin, k + 1 - begin) = r;
      b.canonical(k + 1 - begin, k - begin) = p > 0.0 ? r : -r;
      if (p < 0.0) b.symmetric = false;
    }
    blocks.push_back(std::move(b));
    begin = end;
  }
  return blocks;
}

// One-based square work array; keeps the QR sweep below readable.
class Work {
 public:
  explicit Work(const Matrix& a) : n_(a.rows()), d_((n_ + 1) * (n_ + 1), 0.0) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) (*this)(int(i) + 1, int(j) + 1) = a(i, j);
  }
  double& operator()(int i, int j) { return d_[std::size_t(i) * (n_ + 1) + std::size_t(j)]; }
  int n() const { return int(n_); }

 private:
  std::size_t n_;
  std::vector<double> d_;
};

// Parlett-Reinsch balancing by powers of two.
void balance(Work& a) {
  constexpr double radix = 2.0;
  constexpr double sqrdx = radix * radix;
  const int n = a.n();
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 1; i <= n; ++i) {
      double r = 0.0, c = 0.0;
      for (int j = 1; j <= n; ++j)
        if (j != i) {
          c += std::abs(a(j, i));
          r += std::abs(a(i, j));
        }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
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
        for (int j = 1; j <= n; ++j) a(i, j) *= g;
        for (int j = 1; j <= n; ++j) a(j, i) *= f;
      }
    }
  }
}

// Householder reduction to upper Hessenberg form.
void hessenberg(Work& a) {
  const int n = a.n();
  std::vector<double> v(std::size_t(n) + 1);
  for (int k = 1; k <= n - 2; ++k) {
    double norm = 0.0;
    for (int i = k + 1; i <= n; ++i) norm += a(i, k) * a(i, k);
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    const double alpha = a(k + 1, k) > 0.0 ? -norm : norm;
    double vnorm2 = 0.0;
    for (int i = k + 1; i <= n; ++i) {
      v[std::size_t(i)] = a(i, k) - (i == k + 1 ? alpha : 0.0);
      vnorm2 += v[std::size_t(i)] * v[std::size_t(i)];
    }
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;
    // Left: rows k+1..n.
    for (int j = k; j <= n; ++j) {
      double s = 0.0;
      for (int i = k + 1; i <= n; ++i) s += v[std::size_t(i)] * a(i, j);
      s *= beta;
      for (int i = k + 1; i <= n; ++i) a(i, j) -= s * v[std::size_t(i)];
    }
    // Right: columns k+1..n.
    for (int i = 1; i <= n; ++i) {
      double s = 0.0;
      for (int j = k + 1; j <= n; ++j) s += a(i, j) * v[std::size_t(j)];
      s *= beta;
      for (int j = k + 1; j <= n; ++j) a(i, j) -= s * v[std::size_t(j)];
    }
    a(k + 1, k) = alpha;
    for (int i = k + 2; i <= n; ++i) a(i, k) = 0.0;
  }
}

// Francis double-shift QR on an upper Hessenberg matrix (EISPACK hqr lineage).
void hqr(Work& a, std::vector<double>& wr, std::vector<double>& wi) {
  const int n = a.n();
  wr.assign(std::size_t(n) + 1, 0.0);
  wi.assign(std::size_t(n) + 1, 0.0);

  double anorm = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += std::abs(a(i, j));

  int nn = n;
  double t = 0.0;
  double p = 0.0, q = 0.0, r = 0.0, s = 0.0, w = 0.0, x = 0.0, y = 0.0, z = 0.0;
  while (nn >= 1) {
    int its = 0;
    int l;
    do {
      for (l = nn; l >= 2; --l) {
        s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(a(l, l - 1)) + s == s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      x = a(nn, nn);
      if (l == nn) {
        wr[std::size_t(nn)] = x + t;
        wi[std::size_t(nn)] = 0.0;
        --nn;
      } else {
        y = a(nn - 1, nn - 1);
        w = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          p = 0.5 * (y - x);
          q = p * p + w;
          z = std::sqrt(std::abs(q));
          x += t;
          const auto lo = std::size_t(nn - 1);
          const auto hi = std::size_t(nn);
          if (q >= 0.0) {
            z = p + std::copysign(z, p);
            wr[lo] = wr[hi] = x + z;
            if (z != 0.0) wr[hi] = x - w / z;
            wi[lo] = wi[hi] = 0.0;
          } else {
            wr[lo] = wr[hi] = x + p;
            wi[hi] = z;
            wi[lo] = -z;
          }
          nn -= 2;
        } else {
          if (its == kMaxIterationsPerRoot)
            throw NumericalError("eig_general: QR iteration did not converge");
          if (its == 10 || its == 20 || its == 40) {
            // Exceptional shift.
            t += x;
            for (int i = 1; i <= nn; ++i) a(i, i) -= x;
            s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          int m;
          for (m = nn - 2; m >= l; --m) {
            z = a(m, m);
            r = x - z;
            s = y - z;
            p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - r - s;
            r = a(m + 2, m + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v =
                std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
            if (u + v == v) break;
          }
          for (int i = m + 2; i <= nn; ++i) {
            a(i, i - 2) = 0.0;
            if (i != m + 2) a(i, i - 3) = 0.0;
          }
          for (int k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = 0.0;
              if (k != nn - 1) r = a(k + 2, k - 1);
              if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            if ((s = std::copysign(std::sqrt(p * p + q * q + r * r), p)) != 0.0) {
              if (k == m) {
                if (l != m) a(k, k - 1) = -a(k, k - 1);
              } else {
                a(k, k - 1) = -s * x;
              }
              p += s;
              x = p / s;
              y = q / s;
              z = r / s;
              q /= p;
              r /= p;
              for (int j = k; j <= nn; ++j) {
                p = a(k, j) + q * a(k + 1, j);
                if (k != nn - 1) {
                  p += r * a(k + 2, j);
                  a(k + 2, j) -= p * z;
                }
                a(k + 1, j) -= p * y;
                a(k, j) -= p * x;
              }
              const int mmin = nn < k + 3 ? nn : k + 3;
              for (int i = l; i <= mmin; ++i) {
                p = x * a(i, k) + y * a(i, k + 1);
                if (k != nn - 1) {
                  p += z * a(i, k + 2);
                  a(i, k + 2) -= p * r;
                }
                a(i, k + 1) -= p * q;
                a(i, k) -= p;
              }
            }
          }
        }
      }
    } while (l < nn - 1);
  }
}

void sort_ascending(std::vector<Complex>& values) {
  std::stable_sort(values.begin(), values.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
}

}  // namespace

GeneralEigen eig_general(const Matrix& a) {
  if (!a.is_square() || a.rows() == 0)
    throw ArgumentError("eig_general: expected a non-empty square matrix");
  if (!all_finite(a)) throw ArgumentError("eig_general: non-finite entry");

  GeneralEigen out;
  out.values.reserve(a.rows());
  auto dense = [&out](const Matrix& m) {
    Work w(m);
    balance(w);
    hessenberg(w);
    std::vector<double> wr, wi;
    hqr(w, wr, wi);
    for (std::size_t i = 1; i <= m.rows(); ++i) out.values.emplace_back(wr[i], wi[i]);
  };
  if (is_tridiagonal(a)) {
    for (const JacobiBlock& b : split_jacobi(a)) {
      if (b.symmetric) {
        const SymmetricEigen eig = eig_symmetric(b.canonical);
        out.values.insert(out.values.end(), eig.values.begin(), eig.values.end());
      } else {
        dense(b.canonical);
      }
    }
  } else {
    dense(a);
  }
  sort_ascending(out.values);
  return out;
}

}  // namespace ptm::linalg
