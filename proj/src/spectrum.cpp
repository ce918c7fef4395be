#include "spectrum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "errors.hpp"

namespace qtqft {

namespace {

constexpr double kPi = std::numbers::pi;

// Determinant of a small complex matrix by Gaussian elimination with partial
// pivoting; fine for the unit-modulus nodes used here.
Complex determinant(std::vector<std::vector<Complex>> m) {
  const int n = static_cast<int>(m.size());
  Complex det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row) {
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    }
    if (std::abs(m[pivot][col]) == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int row = col + 1; row < n; ++row) {
      const Complex f = m[row][col] / m[col][col];
      for (int k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return det;
}

void subsets_rec(int next, int n, int r, std::vector<int>& current,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == r) {
    out.push_back(current);
    return;
  }
  const int needed = r - static_cast<int>(current.size());
  for (int v = next; v + needed - 1 <= n; ++v) {
    current.push_back(v);
    subsets_rec(v + 1, n, r, current, out);
    current.pop_back();
  }
}

}  // namespace

Complex complex_int_pow(Complex z, int k) {
  if (k < 0) return complex_int_pow(1.0 / z, -k);
  Complex out = 1.0;
  while (k > 0) {
    if (k & 1) out *= z;
    z *= z;
    k >>= 1;
  }
  return out;
}

std::vector<SpectralPoint> spectral_points(const BoxContext& ctx) {
  const int n = ctx.n();
  std::vector<std::vector<int>> subsets;
  std::vector<int> current;
  subsets_rec(1, n, ctx.r, current, subsets);

  const double shift = (ctx.r % 2 == 0) ? 0.5 : 0.0;
  std::vector<SpectralPoint> out;
  out.reserve(subsets.size());
  for (auto& subset : subsets) {
    SpectralPoint p;
    p.roots.reserve(subset.size());
    for (int j : subset) {
      const double angle = 2.0 * kPi * (j + shift) / n;
      p.roots.push_back(std::polar(1.0, angle));
    }
    p.subset = std::move(subset);
    out.push_back(std::move(p));
  }
  return out;
}

Complex schur_eval(const Partition& a, const SpectralPoint& p) {
  const int r = static_cast<int>(p.roots.size());
  if (static_cast<int>(a.size()) != r) {
    throw ArgumentError("partition length does not match spectral point rank");
  }
  if (r == 1) return complex_int_pow(p.roots[0], a[0]);

  std::vector<std::vector<Complex>> num(r, std::vector<Complex>(r));
  std::vector<std::vector<Complex>> den(r, std::vector<Complex>(r));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      num[i][j] = complex_int_pow(p.roots[j], a[i] + r - 1 - i);
      den[i][j] = complex_int_pow(p.roots[j], r - 1 - i);
    }
  }
  return determinant(std::move(num)) / determinant(std::move(den));
}

double vand(const SpectralPoint& p) {
  const int r = static_cast<int>(p.roots.size());
  if (r == 1) return 1.0;
  double out = 1.0;
  for (int j = 0; j < r; ++j) {
    for (int k = j + 1; k < r; ++k) {
      out *= std::norm(p.roots[j] - p.roots[k]);
    }
  }
  return out;
}

double coupling_a(const BoxContext& ctx, const SpectralPoint& p) {
  return std::pow(static_cast<double>(ctx.n()), ctx.r) / vand(p);
}

std::vector<std::vector<Complex>> schur_table(const BoxContext& ctx) {
  const std::vector<Partition> basis = enumerate_partitions(ctx);
  const std::vector<SpectralPoint> points = spectral_points(ctx);
  std::vector<std::vector<Complex>> out(basis.size(),
                                        std::vector<Complex>(points.size()));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      out[a][i] = schur_eval(basis[a], points[i]);
    }
  }
  return out;
}

double verlinde_sine(const BoxContext& ctx, int g) {
  if (g < 0) throw ArgumentError("genus must be nonnegative");
  const int n = ctx.n();
  double total = 0.0;
  for (const SpectralPoint& p : spectral_points(ctx)) {
    std::vector<bool> in_subset(n + 1, false);
    for (int j : p.subset) in_subset[j] = true;
    double sines = 1.0;
    for (int j : p.subset) {
      for (int k = 1; k <= n; ++k) {
        if (in_subset[k]) continue;
        sines *= std::abs(2.0 * std::sin(kPi * (j - k) / n));
      }
    }
    total += std::pow(sines, g - 1);
  }
  return total;
}

Complex closed_invariant_spectral(const BoxContext& ctx, int g, int d) {
  if (g < 1) throw ArgumentError("closed invariant requires genus >= 1");
  const Partition full(ctx.r, ctx.s);
  const Partition column(ctx.r, 1);
  Complex total = 0.0;
  for (const SpectralPoint& p : spectral_points(ctx)) {
    const Complex eigen = coupling_a(ctx, p) * schur_eval(full, p);
    total += complex_int_pow(eigen, g - 1) *
             complex_int_pow(schur_eval(column, p), -d);
  }
  return total;
}

double holla_spectral(const BoxContext& ctx, int g, int gamma) {
  if (g < 1) throw ArgumentError("holla count requires genus >= 1");
  const int a = std::gcd(ctx.r, ctx.s);
  if (gamma < 0 || gamma >= a) {
    throw ArgumentError("gamma=" + std::to_string(gamma) +
                        " outside [0," + std::to_string(a) + ")");
  }
  const int rp = ctx.r / a;
  const int sp = ctx.s / a;
  const Partition column(ctx.r, 1);
  // Trace of the (g-1)th power of the genus-addition operator composed with
  // the (r'+s')*gamma-th power of the degree-lowering operator: the
  // degree-lowering eigenvalue sigma_{1^r}(zeta^I) enters once, while
  // a_I = (r+s)^r / Vand is raised to g-1.
  Complex total = 0.0;
  for (const SpectralPoint& p : spectral_points(ctx)) {
    total += complex_int_pow(schur_eval(column, p), (rp + sp) * gamma) /
             std::pow(vand(p), g - 1);
  }
  total *= std::pow(static_cast<double>(ctx.n()), ctx.r * (g - 1));
  if (std::abs(total.imag()) > 1e-6 * std::max(1.0, std::abs(total.real()))) {
    throw IntegrityError("holla spectral sum has non-negligible imaginary part");
  }
  return total.real();
}

}  // namespace qtqft
