#pragma once

#include <complex>
#include <vector>

#include "partitions.hpp"

namespace qtqft {

using Complex = std::complex<double>;

// A point of Spec QH*(Gr(r, r+s)): an r-element subset I of {1,...,r+s}
// together with the roots zeta^j (j in I) for odd r, zeta^(j+1/2) for even r,
// where zeta = exp(2*pi*i/(r+s)). The roots are r distinct (r+s)-th roots of
// (-1)^(r+1).
struct SpectralPoint {
  std::vector<int> subset;     // 1-based, strictly increasing
  std::vector<Complex> roots;  // same order as subset
};

// All binomial(r+s, r) subsets in lexicographic order.
std::vector<SpectralPoint> spectral_points(const BoxContext& ctx);

// Schur polynomial s_a at the roots of p, via the bialternant ratio
// det(x_j^(a_i + r - i)) / det(x_j^(r - i)).
Complex schur_eval(const Partition& a, const SpectralPoint& p);

// Product of squared chord lengths prod_{j<k} |x_j - x_k|^2 (1 when r = 1).
double vand(const SpectralPoint& p);

// a_I = (r+s)^r / Vand(zeta^I).
double coupling_a(const BoxContext& ctx, const SpectralPoint& p);

// Schur evaluations of every basis partition at every spectral point;
// result[basis index][point index].
std::vector<std::vector<Complex>> schur_table(const BoxContext& ctx);

// Verlinde number by the sine-product sum:
//   sum_{|I|=r} prod_{(j,k) in I x Ibar} |2 sin(pi (j-k)/(r+s))|^(g-1).
double verlinde_sine(const BoxContext& ctx, int g);

// Closed weighted invariant sum_I (a_I sigma_{s^r}(zeta^I))^(g-1)
// * sigma_{1^r}(zeta^I)^(-d); the imaginary part must be noise.
Complex closed_invariant_spectral(const BoxContext& ctx, int g, int d);

// Point count of the finite Quot scheme at e = r'*gamma:
//   (r+s)^(r(g-1)) * sum_I sigma_{1^r}(zeta^I)^((r'+s')gamma) / Vand^(g-1),
// i.e. the semisimple trace of (genus-addition)^(g-1) composed with
// (degree-lowering)^((r'+s')gamma).
double holla_spectral(const BoxContext& ctx, int g, int gamma);

// z^k for integer k (negative exponents use the reciprocal).
Complex complex_int_pow(Complex z, int k);

}  // namespace qtqft
