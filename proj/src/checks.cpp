#include "checks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "errors.hpp"
#include "spectrum.hpp"
#include "tqft.hpp"

namespace qtqft {

namespace {

std::string ctx_tag(const BoxContext& ctx) {
  return "[r=" + std::to_string(ctx.r) + ",s=" + std::to_string(ctx.s) + "]";
}

bool next_tuple_base(std::vector<int>& tuple, int base) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (++tuple[i] < base) return true;
    tuple[i] = 0;
  }
  return false;
}

struct Grids {
  std::vector<BoxContext> fusion;      // ring-level exact invariants
  std::vector<BoxContext> spectral;    // float-side identities
  std::vector<BoxContext> eigen;       // eigenvector property (needs tables)
  std::vector<BoxContext> trio;        // weighted-TQFT grids
  std::vector<BoxContext> degeneration;
  std::vector<BoxContext> verlinde;
  int verlinde_gmax = 3;
  int holla_gmax = 2;
  int monomial_gmax = 2;
  int monomial_dspan = 1;  // |d| <= dspan * (r+s)
  int gluing_gmax = 1;
  int gluing_dmax = 1;
  int degeneration_arity = 2;
  int periodicity_gmax = 2;
  int closed_gmax = 2;
  int closed_dspan = 1;
};

std::vector<BoxContext> boxes_with_n_up_to(int nmax) {
  std::vector<BoxContext> out;
  for (int n = 2; n <= nmax; ++n) {
    for (int r = 1; r < n; ++r) out.emplace_back(r, n - r);
  }
  return out;
}

void add_unique(std::vector<BoxContext>& list, const BoxContext& ctx) {
  if (std::find(list.begin(), list.end(), ctx) == list.end()) list.push_back(ctx);
}

Grids make_grids(CheckSuite suite, const BoxContext& configured) {
  Grids g;
  g.trio = {BoxContext(1, 1), BoxContext(1, 2), BoxContext(2, 2)};
  g.degeneration = {BoxContext(1, 1), BoxContext(2, 2)};
  if (suite == CheckSuite::All) {
    g.fusion = boxes_with_n_up_to(6);
    g.spectral = boxes_with_n_up_to(7);
    g.eigen = boxes_with_n_up_to(7);
    g.verlinde = {BoxContext(1, 1), BoxContext(1, 2), BoxContext(2, 1),
                  BoxContext(2, 2), BoxContext(1, 3), BoxContext(2, 3),
                  BoxContext(3, 3)};
    g.verlinde_gmax = 5;
    g.holla_gmax = 3;
    g.monomial_gmax = 4;
    g.monomial_dspan = 2;
    g.gluing_gmax = 2;
    g.gluing_dmax = 2;
    g.degeneration_arity = 3;
    g.periodicity_gmax = 3;
    g.closed_gmax = 4;
    g.closed_dspan = 2;
  } else {
    g.fusion = g.trio;
    g.spectral = boxes_with_n_up_to(5);
    g.eigen = g.trio;
    g.verlinde = {BoxContext(1, 1), BoxContext(1, 2), BoxContext(2, 1),
                  BoxContext(2, 2)};
  }
  if (configured.basis_count() <= 35) {
    add_unique(g.fusion, configured);
    add_unique(g.eigen, configured);
  }
  if (configured.basis_count() <= 70) add_unique(g.spectral, configured);
  return g;
}

class Runner {
 public:
  Runner(std::uint64_t max_entries) : max_entries_(max_entries) {}

  FusionRing& ring(const BoxContext& ctx) {
    auto key = std::make_pair(ctx.r, ctx.s);
    auto it = rings_.find(key);
    if (it == rings_.end()) {
      it = rings_.emplace(key, std::make_unique<FusionRing>(ctx, max_entries_)).first;
    }
    return *it->second;
  }

  void exact(const std::string& name, long long violations, const std::string& detail) {
    results_.push_back({name, violations == 0,
                        static_cast<double>(violations), 0.0, detail});
  }

  void within(const std::string& name, double deviation, double tolerance,
              const std::string& detail) {
    results_.push_back({name, deviation <= tolerance, deviation, tolerance, detail});
  }

  std::uint64_t max_entries() const { return max_entries_; }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::uint64_t max_entries_;
  std::map<std::pair<int, int>, std::unique_ptr<FusionRing>> rings_;
  std::vector<CheckResult> results_;
};

// ---------------------------------------------------------------------------
// partitions

void check_partitions(Runner& run, const BoxContext& ctx) {
  const auto basis = enumerate_partitions(ctx);
  long long bad_count =
      (basis.size() == ctx.basis_count()) ? 0 : 1;
  std::size_t distinct = std::set<Partition>(basis.begin(), basis.end()).size();
  if (distinct != basis.size()) ++bad_count;
  run.exact("partitions/count" + ctx_tag(ctx), bad_count,
            std::to_string(basis.size()) + " of " +
                std::to_string(ctx.basis_count()));

  long long bad_involution = 0;
  long long bad_size = 0;
  for (const Partition& a : basis) {
    const Partition c = complement(ctx, a);
    if (complement(ctx, c) != a) ++bad_involution;
    if (partition_size(a) + partition_size(c) != ctx.r * ctx.s) ++bad_size;
  }
  run.exact("partitions/complement-involution" + ctx_tag(ctx), bad_involution, "");
  run.exact("partitions/size-complement" + ctx_tag(ctx), bad_size, "");
}

// ---------------------------------------------------------------------------
// fusion

void check_ring_axioms(Runner& run, const BoxContext& ctx) {
  FusionRing& ring = run.ring(ctx);
  const int count = ring.basis_size();

  long long bad_unit = 0;
  for (int b = 0; b < count; ++b) {
    if (!(ring.basis_product(ring.unit_index(), b) ==
          QClass::basis(ctx, ring.basis()[b]))) {
      ++bad_unit;
    }
  }
  run.exact("fusion/unit-law" + ctx_tag(ctx), bad_unit, "");

  long long bad_grading = 0;
  long long bad_symmetry = 0;
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      const QClass prod = ring.basis_product(a, b);
      if (!(prod == ring.basis_product(b, a))) ++bad_symmetry;
      const int total = partition_size(ring.basis()[a]) +
                        partition_size(ring.basis()[b]);
      for (const auto& [c, coeff] : prod.coeffs()) {
        for (const auto& [exp, value] : coeff.terms()) {
          if (partition_size(c) + exp * ctx.n() != total) ++bad_grading;
        }
      }
    }
  }
  run.exact("fusion/grading" + ctx_tag(ctx), bad_grading, "");
  run.exact("fusion/commutativity" + ctx_tag(ctx), bad_symmetry, "");

  long long bad_assoc = 0;
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      const QClass ab = ring.basis_product(a, b);
      for (int c = 0; c < count; ++c) {
        const QClass left = ring.multiply_basis(ab, c);
        const QClass right = ring.product(QClass::basis(ctx, ring.basis()[a]),
                                          ring.basis_product(b, c));
        if (!(left == right)) ++bad_assoc;
      }
    }
  }
  run.exact("fusion/associativity" + ctx_tag(ctx), bad_assoc,
            std::to_string(count) + "^3 triples");
}

void check_special_identities(Runner& run, const BoxContext& ctx) {
  FusionRing& ring = run.ring(ctx);
  const Partition column(ctx.r, 1);
  Partition special(ctx.r, 0);
  special[0] = ctx.s;

  const QClass col_class = QClass::basis(ctx, column);
  const QClass lhs = ring.product(col_class, QClass::basis(ctx, special));
  const QClass q_unit = QClass::unit(ctx).shifted(1);
  long long bad = lhs == q_unit ? 0 : 1;
  run.exact("fusion/column-times-row" + ctx_tag(ctx), bad,
            "sigma_{1^r} * sigma_s = q");

  const QClass pow = ring.power(col_class, ctx.n());
  const QClass qr_unit = QClass::unit(ctx).shifted(ctx.r);
  run.exact("fusion/column-power" + ctx_tag(ctx), pow == qr_unit ? 0 : 1,
            "sigma_{1^r}^(r+s) = q^r");

  long long bad_shift = 0;
  for (const Partition& a : ring.basis()) {
    const QClass got = ring.product(col_class, QClass::basis(ctx, a));
    QClass want(ctx);
    if (a[0] < ctx.s) {
      Partition up(a);
      for (int& part : up) ++part;
      want.add(up, LaurentInt::one());
    } else {
      Partition down(a.begin() + 1, a.end());
      down.push_back(0);
      want.add(down, LaurentInt::monomial(1, 1));
    }
    if (!(got == want)) ++bad_shift;
  }
  run.exact("fusion/column-shift-rule" + ctx_tag(ctx), bad_shift, "");
}

void check_spectral_reconstruction(Runner& run, const BoxContext& ctx) {
  FusionRing& ring = run.ring(ctx);
  const auto evals = schur_table(ctx);
  const auto points = spectral_points(ctx);
  std::vector<double> couplings;
  couplings.reserve(points.size());
  for (const auto& p : points) couplings.push_back(coupling_a(ctx, p));

  const int count = ring.basis_size();
  double worst = 0.0;
  for (int a = 0; a < count; ++a) {
    for (int b = a; b < count; ++b) {
      const QClass prod = ring.basis_product(a, b);
      for (int c = 0; c < count; ++c) {
        Complex spectral = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
          spectral += evals[a][i] * evals[b][i] * std::conj(evals[c][i]) /
                      couplings[i];
        }
        const double exact = prod.coeff(ring.basis()[c]).at_one_double();
        worst = std::max(worst, std::abs(spectral - exact));
      }
    }
  }
  run.within("fusion/spectral-reconstruction" + ctx_tag(ctx), worst, 1e-8, "");
}

// ---------------------------------------------------------------------------
// spectrum

void check_spectral_identities(Runner& run, const BoxContext& ctx) {
  const auto points = spectral_points(ctx);
  const auto evals = schur_table(ctx);
  const int n = ctx.n();
  const double power = std::pow(static_cast<double>(n), ctx.r);

  double worst_orth = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      Complex sum = 0.0;
      for (std::size_t a = 0; a < evals.size(); ++a) {
        sum += std::conj(evals[a][i]) * evals[a][j];
      }
      const Complex expect = (i == j) ? Complex(power / vand(points[i])) : Complex(0.0);
      worst_orth = std::max(worst_orth, std::abs(sum - expect));
    }
  }
  run.within("spectrum/orthogonality" + ctx_tag(ctx), worst_orth, 1e-8, "");

  double worst_sine = 0.0;
  for (const auto& p : points) {
    std::vector<bool> in_subset(n + 1, false);
    for (int j : p.subset) in_subset[j] = true;
    double sines = 1.0;
    for (int j : p.subset) {
      for (int k = 1; k <= n; ++k) {
        if (!in_subset[k]) {
          sines *= std::abs(2.0 * std::sin(std::numbers::pi * (j - k) / n));
        }
      }
    }
    worst_sine = std::max(worst_sine, std::abs(power - vand(p) * sines));
  }
  run.within("spectrum/sine-identity" + ctx_tag(ctx), worst_sine, 1e-8, "");

  double root_product = 1.0;
  for (int k = 1; k < n; ++k) {
    root_product *= 2.0 * std::sin(std::numbers::pi * k / n);
  }
  run.within("spectrum/root-count-identity[n=" + std::to_string(n) + "]",
             std::abs(n - root_product), 1e-10, "");

  const Partition full(ctx.r, ctx.s);
  const Partition column(ctx.r, 1);
  double worst_point = 0.0;
  for (const auto& p : points) {
    const Complex top = schur_eval(full, p);
    const Complex col = schur_eval(column, p);
    worst_point = std::max(worst_point, std::abs(std::abs(top) - 1.0));
    worst_point = std::max(worst_point,
                           std::abs(top - complex_int_pow(col, ctx.s)));
  }
  run.within("spectrum/point-class-values" + ctx_tag(ctx), worst_point, 1e-10,
             "|sigma_{s^r}| = 1 and sigma_{s^r} = sigma_{1^r}^s");
}

void check_eigenvectors(Runner& run, const BoxContext& ctx) {
  FusionRing& ring = run.ring(ctx);
  const auto evals = schur_table(ctx);
  const auto points = spectral_points(ctx);
  const int count = ring.basis_size();

  // Dense q=1 multiplication matrices from the exact table.
  double worst = 0.0;
  for (int a = 0; a < count; ++a) {
    std::vector<std::vector<double>> matrix(count, std::vector<double>(count, 0.0));
    for (int b = 0; b < count; ++b) {
      const QClass prod = ring.basis_product(a, b);
      for (const auto& [c, coeff] : prod.coeffs()) {
        matrix[ring.index_of(c)][b] = coeff.at_one_double();
      }
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (int c = 0; c < count; ++c) {
        Complex applied = 0.0;
        for (int b = 0; b < count; ++b) {
          if (matrix[c][b] != 0.0) applied += matrix[c][b] * std::conj(evals[b][i]);
        }
        const Complex expect = evals[a][i] * std::conj(evals[c][i]);
        worst = std::max(worst, std::abs(applied - expect));
      }
    }
  }
  run.within("spectrum/eigenvector-property" + ctx_tag(ctx), worst, 1e-8, "");
}

void check_verlinde_symmetry(Runner& run, const BoxContext& ctx, int gmax) {
  if (ctx.r == ctx.s) return;
  const BoxContext swapped(ctx.s, ctx.r);
  double worst = 0.0;
  for (int g = 0; g <= gmax; ++g) {
    const double lhs = verlinde_sine(ctx, g);
    const double rhs = verlinde_sine(swapped, g);
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
  }
  run.within("spectrum/verlinde-symmetry" + ctx_tag(ctx), worst, 1e-6, "");
}

// ---------------------------------------------------------------------------
// tqft

void check_monomial_property(Runner& run, const BoxContext& ctx, int gmax,
                             int dspan) {
  FusionRing& ring = run.ring(ctx);
  long long bad = 0;
  for (int g = 0; g <= gmax; ++g) {
    for (int d = -dspan * ctx.n(); d <= dspan * ctx.n(); ++d) {
      const LaurentInt value = integrate(ring, g, d, {});
      const auto e0 = expected_q_exponent(ctx, g, d);
      if (value.is_zero()) continue;
      if (!value.is_monomial() || !e0 || value.min_exponent() != *e0) ++bad;
    }
  }
  run.exact("tqft/monomial-property" + ctx_tag(ctx), bad, "");
}

void check_gluing(Runner& run, const BoxContext& ctx, int gmax, int dmax) {
  FusionRing& ring = run.ring(ctx);
  std::map<std::tuple<int, int, int, int>, TqftTensor> memo;
  auto wmap = [&](int g, int d, int m, int n) -> const TqftTensor& {
    auto key = std::make_tuple(g, d, m, n);
    auto it = memo.find(key);
    if (it == memo.end()) {
      it = memo.emplace(key, weighted_map(ring, g, d, m, n, run.max_entries()))
               .first;
    }
    return it->second;
  };
  long long bad = 0;
  for (int g1 = 0; g1 <= gmax; ++g1) {
    for (int g2 = 0; g2 <= gmax; ++g2) {
      for (int d1 = -dmax; d1 <= dmax; ++d1) {
        for (int d2 = -dmax; d2 <= dmax; ++d2) {
          for (int m = 0; m <= 1; ++m) {
            for (int n = 0; n <= 1; ++n) {
              const TqftTensor composed = compose(wmap(g2, d2, 1, n),
                                                  wmap(g1, d1, m, 1));
              if (!(composed == wmap(g1 + g2, d1 + d2, m, n))) ++bad;
            }
          }
        }
      }
    }
  }
  run.exact("tqft/gluing" + ctx_tag(ctx), bad, "");
}

void check_degeneration(Runner& run, const BoxContext& ctx, int max_arity) {
  FusionRing& ring = run.ring(ctx);
  const int count = ring.basis_size();

  std::map<std::tuple<int, int, std::vector<int>>, LaurentInt> memo;
  auto value = [&](int g, int d, std::vector<int> labels) -> const LaurentInt& {
    std::sort(labels.begin(), labels.end());
    auto key = std::make_tuple(g, d, labels);
    auto it = memo.find(key);
    if (it == memo.end()) {
      std::vector<Partition> insertions;
      insertions.reserve(labels.size());
      for (int i : labels) insertions.push_back(ring.basis()[i]);
      it = memo.emplace(key, integrate(ring, g, d, insertions)).first;
    }
    return it->second;
  };

  long long bad = 0;
  for (int arity1 = 0; arity1 <= max_arity; ++arity1) {
    for (int arity2 = 0; arity1 + arity2 <= max_arity; ++arity2) {
      std::vector<int> tuple(arity1 + arity2, 0);
      bool more = true;
      while (more) {
        const std::vector<int> first(tuple.begin(), tuple.begin() + arity1);
        const std::vector<int> second(tuple.begin() + arity1, tuple.end());
        for (int g1 = 0; g1 <= 1; ++g1) {
          for (int g2 = 0; g2 <= 1; ++g2) {
            for (int d1 = -1; d1 <= 1; ++d1) {
              for (int d2 = -1; d2 <= 1; ++d2) {
                std::vector<int> joined = first;
                joined.insert(joined.end(), second.begin(), second.end());
                const LaurentInt lhs = value(g1 + g2, d1 + d2, joined);
                LaurentInt rhs;
                for (int b = 0; b < count; ++b) {
                  std::vector<int> left = first;
                  left.push_back(b);
                  std::vector<int> right = second;
                  right.push_back(ring.complement_index(b));
                  rhs += value(g1, d1, left) * value(g2, d2, right);
                }
                if (!(lhs == rhs)) ++bad;
              }
            }
          }
        }
        more = !tuple.empty() && next_tuple_base(tuple, count);
      }
    }
  }
  run.exact("tqft/degeneration-sum" + ctx_tag(ctx), bad, "");
}

void check_periodicity(Runner& run, const BoxContext& ctx, int gmax) {
  FusionRing& ring = run.ring(ctx);
  long long bad = 0;
  std::vector<std::vector<Partition>> insertion_sets;
  insertion_sets.push_back({});
  for (const Partition& a : ring.basis()) insertion_sets.push_back({a});
  for (int g = 0; g <= gmax; ++g) {
    for (int d = -ctx.n(); d <= ctx.n(); ++d) {
      for (const auto& insertions : insertion_sets) {
        const LaurentInt lhs = integrate(ring, g, d + ctx.n(), insertions);
        const LaurentInt rhs = integrate(ring, g, d, insertions).shifted(-ctx.r);
        if (!(lhs == rhs)) ++bad;
      }
    }
  }
  run.exact("tqft/periodicity" + ctx_tag(ctx), bad, "");
}

void check_reconciliation(Runner& run, const BoxContext& ctx, int gmax) {
  FusionRing& ring = run.ring(ctx);
  double worst = 0.0;
  for (int g = 1; g <= gmax; ++g) {
    const BigInt exact = verlinde_exact(ring, g);
    const double sine = verlinde_sine(ctx, g);
    const double scale = std::max(1.0, std::abs(exact.get_d()));
    worst = std::max(worst, std::abs(exact.get_d() - sine) / scale);

    // Witten trace: sum_I a_I^(g-1).
    double trace = 0.0;
    for (const auto& p : spectral_points(ctx)) {
      trace += std::pow(coupling_a(ctx, p), g - 1);
    }
    worst = std::max(worst, std::abs(exact.get_d() - trace) / scale);
  }
  run.within("tqft/verlinde-reconciliation" + ctx_tag(ctx), worst, 1e-4,
             "exact vs sine formula vs semisimple trace, g <= " +
                 std::to_string(gmax));
}

void check_holla(Runner& run, const BoxContext& ctx, int gmax) {
  FusionRing& ring = run.ring(ctx);
  const int gcd_rs = std::gcd(ctx.r, ctx.s);
  double worst = 0.0;
  long long bad = 0;
  for (int g = 2; g <= gmax; ++g) {
    for (int gamma = 0; gamma < gcd_rs; ++gamma) {
      const BigInt exact = holla_exact(ring, g, gamma);
      const double spectral = holla_spectral(ctx, g, gamma);
      const double scale = std::max(1.0, std::abs(exact.get_d()));
      worst = std::max(worst, std::abs(exact.get_d() - spectral) / scale);
      if (exact < 0) ++bad;
    }
  }
  run.within("tqft/holla-reconciliation" + ctx_tag(ctx),
             worst + static_cast<double>(bad), 1e-4, "");
}

void check_closed_invariants(Runner& run, const BoxContext& ctx, int gmax,
                             int dspan) {
  FusionRing& ring = run.ring(ctx);
  double worst = 0.0;
  for (int g = 1; g <= gmax; ++g) {
    for (int d = -dspan * ctx.n(); d <= dspan * ctx.n(); ++d) {
      const double exact = integrate(ring, g, d, {}).at_one_double();
      const Complex spectral = closed_invariant_spectral(ctx, g, d);
      const double scale = std::max(1.0, std::abs(exact));
      worst = std::max(worst, std::abs(spectral - exact) / scale);
    }
  }
  run.within("tqft/closed-invariants" + ctx_tag(ctx), worst, 1e-4, "");
}

}  // namespace

std::vector<CheckResult> run_check_suite(CheckSuite suite,
                                         const BoxContext& configured,
                                         std::uint64_t max_entries) {
  const Grids grids = make_grids(suite, configured);
  Runner run(max_entries);

  for (const BoxContext& ctx : grids.fusion) check_partitions(run, ctx);
  for (const BoxContext& ctx : grids.fusion) {
    check_ring_axioms(run, ctx);
    check_special_identities(run, ctx);
    check_spectral_reconstruction(run, ctx);
  }
  for (const BoxContext& ctx : grids.spectral) {
    check_spectral_identities(run, ctx);
    check_verlinde_symmetry(run, ctx, suite == CheckSuite::All ? 3 : 2);
  }
  for (const BoxContext& ctx : grids.eigen) check_eigenvectors(run, ctx);
  for (const BoxContext& ctx : grids.trio) {
    check_monomial_property(run, ctx, grids.monomial_gmax, grids.monomial_dspan);
    check_gluing(run, ctx, grids.gluing_gmax, grids.gluing_dmax);
    check_periodicity(run, ctx, grids.periodicity_gmax);
    check_closed_invariants(run, ctx, grids.closed_gmax, grids.closed_dspan);
  }
  for (const BoxContext& ctx : grids.degeneration) {
    check_degeneration(run, ctx, grids.degeneration_arity);
  }
  for (const BoxContext& ctx : grids.verlinde) {
    check_reconciliation(run, ctx, grids.verlinde_gmax);
  }
  check_holla(run, BoxContext(2, 2), grids.holla_gmax);
  if (suite == CheckSuite::All) check_holla(run, BoxContext(3, 3), grids.holla_gmax);

  return run.take();
}

}  // namespace qtqft
