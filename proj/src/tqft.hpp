#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fusion.hpp"

namespace qtqft {

// Genus, bundle weight, and boundary arity of a weighted-TQFT map.
struct SurfaceSignature {
  int genus = 0;
  int weight = 0;
  int inputs = 0;
  int outputs = 0;

  bool operator==(const SurfaceSignature&) const = default;
};

// Sparse coefficient array of F(g|d)_m^n in the Schubert basis. Keys hold
// canonical basis indices; the output side is keyed AFTER complementation,
// i.e. entry(in, out) is the coefficient of sigma_{out_1} x ... x sigma_{out_n}
// in the image of sigma_{in_1} x ... x sigma_{in_m}.
class TqftTensor {
 public:
  struct Key {
    std::vector<int> in;
    std::vector<int> out;
    auto operator<=>(const Key&) const = default;
  };

  TqftTensor(BoxContext ctx, SurfaceSignature sig) : ctx_(ctx), sig_(sig) {}

  const BoxContext& ctx() const { return ctx_; }
  const SurfaceSignature& signature() const { return sig_; }
  const std::map<Key, LaurentInt>& entries() const& { return entries_; }
  void entries() && = delete;  // iterating a temporary's map would dangle

  LaurentInt entry(const std::vector<int>& in, const std::vector<int>& out) const;
  void add(Key key, const LaurentInt& value);

  // Tensors compare as linear maps: context, arities, entries. The genus and
  // weight labels record how a tensor was built and stay out of equality
  // (distinct cobordisms can realize the same map).
  bool operator==(const TqftTensor& other) const {
    return ctx_ == other.ctx_ && sig_.inputs == other.sig_.inputs &&
           sig_.outputs == other.sig_.outputs && entries_ == other.entries_;
  }

 private:
  BoxContext ctx_;
  SurfaceSignature sig_;
  std::map<Key, LaurentInt> entries_;
};

// Genus-addition element sum_a sigma_a * sigma_{a^c}.
QClass handle_element(const FusionRing& ring);

// Weight-d cylinder element: sigma_{1^r}^(-d) for d <= 0, sigma_s^d * q^(-d)
// for d > 0. Inverse pairs multiply to 1 exactly.
QClass degree_element(const FusionRing& ring, int d);

// counit( prod_i sigma_{a_i} * handle^g * degree_element(d) ). The q^e
// coefficient is the count of the corresponding Schubert intersection on the
// degree-e piece of the compiled Quot scheme; it can be nonzero only when
// sum |a_i| = r*d + (r+s)*e - r*s*(g-1).
LaurentInt integrate(const FusionRing& ring, int g, int d,
                     const std::vector<Partition>& insertions);

// Full tensor of F(g|d)_m^n; throws ResourceError when basis_count^(m+n)
// exceeds max_entries.
TqftTensor weighted_map(const FusionRing& ring, int g, int d, int m, int n,
                        std::uint64_t max_entries);

// Witten slice F(g)_m^n = F(g | s(g-1+n))_m^n.
TqftTensor witten_map(const FusionRing& ring, int g, int m, int n,
                      std::uint64_t max_entries);

// Concatenation of cobordisms: genus and weight add, arities chain.
TqftTensor compose(const TqftTensor& t2, const TqftTensor& t1);

// Image class of the compiled Quot scheme in G^N: weighted_map(g, d, 0, N).
TqftTensor eta_class(const FusionRing& ring, int g, int d, int N,
                     std::uint64_t max_entries);

// Multiplies slot k (1-based) of an output-only tensor by the class z.
TqftTensor slot_multiply(const FusionRing& ring, const TqftTensor& t, int slot,
                         const QClass& z);

// Integrates out slot k: keeps entries whose slot-k label is sigma_{s^r}
// and drops that slot.
TqftTensor slot_pushforward(const TqftTensor& t, int slot);

// Unique integer e with r*d + (r+s)*e = r*s*(g-1), when it exists.
std::optional<int> expected_q_exponent(const BoxContext& ctx, int g, int d);

// Shared extraction for closed-surface point counts: integrate(g, d, []) must
// be zero or a single monomial q^(e0) with a nonnegative coefficient.
struct PointCountResult {
  std::optional<int> exponent;  // e0, when solvable
  BigInt count = 0;
  std::string diagnostic;       // set when the result is forced to 0
};
PointCountResult extract_point_count(const FusionRing& ring, int g, int d);

// Verlinde number V_g = F(g | s(g-1))_0^0, exact.
BigInt verlinde_exact(const FusionRing& ring, int g);

// Point count of the finite Quot scheme for e = r'*gamma,
// d = -(r'+s')*gamma + s(g-1), exact.
BigInt holla_exact(const FusionRing& ring, int g, int gamma);

}  // namespace qtqft
