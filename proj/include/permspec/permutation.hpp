#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permspec/rational.hpp"
#include "permspec/rng.hpp"

namespace permspec::permutations {

/// Bijection of {0..n-1}, stored as the image array. Immutable after
/// construction; all operations return fresh values.
class Permutation {
 public:
  /// Validates that `image` is a bijection.
  explicit Permutation(std::vector<std::int64_t> image);

  static Permutation identity(std::int64_t n);

  std::int64_t size() const { return static_cast<std::int64_t>(image_.size()); }
  std::int64_t operator()(std::int64_t i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int64_t>& image() const { return image_; }

  /// (this o other): i -> this(other(i)). Dimensions must match.
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  /// p^k for any integer k, via per-cycle exponent reduction (never repeated
  /// composition, so large k costs the same as small k).
  Permutation power(std::int64_t k) const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.image_ == b.image_;
  }

 private:
  std::vector<std::int64_t> image_;
};

/// Multiset of cycle lengths: counts[i] = number of cycles of length i.
struct CycleType {
  std::int64_t n = 0;
  std::map<std::int64_t, std::int64_t> counts;
};

/// Map i -> c_i plus the mass at infinity. Exact (rational) in the
/// combinatorial paths, real (double) on the floating-point side. A value
/// produced by moment inversion may carry negative entries; nonnegativity is
/// enforced only where an actual density is required.
template <class Scalar>
struct BasicCycleDensities {
  std::map<std::int64_t, Scalar> values;
  std::optional<Scalar> c_inf;  // unset = incomplete (untracked tail mass)

  Scalar sum() const {
    Scalar s{};
    for (const auto& [i, c] : values) s += c;
    return s;
  }
};

using CycleDensities = BasicCycleDensities<Rational>;
using RealCycleDensities = BasicCycleDensities<double>;

CycleType cycle_type(const Permutation& p);

/// c_i = i*m_i/n exactly; c_inf = 0; the c_i sum to 1.
CycleDensities densities_of(const CycleType& t);

/// Normalized trace of the k-th power of any permutation with this cycle
/// type: sum of c_i over i | k.
Rational trace_power(const CycleType& t, std::int64_t k);

struct ConstructionResult {
  Permutation permutation;
  std::map<std::int64_t, std::int64_t> cycle_counts;  // requested i -> floor(c_i*n/i)
  std::int64_t leftover_length = 0;                   // 0 when nothing left over
  /// True when the leftover cycle length equals a requested i, in which case
  /// that cyc_i picks up an extra i/n beyond the floor formula.
  bool leftover_collision = false;
  CycleDensities achieved;
};

/// Builds a permutation of {0..n-1} with exactly floor(c_i*n/i) cycles of
/// length i for each requested i. Points not consumed by a requested cycle
/// form one single cycle; as n grows this leftover mass converges to the
/// target's mass at infinity. Cycle blocks are laid out consecutively,
/// requested lengths ascending, leftover last.
ConstructionResult construct_permutation(const CycleDensities& target, std::int64_t n);

/// Uniform random permutation (Fisher-Yates).
Permutation random_permutation(std::int64_t n, Rng& rng);

/// Random permutation with the prescribed cycle type: deterministic block
/// layout relabeled by a uniform random bijection.
Permutation random_permutation_with_type(const CycleType& t, Rng& rng);

/// One-line wire format: space-separated images of 0..n-1.
std::string format_permutation(const Permutation& p);
Permutation parse_permutation(const std::string& line);

}  // namespace permspec::permutations
