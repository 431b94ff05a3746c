#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cnbethe/weyl_group.hpp"

namespace cnbethe {

using Complex = std::complex<double>;

/// One-dimensional representation of W_N: transpositions act as
/// `transposition_sign`, coordinate reflections as `reflection_sign`.
/// (+1, ·) is the boson sector, (-1, ·) the fermion sector.
struct Sector {
  int transposition_sign = 1;
  int reflection_sign = 1;

  /// Parses "++", "+-", "-+", "--" (ε_T first).
  static Sector parse(const std::string& text);
  std::string to_string() const;
  bool operator==(const Sector&) const noexcept = default;
};

/// All four sectors in the order ++, +-, -+, --.
std::vector<Sector> all_sectors();

/// ε_T^{parity(perm)} · ε_R^{#negative signs}; equals the letter-count
/// product over any word for g.
int one_dim_rep(int transposition_sign, int reflection_sign, const SignedPermutation& g);
inline int one_dim_rep(Sector sector, const SignedPermutation& g) {
  return one_dim_rep(sector.transposition_sign, sector.reflection_sign, g);
}
/// Letter-count evaluation over an explicit word.
int one_dim_rep(Sector sector, const GeneratorWord& word);

/// (v')[Q] = v[Q·g]: the right regular representation, applied without
/// materialising the n×n permutation matrix.
std::vector<Complex> regular_action(const WeylGroup& group, const SignedPermutation& g,
                                    std::span<const Complex> v);

/**
 * Handle to the representation the exchange operators act in: either the
 * regular representation of W_N (dimension 2^N·N!) or a one-dimensional
 * sector. Cheap to copy; the group table is shared.
 */
class Representation {
 public:
  static Representation regular(std::shared_ptr<const WeylGroup> group);
  static Representation regular(int rank);
  static Representation scalar(int rank, Sector sector);

  bool is_regular() const noexcept { return group_ != nullptr; }
  bool is_scalar() const noexcept { return group_ == nullptr; }
  int rank() const noexcept { return rank_; }
  std::size_t dimension() const noexcept;

  /// Regular representations only; UsageError otherwise.
  const WeylGroup& group() const;
  const std::shared_ptr<const WeylGroup>& group_ptr() const noexcept { return group_; }
  /// Scalar representations only; UsageError otherwise.
  Sector sector() const;

  /// out = Ĝ·in for a generator. `out` must not alias `in`.
  void apply_generator(Generator g, std::span<const Complex> in, std::span<Complex> out) const;

  std::string describe() const;

 private:
  Representation(int rank, std::shared_ptr<const WeylGroup> group, Sector sector)
      : rank_(rank), group_(std::move(group)), sector_(sector) {}

  int rank_;
  std::shared_ptr<const WeylGroup> group_;
  Sector sector_;
};

/// Character of (Z/2Z)^N given by its values χ(R_j) = ±1.
struct Character {
  std::vector<int> values;
  bool operator==(const Character&) const noexcept = default;
  auto operator<=>(const Character&) const = default;
};

/// χ_0..χ_N with χ_k(R_j) = -1 iff j ≤ k.
std::vector<Character> orbit_representatives(int rank);

/// Orbit of χ under the permutation action (pχ)(R_j) = χ(R_{p^{-1}(j)}),
/// by exhaustive enumeration of S_N. Sorted, duplicates removed.
std::vector<Character> character_orbit(const Character& chi);

/// i!·(N-i)!, the order of the S_N-stabiliser of χ_i.
std::uint64_t stabilizer_order(int rank, int i);

using Partition = std::vector<int>;

/// Partitions of n in reverse-lexicographic order; partitions(0) = {{}}.
std::vector<Partition> partitions(int n);
/// Number of standard Young tableaux, by the hook length formula.
std::uint64_t hook_dimension(const Partition& lambda);
std::uint64_t binomial(int n, int k);

struct IrrepDescriptor {
  int orbit = 0;  ///< i: number of reflections represented by -1
  Partition lambda;  ///< partition of i
  Partition mu;      ///< partition of N-i
  std::uint64_t dimension = 0;
};

/// binomial(N, i) · f^λ · f^μ. DomainError if λ ⊢ i or μ ⊢ N-i fails.
std::uint64_t induced_dimension(int rank, int i, const Partition& lambda, const Partition& mu);

/// Every (i, λ, μ) for W_N.
std::vector<IrrepDescriptor> irreps(int rank);

struct DimensionSumReport {
  int rank = 0;
  std::uint64_t group_order = 0;
  std::uint64_t sum_of_squares = 0;
  std::vector<std::uint64_t> per_orbit;  ///< Σ dim² for each orbit i
  std::vector<IrrepDescriptor> descriptors;
  bool ok() const noexcept { return sum_of_squares == group_order; }
};

inline constexpr int kMaxSumRuleRank = 6;

/// Checks Σ dim² = 2^N·N!. DomainError for N outside [1, 6].
DimensionSumReport dimension_sum_check(int rank);

}  // namespace cnbethe
