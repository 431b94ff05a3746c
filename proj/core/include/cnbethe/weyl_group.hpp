#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace cnbethe {

/// Largest rank a SignedPermutation can carry (the key encoding packs 3 bits
/// per permutation entry and one bit per sign).
inline constexpr int kMaxSupportedRank = 8;

/// Default cap on the rank accepted by enumerate() / WeylGroup (order 3840).
inline constexpr int kDefaultMaxRank = 5;

/**
 * Element of the hyperoctahedral group W_N = (Z/2Z)^N ⋊ S_N.
 *
 * Stored as N signs and a 0-based permutation. The element acts on a
 * coordinate vector by
 *
 *     (g·x)[j] = signs[j] * x[perm[j]]
 *
 * which is the labelling x_{Qj} = σ_j x_{pj} of the wedges Δ_Q. Composition
 * is fixed so that compose(g, h) acts as "g first, then h":
 *
 *     apply_to_point(compose(g, h), x) == apply_to_point(h, apply_to_point(g, x))
 *
 * With this convention the wedge across the facet x_{Qi} = x_{Q(i+1)} is
 * Δ_{compose(Q, T_i)}, the wedge across x_{Q1} = 0 is Δ_{compose(Q, R_1)},
 * and momenta relabel as k_{PG} = G·(P·k), which is what the right regular
 * action A_P(QG) = (Ĝ A_P)(Q) requires.
 */
class SignedPermutation {
 public:
  /// Identity of rank `rank`.
  explicit SignedPermutation(int rank = 1);

  /// Validates that `perm` is a bijection on {0..N-1} and every sign is ±1.
  SignedPermutation(std::vector<int> signs, std::vector<int> perm);

  static SignedPermutation identity(int rank) { return SignedPermutation(rank); }
  /// T_i for 1 ≤ i < rank: swaps positions i and i+1 (1-based).
  static SignedPermutation transposition(int rank, int i);
  /// R_j for 1 ≤ j ≤ rank: negates coordinate j (1-based).
  static SignedPermutation reflection(int rank, int j = 1);

  int rank() const noexcept { return static_cast<int>(perm_.size()); }
  std::span<const int> signs() const noexcept { return signs_; }
  std::span<const int> perm() const noexcept { return perm_; }
  int sign(int j) const { return signs_.at(static_cast<std::size_t>(j)); }
  int image(int j) const { return perm_.at(static_cast<std::size_t>(j)); }

  bool is_identity() const noexcept;

  /// Number of negative signs.
  int negative_count() const noexcept;
  /// Parity of the underlying permutation: 0 even, 1 odd.
  int permutation_parity() const noexcept;

  /// Injective packing used for index lookup.
  std::uint64_t key() const noexcept;

  /// Lexicographic on (perm, signs) with +1 ordered before -1.
  std::strong_ordering operator<=>(const SignedPermutation& other) const noexcept;
  bool operator==(const SignedPermutation& other) const noexcept = default;

  /// e.g. "(+1,-1;2,1)" with 1-based permutation entries.
  std::string to_string() const;

 private:
  std::vector<int> signs_;
  std::vector<int> perm_;
};

/// A Coxeter generator of W_N: T_i (1 ≤ i ≤ N-1) or R_1.
struct Generator {
  enum class Kind : std::uint8_t { Transposition, Reflection };

  Kind kind = Kind::Transposition;
  int index = 1;

  static constexpr Generator T(int i) noexcept { return {Kind::Transposition, i}; }
  static constexpr Generator R1() noexcept { return {Kind::Reflection, 1}; }

  bool is_reflection() const noexcept { return kind == Kind::Reflection; }
  bool valid_for(int rank) const noexcept;
  /// Throws IndexError if the letter is out of range for `rank`.
  SignedPermutation element(int rank) const;
  std::string to_string() const;

  bool operator==(const Generator&) const noexcept = default;
};

using GeneratorWord = std::vector<Generator>;

std::string to_string(const GeneratorWord& word);

/// Group product; DimensionError on mismatched rank.
SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h);
SignedPermutation inverse(const SignedPermutation& g);

/// (g·x)[j] = signs[j] * x[perm[j]].
std::vector<double> apply_to_point(const SignedPermutation& g, std::span<const double> x);

/// Product of the letters in order, starting from the identity of `rank`.
SignedPermutation evaluate_word(const GeneratorWord& word, int rank);

/// A word with evaluate_word(word_for(g)) == g. Each negative sign is bubbled
/// to position 1, flipped with R_1 and bubbled back; the remaining
/// permutation is then bubble-sorted. Length is not minimal in general.
GeneratorWord word_for(const SignedPermutation& g);

/// The reversed word; since every letter is an involution it evaluates to
/// the inverse element.
GeneratorWord reversed(const GeneratorWord& word);

/// Unique Q with 0 < (Q·x)_1 < ... < (Q·x)_N. Throws BoundaryPointError if
/// some x_j == 0 or |x_j| == |x_k|.
SignedPermutation classify_wedge(std::span<const double> x);

/// All 2^N·N! elements in canonical order. CapacityError above `max_rank`.
std::vector<SignedPermutation> enumerate(int rank, int max_rank = kDefaultMaxRank);

/**
 * Enumerated W_N with O(1) element lookup and the right-multiplication table
 * of the generators. Generator slots are T_1..T_{N-1} followed by R_1.
 * Immutable after construction.
 */
class WeylGroup {
 public:
  explicit WeylGroup(int rank, int max_rank = kDefaultMaxRank);

  int rank() const noexcept { return rank_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<SignedPermutation>& elements() const noexcept { return elements_; }
  const SignedPermutation& element(std::size_t index) const { return elements_.at(index); }

  /// Throws DimensionError for an element of another rank.
  std::size_t index_of(const SignedPermutation& g) const;
  static constexpr std::size_t identity_index() noexcept { return 0; }

  std::size_t generator_count() const noexcept { return static_cast<std::size_t>(rank_); }
  Generator generator(std::size_t slot) const;
  std::size_t slot_of(Generator g) const;

  /// Index of element(index)·generator(slot).
  std::size_t right_multiply(std::size_t index, std::size_t slot) const {
    return right_mult_[index * generator_count() + slot];
  }
  std::size_t product_index(std::size_t a, std::size_t b) const;

 private:
  int rank_;
  std::vector<SignedPermutation> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<std::size_t> right_mult_;
};

}  // namespace cnbethe
