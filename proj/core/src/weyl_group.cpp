#include "cnbethe/weyl_group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cnbethe/errors.hpp"

namespace cnbethe {
namespace {

void check_rank(int rank) {
  if (rank < 1 || rank > kMaxSupportedRank) {
    throw CapacityError("rank " + std::to_string(rank) + " outside [1, " +
                        std::to_string(kMaxSupportedRank) + "]");
  }
}

void check_same_rank(const SignedPermutation& g, const SignedPermutation& h) {
  if (g.rank() != h.rank()) {
    throw DimensionError("rank mismatch: " + std::to_string(g.rank()) + " vs " +
                         std::to_string(h.rank()));
  }
}

}  // namespace

SignedPermutation::SignedPermutation(int rank) {
  check_rank(rank);
  signs_.assign(static_cast<std::size_t>(rank), 1);
  perm_.resize(static_cast<std::size_t>(rank));
  std::iota(perm_.begin(), perm_.end(), 0);
}

SignedPermutation::SignedPermutation(std::vector<int> signs, std::vector<int> perm)
    : signs_(std::move(signs)), perm_(std::move(perm)) {
  check_rank(static_cast<int>(perm_.size()));
  if (signs_.size() != perm_.size()) {
    throw DimensionError("signs and perm have different lengths");
  }
  std::vector<bool> seen(perm_.size(), false);
  for (int p : perm_) {
    if (p < 0 || p >= rank() || seen[static_cast<std::size_t>(p)]) {
      throw DomainError("perm is not a bijection on {0..N-1}");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) throw DomainError("signs must be +1 or -1");
  }
}

SignedPermutation SignedPermutation::transposition(int rank, int i) {
  if (i < 1 || i >= rank) {
    throw IndexError("T_" + std::to_string(i) + " out of range for N=" + std::to_string(rank));
  }
  SignedPermutation t(rank);
  std::swap(t.perm_[static_cast<std::size_t>(i - 1)], t.perm_[static_cast<std::size_t>(i)]);
  return t;
}

SignedPermutation SignedPermutation::reflection(int rank, int j) {
  if (j < 1 || j > rank) {
    throw IndexError("R_" + std::to_string(j) + " out of range for N=" + std::to_string(rank));
  }
  SignedPermutation r(rank);
  r.signs_[static_cast<std::size_t>(j - 1)] = -1;
  return r;
}

bool SignedPermutation::is_identity() const noexcept {
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    if (signs_[j] != 1 || perm_[j] != static_cast<int>(j)) return false;
  }
  return true;
}

int SignedPermutation::negative_count() const noexcept {
  return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1));
}

int SignedPermutation::permutation_parity() const noexcept {
  int inversions = 0;
  for (std::size_t a = 0; a < perm_.size(); ++a) {
    for (std::size_t b = a + 1; b < perm_.size(); ++b) {
      if (perm_[a] > perm_[b]) ++inversions;
    }
  }
  return inversions % 2;
}

std::uint64_t SignedPermutation::key() const noexcept {
  std::uint64_t k = 0;
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    k |= static_cast<std::uint64_t>(perm_[j]) << (3 * j);
    if (signs_[j] < 0) k |= std::uint64_t{1} << (32 + j);
  }
  return k | (static_cast<std::uint64_t>(perm_.size()) << 56);
}

std::strong_ordering SignedPermutation::operator<=>(const SignedPermutation& other) const noexcept {
  if (auto c = rank() <=> other.rank(); c != 0) return c;
  if (auto c = perm_ <=> other.perm_; c != 0) return c;
  // +1 before -1
  for (std::size_t j = 0; j < signs_.size(); ++j) {
    if (signs_[j] != other.signs_[j]) {
      return signs_[j] > other.signs_[j] ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < signs_.size(); ++j) {
    if (j) os << ',';
    os << (signs_[j] > 0 ? "+1" : "-1");
  }
  os << ';';
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    if (j) os << ',';
    os << perm_[j] + 1;
  }
  os << ')';
  return os.str();
}

bool Generator::valid_for(int rank) const noexcept {
  if (kind == Kind::Reflection) return index == 1 && rank >= 1;
  return index >= 1 && index < rank;
}

SignedPermutation Generator::element(int rank) const {
  if (!valid_for(rank)) {
    throw IndexError("generator " + to_string() + " out of range for N=" + std::to_string(rank));
  }
  return kind == Kind::Reflection ? SignedPermutation::reflection(rank, 1)
                                  : SignedPermutation::transposition(rank, index);
}

std::string Generator::to_string() const {
  return (kind == Kind::Reflection ? "R" : "T") + std::to_string(index);
}

std::string to_string(const GeneratorWord& word) {
  if (word.empty()) return "I";
  std::string out;
  for (const auto& letter : word) {
    if (!out.empty()) out += ' ';
    out += letter.to_string();
  }
  return out;
}

SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h) {
  check_same_rank(g, h);
  const auto n = static_cast<std::size_t>(g.rank());
  std::vector<int> signs(n);
  std::vector<int> perm(n);
  for (std::size_t j = 0; j < n; ++j) {
    const int hj = h.image(static_cast<int>(j));
    signs[j] = h.sign(static_cast<int>(j)) * g.sign(hj);
    perm[j] = g.image(hj);
  }
  return {std::move(signs), std::move(perm)};
}

SignedPermutation inverse(const SignedPermutation& g) {
  const auto n = static_cast<std::size_t>(g.rank());
  std::vector<int> perm(n);
  std::vector<int> signs(n);
  for (std::size_t j = 0; j < n; ++j) perm[static_cast<std::size_t>(g.image(static_cast<int>(j)))] = static_cast<int>(j);
  for (std::size_t j = 0; j < n; ++j) signs[j] = g.sign(perm[j]);
  return {std::move(signs), std::move(perm)};
}

std::vector<double> apply_to_point(const SignedPermutation& g, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(g.rank())) {
    throw DimensionError("point has " + std::to_string(x.size()) + " coordinates, element has rank " +
                         std::to_string(g.rank()));
  }
  std::vector<double> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    out[j] = g.sign(static_cast<int>(j)) * x[static_cast<std::size_t>(g.image(static_cast<int>(j)))];
  }
  return out;
}

SignedPermutation evaluate_word(const GeneratorWord& word, int rank) {
  SignedPermutation g(rank);
  for (const auto& letter : word) g = compose(g, letter.element(rank));
  return g;
}

GeneratorWord reversed(const GeneratorWord& word) { return {word.rbegin(), word.rend()}; }

GeneratorWord word_for(const SignedPermutation& g) {
  // Right-multiplying by T_i swaps positions i, i+1 of (signs, perm); by R_1
  // flips the first sign. Reduce g to the identity and read the letters back.
  std::vector<int> signs(g.signs().begin(), g.signs().end());
  std::vector<int> perm(g.perm().begin(), g.perm().end());
  GeneratorWord reduction;
  auto swap_at = [&](std::size_t pos) {  // 0-based pos, pos+1
    std::swap(signs[pos], signs[pos + 1]);
    std::swap(perm[pos], perm[pos + 1]);
    reduction.push_back(Generator::T(static_cast<int>(pos) + 1));
  };

  for (std::size_t j = 0; j < signs.size(); ++j) {
    if (signs[j] > 0) continue;
    for (std::size_t p = j; p > 0; --p) swap_at(p - 1);
    signs[0] = -signs[0];
    reduction.push_back(Generator::R1());
    for (std::size_t p = 0; p < j; ++p) swap_at(p);
  }
  for (std::size_t pass = 0; pass < perm.size(); ++pass) {
    for (std::size_t p = 0; p + 1 < perm.size(); ++p) {
      if (perm[p] > perm[p + 1]) swap_at(p);
    }
  }
  // g · L_1 ··· L_m = I and every letter is an involution.
  return reversed(reduction);
}

SignedPermutation classify_wedge(std::span<const double> x) {
  const std::size_t n = x.size();
  check_rank(static_cast<int>(n));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(x[static_cast<std::size_t>(a)]) < std::abs(x[static_cast<std::size_t>(b)]);
  });
  std::vector<int> signs(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double v = x[static_cast<std::size_t>(order[j])];
    if (v == 0.0 || std::isnan(v)) {
      throw BoundaryPointError("coordinate " + std::to_string(order[j] + 1) + " lies on the wall x=0");
    }
    if (j > 0 && std::abs(v) == std::abs(x[static_cast<std::size_t>(order[j - 1])])) {
      throw BoundaryPointError("coordinates " + std::to_string(order[j - 1] + 1) + " and " +
                               std::to_string(order[j] + 1) + " coincide in absolute value");
    }
    signs[j] = v > 0 ? 1 : -1;
  }
  return {std::move(signs), std::move(order)};
}

std::vector<SignedPermutation> enumerate(int rank, int max_rank) {
  if (rank < 1) throw DomainError("rank must be positive");
  if (rank > max_rank || rank > kMaxSupportedRank) {
    throw CapacityError("rank " + std::to_string(rank) + " exceeds maximum " +
                        std::to_string(std::min(max_rank, kMaxSupportedRank)));
  }
  const auto n = static_cast<std::size_t>(rank);
  std::vector<SignedPermutation> out;
  std::size_t factorial = 1;
  for (std::size_t j = 2; j <= n; ++j) factorial *= j;
  out.reserve(factorial << n);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> signs(n);
      for (std::size_t j = 0; j < n; ++j) signs[j] = (mask >> (n - 1 - j)) & 1U ? -1 : 1;
      out.emplace_back(std::move(signs), perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

WeylGroup::WeylGroup(int rank, int max_rank) : rank_(rank), elements_(enumerate(rank, max_rank)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].key(), i);

  const std::size_t gens = generator_count();
  std::vector<SignedPermutation> gen_elements;
  for (std::size_t s = 0; s < gens; ++s) gen_elements.push_back(generator(s).element(rank_));
  right_mult_.resize(elements_.size() * gens);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t s = 0; s < gens; ++s) {
      right_mult_[i * gens + s] = index_of(compose(elements_[i], gen_elements[s]));
    }
  }
}

std::size_t WeylGroup::index_of(const SignedPermutation& g) const {
  if (g.rank() != rank_) {
    throw DimensionError("element of rank " + std::to_string(g.rank()) + " in W_" + std::to_string(rank_));
  }
  return index_.at(g.key());
}

Generator WeylGroup::generator(std::size_t slot) const {
  if (slot >= generator_count()) throw IndexError("generator slot out of range");
  if (slot + 1 == generator_count()) return Generator::R1();
  return Generator::T(static_cast<int>(slot) + 1);
}

std::size_t WeylGroup::slot_of(Generator g) const {
  if (!g.valid_for(rank_)) {
    throw IndexError("generator " + g.to_string() + " out of range for N=" + std::to_string(rank_));
  }
  return g.is_reflection() ? generator_count() - 1 : static_cast<std::size_t>(g.index - 1);
}

std::size_t WeylGroup::product_index(std::size_t a, std::size_t b) const {
  return index_of(compose(element(a), element(b)));
}

}  // namespace cnbethe
