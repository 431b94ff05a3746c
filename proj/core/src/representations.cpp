#include "cnbethe/representations.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "cnbethe/errors.hpp"

namespace cnbethe {

Sector Sector::parse(const std::string& text) {
  auto sign = [&](char c) {
    if (c == '+') return 1;
    if (c == '-') return -1;
    throw DomainError("sector must be two characters from {+,-}, got '" + text + "'");
  };
  if (text.size() != 2) throw DomainError("sector must be two characters from {+,-}, got '" + text + "'");
  return {sign(text[0]), sign(text[1])};
}

std::string Sector::to_string() const {
  return std::string{transposition_sign > 0 ? '+' : '-', reflection_sign > 0 ? '+' : '-'};
}

std::vector<Sector> all_sectors() { return {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}; }

int one_dim_rep(int transposition_sign, int reflection_sign, const SignedPermutation& g) {
  int value = 1;
  if (transposition_sign < 0 && g.permutation_parity() == 1) value = -value;
  if (reflection_sign < 0 && g.negative_count() % 2 == 1) value = -value;
  return value;
}

int one_dim_rep(Sector sector, const GeneratorWord& word) {
  int value = 1;
  for (const auto& letter : word) {
    value *= letter.is_reflection() ? sector.reflection_sign : sector.transposition_sign;
  }
  return value;
}

std::vector<Complex> regular_action(const WeylGroup& group, const SignedPermutation& g,
                                    std::span<const Complex> v) {
  if (v.size() != group.order()) {
    throw DimensionError("vector length " + std::to_string(v.size()) + " != |W_N| = " +
                         std::to_string(group.order()));
  }
  std::vector<Complex> out(v.size());
  for (std::size_t q = 0; q < v.size(); ++q) {
    out[q] = v[group.index_of(compose(group.element(q), g))];
  }
  return out;
}

Representation Representation::regular(std::shared_ptr<const WeylGroup> group) {
  if (!group) throw UsageError("regular representation needs a group");
  const int rank = group->rank();
  return {rank, std::move(group), Sector{}};
}

Representation Representation::regular(int rank) {
  return regular(std::make_shared<const WeylGroup>(rank));
}

Representation Representation::scalar(int rank, Sector sector) {
  if (rank < 1) throw DomainError("rank must be positive");
  if (std::abs(sector.transposition_sign) != 1 || std::abs(sector.reflection_sign) != 1) {
    throw DomainError("sector signs must be ±1");
  }
  return {rank, nullptr, sector};
}

std::size_t Representation::dimension() const noexcept { return group_ ? group_->order() : 1; }

const WeylGroup& Representation::group() const {
  if (!group_) throw UsageError("scalar representation has no regular group table");
  return *group_;
}

Sector Representation::sector() const {
  if (group_) throw UsageError("regular representation has no single sector");
  return sector_;
}

void Representation::apply_generator(Generator g, std::span<const Complex> in,
                                     std::span<Complex> out) const {
  if (!g.valid_for(rank_)) {
    throw IndexError("generator " + g.to_string() + " out of range for N=" + std::to_string(rank_));
  }
  const std::size_t dim = dimension();
  if (in.size() != dim || out.size() != dim) {
    throw DimensionError("operand length does not match representation dimension " + std::to_string(dim));
  }
  if (!group_) {
    const int s = g.is_reflection() ? sector_.reflection_sign : sector_.transposition_sign;
    out[0] = static_cast<double>(s) * in[0];
    return;
  }
  const std::size_t slot = group_->slot_of(g);
  for (std::size_t q = 0; q < dim; ++q) out[q] = in[group_->right_multiply(q, slot)];
}

std::string Representation::describe() const {
  if (group_) return "regular(N=" + std::to_string(rank_) + ")";
  return "scalar(N=" + std::to_string(rank_) + ",sector=" + sector_.to_string() + ")";
}

std::vector<Character> orbit_representatives(int rank) {
  if (rank < 1) throw DomainError("rank must be positive");
  std::vector<Character> out;
  for (int k = 0; k <= rank; ++k) {
    Character chi;
    for (int j = 1; j <= rank; ++j) chi.values.push_back(j <= k ? -1 : 1);
    out.push_back(std::move(chi));
  }
  return out;
}

std::vector<Character> character_orbit(const Character& chi) {
  const std::size_t n = chi.values.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::set<Character> orbit;
  do {
    Character image{std::vector<int>(n)};
    for (std::size_t j = 0; j < n; ++j) image.values[static_cast<std::size_t>(p[j])] = chi.values[j];
    orbit.insert(std::move(image));
  } while (std::next_permutation(p.begin(), p.end()));
  return {orbit.begin(), orbit.end()};
}

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int j = 2; j <= n; ++j) f *= static_cast<std::uint64_t>(j);
  return f;
}

void partitions_rec(int remaining, int max_part, Partition& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

bool is_partition_of(const Partition& lambda, int n) {
  int sum = 0;
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    if (lambda[r] <= 0) return false;
    if (r > 0 && lambda[r] > lambda[r - 1]) return false;
    sum += lambda[r];
  }
  return sum == n;
}

}  // namespace

std::uint64_t stabilizer_order(int rank, int i) {
  if (rank < 1 || i < 0 || i > rank) {
    throw DomainError("orbit index " + std::to_string(i) + " outside [0, " + std::to_string(rank) + "]");
  }
  return factorial(i) * factorial(rank - i);
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw DomainError("cannot partition a negative integer");
  std::vector<Partition> out;
  Partition prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::uint64_t hook_dimension(const Partition& lambda) {
  int n = 0;
  for (int part : lambda) n += part;
  if (!is_partition_of(lambda, n)) throw DomainError("not a partition");
  // n! / Π hooks, accumulated as a ratio of integers to stay exact.
  std::uint64_t hooks = 1;
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) {
      const int arm = lambda[r] - c - 1;
      int leg = 0;
      for (std::size_t below = r + 1; below < lambda.size() && lambda[below] > c; ++below) ++leg;
      hooks *= static_cast<std::uint64_t>(arm + leg + 1);
    }
  }
  return factorial(n) / hooks;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

std::uint64_t induced_dimension(int rank, int i, const Partition& lambda, const Partition& mu) {
  if (rank < 1 || i < 0 || i > rank) throw DomainError("orbit index out of range");
  if (!is_partition_of(lambda, i)) throw DomainError("lambda is not a partition of " + std::to_string(i));
  if (!is_partition_of(mu, rank - i)) throw DomainError("mu is not a partition of " + std::to_string(rank - i));
  return binomial(rank, i) * hook_dimension(lambda) * hook_dimension(mu);
}

std::vector<IrrepDescriptor> irreps(int rank) {
  std::vector<IrrepDescriptor> out;
  for (int i = 0; i <= rank; ++i) {
    for (const auto& lambda : partitions(i)) {
      for (const auto& mu : partitions(rank - i)) {
        out.push_back({i, lambda, mu, induced_dimension(rank, i, lambda, mu)});
      }
    }
  }
  return out;
}

DimensionSumReport dimension_sum_check(int rank) {
  if (rank < 1 || rank > kMaxSumRuleRank) {
    throw DomainError("sum rule supported for N in [1, " + std::to_string(kMaxSumRuleRank) + "]");
  }
  DimensionSumReport report;
  report.rank = rank;
  report.group_order = factorial(rank) << rank;
  report.descriptors = irreps(rank);
  report.per_orbit.assign(static_cast<std::size_t>(rank) + 1, 0);
  for (const auto& d : report.descriptors) {
    report.per_orbit[static_cast<std::size_t>(d.orbit)] += d.dimension * d.dimension;
    report.sum_of_squares += d.dimension * d.dimension;
  }
  return report;
}

}  // namespace cnbethe
