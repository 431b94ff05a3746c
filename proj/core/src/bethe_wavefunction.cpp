#include "cnbethe/bethe_wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

#include "cnbethe/errors.hpp"

namespace cnbethe {
namespace {

constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

double max_abs_difference(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t q = 0; q < a.size(); ++q) worst = std::max(worst, std::abs(a[q] - b[q]));
  return worst;
}

GeneratorWord tree_word(const WeylGroup& group, const std::vector<std::size_t>& parent,
                        const std::vector<std::size_t>& parent_slot, std::size_t node) {
  GeneratorWord word;
  while (node != WeylGroup::identity_index()) {
    word.push_back(group.generator(parent_slot[node]));
    node = parent[node];
  }
  return reversed(word);
}

std::vector<GeneratorWord> relators(int rank) {
  std::vector<GeneratorWord> out;
  const auto T = [](int i) { return Generator::T(i); };
  const Generator R = Generator::R1();
  out.push_back({R, R});
  for (int i = 1; i < rank; ++i) {
    out.push_back({T(i), T(i)});
    if (i + 1 < rank) out.push_back({T(i), T(i + 1), T(i), T(i + 1), T(i), T(i + 1)});
    for (int j = i + 2; j < rank; ++j) out.push_back({T(i), T(j), T(i), T(j)});
    if (i > 1) out.push_back({R, T(i), R, T(i)});
  }
  if (rank >= 2) out.push_back({R, T(1), R, T(1), R, T(1), R, T(1)});
  return out;
}

// Positions where T_i T_{i+1} T_i, T_{i+1} T_i T_{i+1} or a commuting pair occurs.
bool try_braid_move(GeneratorWord& word, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, int>> moves;  // (position, kind) 3 = braid, 2 = commute
  for (std::size_t p = 0; p + 1 < word.size(); ++p) {
    const auto& x = word[p];
    const auto& y = word[p + 1];
    const bool both_t = !x.is_reflection() && !y.is_reflection();
    if (both_t && std::abs(x.index - y.index) > 1) moves.emplace_back(p, 2);
    if (x.is_reflection() != y.is_reflection()) {
      const auto& t = x.is_reflection() ? y : x;
      if (t.index > 1) moves.emplace_back(p, 2);
    }
    if (p + 2 < word.size() && both_t && !word[p + 2].is_reflection() && word[p + 2] == x &&
        std::abs(x.index - y.index) == 1) {
      moves.emplace_back(p, 3);
    }
  }
  if (moves.empty()) return false;
  const auto [pos, kind] = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
  if (kind == 2) {
    std::swap(word[pos], word[pos + 1]);
  } else {
    const Generator x = word[pos];
    const Generator y = word[pos + 1];
    word[pos] = y;
    word[pos + 1] = x;
    word[pos + 2] = y;
  }
  return true;
}

}  // namespace

Momenta::Momenta(std::vector<double> k) : k_(std::move(k)) {
  if (k_.empty()) throw DomainError("momenta must have at least one component");
  for (std::size_t j = 0; j < k_.size(); ++j) {
    if (!std::isfinite(k_[j]) || k_[j] == 0.0) throw DomainError("momenta must be finite and nonzero");
    for (std::size_t l = 0; l < j; ++l) {
      if (std::abs(k_[j]) == std::abs(k_[l])) {
        throw DomainError("momenta |k_" + std::to_string(l + 1) + "| and |k_" + std::to_string(j + 1) +
                          "| coincide");
      }
    }
  }
}

double energy(std::span<const double> k) {
  double e = 0.0;
  for (double kj : k) e += kj * kj;
  return e;
}

InconsistencyError::InconsistencyError(std::size_t element, GeneratorWord first, GeneratorWord second,
                                       double residual)
    : std::runtime_error("Bethe recursion is path dependent: words [" + to_string(first) + "] and [" +
                         to_string(second) + "] reach the same element with coefficient mismatch " +
                         std::to_string(residual)),
      element_(element),
      first_(std::move(first)),
      second_(std::move(second)),
      residual_(residual) {}

BetheCoefficients::BetheCoefficients(Momenta k, ModelSpec spec, Representation rep,
                                     std::shared_ptr<const WeylGroup> group)
    : momenta_(std::move(k)), spec_(spec), rep_(std::move(rep)), group_(std::move(group)) {}

std::span<const Complex> BetheCoefficients::coefficient(std::size_t p_index) const {
  if (p_index >= size()) throw IndexError("element index out of range");
  const std::size_t dim = vector_dimension();
  return std::span<const Complex>(table_).subspan(p_index * dim, dim);
}

Complex BetheCoefficients::amplitude(std::size_t p_index, std::size_t q_index) const {
  if (q_index >= size()) throw IndexError("wedge index out of range");
  const auto a = coefficient(p_index);
  return rep_.is_regular() ? a[q_index] : static_cast<double>(character_[q_index]) * a[0];
}

RepOperator edge_operator(Generator g, std::span<const double> target_momenta, const ModelSpec& spec,
                          const Representation& rep) {
  if (g.is_reflection()) return Z_op(2.0 * target_momenta[0], spec, rep);
  const auto i = static_cast<std::size_t>(g.index);
  return Y_op(g.index, target_momenta[i] - target_momenta[i - 1], spec, rep);
}

std::vector<Complex> default_initial(const Representation& rep) {
  std::vector<Complex> a(rep.dimension(), Complex{});
  a[WeylGroup::identity_index()] = 1.0;
  return a;
}

BetheCoefficients compute_coefficients(const Momenta& k, std::span<const Complex> initial, const ModelSpec& spec,
                                       const Representation& rep, const CoefficientOptions& options) {
  if (k.rank() != rep.rank()) {
    throw DimensionError("momenta have " + std::to_string(k.rank()) + " components, representation rank is " +
                         std::to_string(rep.rank()));
  }
  if (initial.size() != rep.dimension()) {
    throw DimensionError("A_I has length " + std::to_string(initial.size()) + ", expected " +
                         std::to_string(rep.dimension()));
  }
  auto group = rep.is_regular() ? rep.group_ptr() : std::make_shared<const WeylGroup>(rep.rank(), options.max_rank);
  BetheCoefficients out(k, spec, rep, group);

  const std::size_t n = group->order();
  const std::size_t dim = rep.dimension();
  out.k_by_element_.reserve(n);
  for (const auto& g : group->elements()) out.k_by_element_.push_back(apply_to_point(g, k.values()));
  if (rep.is_scalar()) {
    out.character_.reserve(n);
    for (const auto& g : group->elements()) out.character_.push_back(one_dim_rep(rep.sector(), g));
  }

  out.table_.assign(n * dim, Complex{});
  std::copy(initial.begin(), initial.end(), out.table_.begin());
  std::vector<std::size_t> parent(n, kUnvisited);
  std::vector<std::size_t> parent_slot(n, 0);
  parent[WeylGroup::identity_index()] = WeylGroup::identity_index();

  std::deque<std::size_t> queue{WeylGroup::identity_index()};
  while (!queue.empty()) {
    const std::size_t p = queue.front();
    queue.pop_front();
    const std::span<const Complex> source(out.table_.data() + p * dim, dim);
    for (std::size_t slot = 0; slot < group->generator_count(); ++slot) {
      const std::size_t q = group->right_multiply(p, slot);
      const Generator g = group->generator(slot);
      auto candidate = edge_operator(g, out.k_by_element_[q], spec, rep).apply(rep, source);
      Complex* target = out.table_.data() + q * dim;
      if (parent[q] == kUnvisited) {
        std::copy(candidate.begin(), candidate.end(), target);
        parent[q] = p;
        parent_slot[q] = slot;
        queue.push_back(q);
        continue;
      }
      const double residual = max_abs_difference(candidate, std::span<const Complex>(target, dim));
      ++out.cross_checks_;
      out.max_cross_residual_ = std::max(out.max_cross_residual_, residual);
      if (residual > options.tolerance) {
        auto second = tree_word(*group, parent, parent_slot, p);
        second.push_back(g);
        throw InconsistencyError(q, tree_word(*group, parent, parent_slot, q), std::move(second), residual);
      }
    }
  }
  return out;
}

BetheCoefficients compute_coefficients(const Momenta& k, const ModelSpec& spec, const Representation& rep,
                                       const CoefficientOptions& options) {
  const auto initial = default_initial(rep);
  return compute_coefficients(k, initial, spec, rep, options);
}

std::vector<Complex> evaluate_along_word(const Momenta& k, std::span<const Complex> initial, const ModelSpec& spec,
                                         const Representation& rep, const GeneratorWord& word) {
  if (initial.size() != rep.dimension()) throw DimensionError("A_I length does not match representation");
  std::vector<Complex> current(initial.begin(), initial.end());
  SignedPermutation element(rep.rank());
  for (const auto& letter : word) {
    element = compose(element, letter.element(rep.rank()));
    const auto target_momenta = apply_to_point(element, k.values());
    current = edge_operator(letter, target_momenta, spec, rep).apply(rep, current);
  }
  return current;
}

GeneratorWord rewrite_with_relation(const GeneratorWord& word, int rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GeneratorWord out = word;
  if (std::bernoulli_distribution(0.5)(rng) && try_braid_move(out, rng)) return out;
  const auto rels = relators(rank);
  const auto& rel = rels[std::uniform_int_distribution<std::size_t>(0, rels.size() - 1)(rng)];
  const auto pos = std::uniform_int_distribution<std::size_t>(0, out.size())(rng);
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), rel.begin(), rel.end());
  return out;
}

WordIndependenceResult word_independence_test(const Momenta& k, const ModelSpec& spec, const Representation& rep,
                                              std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw DomainError("trials must be at least 1");
  const auto group = rep.is_regular() ? rep.group_ptr() : std::make_shared<const WeylGroup>(rep.rank());
  const auto initial = default_initial(rep);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, group->order() - 1);

  WordIndependenceResult result;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& element = group->element(pick(rng));
    const auto first = word_for(element);
    const auto second = rewrite_with_relation(first, rep.rank(), rng());
    if (evaluate_word(second, rep.rank()) != element) {
      throw std::logic_error("relation rewrite changed the group element");
    }
    const auto a = evaluate_along_word(k, initial, spec, rep, first);
    const auto b = evaluate_along_word(k, initial, spec, rep, second);
    const double residual = max_abs_difference(a, b);
    if (t == 0 || residual > result.max_residual) {
      result.max_residual = residual;
      result.worst_first = first;
      result.worst_second = second;
    }
    ++result.trials;
  }
  return result;
}

WavefunctionSample evaluate_psi(const BetheCoefficients& coeffs, std::span<const double> x,
                                const std::optional<SignedPermutation>& wedge) {
  if (x.size() != static_cast<std::size_t>(coeffs.rank())) {
    throw DimensionError("point has " + std::to_string(x.size()) + " coordinates, N = " +
                         std::to_string(coeffs.rank()));
  }
  WavefunctionSample sample{std::vector<double>(x.begin(), x.end()), wedge ? *wedge : classify_wedge(x), {}, {}};
  const auto& q = sample.wedge;
  const std::size_t q_index = coeffs.group().index_of(q);
  const auto y = apply_to_point(q, x);
  const std::size_t n = x.size();
  sample.gradient.assign(n, Complex{});

  const auto& ks = coeffs.relabelled_momenta();
  for (std::size_t p = 0; p < coeffs.size(); ++p) {
    const Complex amp = coeffs.amplitude(p, q_index);
    if (amp == Complex{}) continue;
    double phase = 0.0;
    for (std::size_t j = 0; j < n; ++j) phase += ks[p][j] * y[j];
    const Complex term = amp * std::polar(1.0, phase);
    sample.value += term;
    // d/dx_m of y_j is sign_j when perm_j == m.
    for (std::size_t j = 0; j < n; ++j) {
      const auto m = static_cast<std::size_t>(q.image(static_cast<int>(j)));
      sample.gradient[m] += Complex(0.0, ks[p][j] * q.sign(static_cast<int>(j))) * term;
    }
  }
  return sample;
}

}  // namespace cnbethe
