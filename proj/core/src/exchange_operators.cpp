#include "cnbethe/exchange_operators.hpp"

#include <cmath>
#include <sstream>

#include "cnbethe/errors.hpp"

namespace cnbethe {
namespace {

constexpr Complex kI{0.0, 1.0};

// c/(iu - c), iu/(iu - c)
CoefficientPair delta_form(Complex u, double c) {
  const Complex den = kI * u - c;
  return {c / den, kI * u / den};
}

// iu/(iu - 1/λ), -(1/λ)/(iu - 1/λ)
CoefficientPair pdp_form(Complex u, double lambda) {
  const double inv = 1.0 / lambda;
  const Complex den = kI * u - inv;
  return {kI * u / den, -inv / den};
}

struct Fraction {
  Complex a, b, den;
};

Fraction delta_fraction(double u, double c) { return {c, kI * u, kI * u - c}; }

Fraction pdp_fraction(double u, double lambda) {
  const double inv = 1.0 / lambda;
  return {kI * u, -inv, kI * u - inv};
}

// n/d as n·conj(d)/|d|², so n == ±d gives exactly ±1.
Complex divide(Complex n, Complex d) {
  const double norm = d.real() * d.real() + d.imag() * d.imag();
  return {(n.real() * d.real() + n.imag() * d.imag()) / norm, (n.imag() * d.real() - n.real() * d.imag()) / norm};
}

}  // namespace

std::string to_string(Model model) { return model == Model::Delta ? "delta" : "pdp"; }

Model parse_model(const std::string& text) {
  if (text == "delta") return Model::Delta;
  if (text == "pdp") return Model::Pdp;
  throw DomainError("unknown model '" + text + "' (expected delta or pdp)");
}

ModelSpec::ModelSpec(Model model, double pair_coupling, double boundary_coupling)
    : model_(model), pair_(pair_coupling), boundary_(boundary_coupling) {
  if (!(pair_ > 0.0) || !std::isfinite(pair_) || !(boundary_ > 0.0) || !std::isfinite(boundary_)) {
    throw DomainError("couplings must be finite and strictly positive");
  }
}

std::string ModelSpec::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (model_ == Model::Delta) {
    os << "delta(c1=" << pair_ << ", c2=" << boundary_ << ")";
  } else {
    os << "pdp(lambda1=" << pair_ << ", lambda2=" << boundary_ << ")";
  }
  return os.str();
}

CoefficientPair coeffs_delta(double u, double c1) { return delta_form(u, c1); }
CoefficientPair coeffs_pdp(double u, double lambda1) { return pdp_form(u, lambda1); }

CoefficientPair pair_coeffs(double u, const ModelSpec& spec) {
  return detail::pair_coeffs_complex(u, spec);
}

CoefficientPair boundary_coeffs(double u, const ModelSpec& spec) {
  return detail::boundary_coeffs_complex(u, spec);
}

namespace detail {

CoefficientPair pair_coeffs_complex(Complex u, const ModelSpec& spec) {
  return spec.model() == Model::Delta ? delta_form(u, spec.pair_coupling())
                                      : pdp_form(u, spec.pair_coupling());
}

CoefficientPair boundary_coeffs_complex(Complex u, const ModelSpec& spec) {
  return spec.model() == Model::Delta ? delta_form(u, spec.boundary_coupling())
                                      : pdp_form(u, spec.boundary_coupling());
}

}  // namespace detail

RepOperator RepOperator::affine(Complex a, Complex b, Generator g) {
  RepOperator op;
  op.factors_.push_back({a, b, g});
  return op;
}

RepOperator RepOperator::fraction(Complex a, Complex b, Complex den, Generator g) {
  RepOperator op;
  op.factors_.push_back({a, b, g, den});
  return op;
}

RepOperator RepOperator::operator*(const RepOperator& rhs) const {
  RepOperator out;
  out.factors_.reserve(factors_.size() + rhs.factors_.size());
  out.factors_.insert(out.factors_.end(), factors_.begin(), factors_.end());
  out.factors_.insert(out.factors_.end(), rhs.factors_.begin(), rhs.factors_.end());
  return out;
}

std::vector<Complex> RepOperator::apply(const Representation& rep, std::span<const Complex> v) const {
  if (v.size() != rep.dimension()) {
    throw DimensionError("vector length " + std::to_string(v.size()) + " != representation dimension " +
                         std::to_string(rep.dimension()));
  }
  std::vector<Complex> current(v.begin(), v.end());
  if (rep.is_scalar()) {
    const Sector s = rep.sector();
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
      const double eps = it->generator.is_reflection() ? s.reflection_sign : s.transposition_sign;
      current[0] *= divide(it->a + eps * it->b, it->den);
    }
    return current;
  }
  std::vector<Complex> moved(v.size());
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    rep.apply_generator(it->generator, current, moved);
    const Complex a = it->a / it->den, b = it->b / it->den;
    for (std::size_t q = 0; q < current.size(); ++q) current[q] = a * current[q] + b * moved[q];
  }
  return current;
}

Complex RepOperator::scalar_value(const Representation& rep) const {
  if (!rep.is_scalar()) throw UsageError("scalar_value needs a one-dimensional representation");
  const Complex one{1.0, 0.0};
  return apply(rep, std::span<const Complex>(&one, 1))[0];
}

RepOperator Y_op(int i, double u, const ModelSpec& spec, const Representation& rep) {
  const Generator t = Generator::T(i);
  if (!t.valid_for(rep.rank())) {
    throw IndexError("Y_" + std::to_string(i) + " needs 1 <= i <= N-1 (N=" + std::to_string(rep.rank()) + ")");
  }
  const double c = spec.pair_coupling();
  const auto f = spec.model() == Model::Delta ? delta_fraction(u, c) : pdp_fraction(u, c);
  return RepOperator::fraction(f.a, f.b, f.den, t);
}

RepOperator Z_op(double u, const ModelSpec& spec, const Representation& /*rep*/) {
  const double c = spec.boundary_coupling();
  const auto f = spec.model() == Model::Delta ? delta_fraction(u, c) : pdp_fraction(u, c);
  return RepOperator::fraction(f.a, f.b, f.den, Generator::R1());
}

}  // namespace cnbethe
