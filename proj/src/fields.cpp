#include "gaugekin/fields.hpp"

#include <cmath>

namespace gaugekin {

namespace {

const cdouble kI(0.0, 1.0);

double wrap_2pi(double v) {
  double r = std::fmod(v, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

Mode4 negated(const Mode4& k) { return {-k[0], -k[1], -k[2], -k[3]}; }

int l1_norm(const Mode4& k) {
  return std::abs(k[0]) + std::abs(k[1]) + std::abs(k[2]) + std::abs(k[3]);
}

}  // namespace

Point4::Point4(double x0, double x1, double x2, double x3)
    : x{wrap_2pi(x0), wrap_2pi(x1), wrap_2pi(x2), wrap_2pi(x3)} {}

FourierScalar FourierScalar::constant(cdouble c, bool real) {
  std::map<Mode4, cdouble> terms;
  terms[{0, 0, 0, 0}] = c;
  return from_terms(std::move(terms), real);
}

FourierScalar FourierScalar::from_terms(std::map<Mode4, cdouble> terms, bool real) {
  for (const auto& [k, c] : terms)
    require(std::isfinite(c.real()) && std::isfinite(c.imag()),
            "FourierScalar: coefficients must be finite");
  FourierScalar f;
  f.real_ = real;
  if (real) {
    // Symmetrize: c_k <- (c_k + conj(c_{-k})) / 2, stored for both k and -k.
    std::map<Mode4, cdouble> sym;
    for (const auto& [k, c] : terms) {
      const auto it = terms.find(negated(k));
      const cdouble mate = (it == terms.end()) ? cdouble(0.0) : it->second;
      sym[k] = 0.5 * (c + std::conj(mate));
      sym[negated(k)] = std::conj(sym[k]);
    }
    terms = std::move(sym);
  }
  f.terms_.assign(terms.begin(), terms.end());
  return f;
}

cdouble FourierScalar::eval(const Point4& x) const {
  cdouble sum(0.0);
  for (const auto& [k, c] : terms_) {
    const double phase = k[0] * x[0] + k[1] * x[1] + k[2] * x[2] + k[3] * x[3];
    sum += c * std::exp(kI * phase);
  }
  if (real_) {
    ensure(std::abs(sum.imag()) < 1e-13, "FourierScalar: real field evaluated non-real");
    sum = cdouble(sum.real(), 0.0);
  }
  return sum;
}

FourierScalar FourierScalar::partial(int mu) const {
  require(mu >= 0 && mu < 4, "partial: Lorentz index must be in 0..3");
  FourierScalar out;
  out.real_ = real_;
  out.terms_.reserve(terms_.size());
  for (const auto& [k, c] : terms_)
    out.terms_.emplace_back(k, kI * static_cast<double>(k[mu]) * c);
  return out;
}

FourierScalar FourierScalar::scaled(double s) const {
  FourierScalar out;
  out.real_ = real_;
  out.terms_.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.terms_.emplace_back(k, s * c);
  return out;
}

int FourierScalar::max_abs_mode() const {
  int m = 0;
  for (const auto& [k, c] : terms_)
    for (int mu = 0; mu < 4; ++mu) m = std::max(m, std::abs(k[mu]));
  return m;
}

ComponentField::ComponentField(std::vector<int> shape) : shape_(std::move(shape)) {
  size_t total = 1;
  for (int e : shape_) {
    require(e > 0, "ComponentField: extents must be positive");
    total *= static_cast<size_t>(e);
  }
  entries_.resize(total);
}

size_t ComponentField::flat_index(std::span<const int> idx) const {
  require(idx.size() == shape_.size(), "ComponentField: index rank mismatch");
  size_t flat = 0;
  for (size_t d = 0; d < shape_.size(); ++d) {
    require(idx[d] >= 0 && idx[d] < shape_[d], "ComponentField: index out of range");
    flat = flat * static_cast<size_t>(shape_[d]) + static_cast<size_t>(idx[d]);
  }
  return flat;
}

const FourierScalar& ComponentField::at(std::span<const int> idx) const {
  return entries_[flat_index(idx)];
}

FourierScalar& ComponentField::at(std::span<const int> idx) {
  return entries_[flat_index(idx)];
}

std::vector<cdouble> ComponentField::eval(const Point4& x) const {
  std::vector<cdouble> out(entries_.size());
  for (size_t i = 0; i < entries_.size(); ++i) out[i] = entries_[i].eval(x);
  return out;
}

ComponentField ComponentField::partial(int mu) const {
  ComponentField out(shape_);
  for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].partial(mu);
  return out;
}

int ComponentField::max_abs_mode() const {
  int m = 0;
  for (const auto& e : entries_) m = std::max(m, e.max_abs_mode());
  return m;
}

DetRng::DetRng(std::uint64_t seed) : state_(seed), seed_(seed) {
  // splitmix64 warm-up so nearby seeds decorrelate
  next_u64();
  next_u64();
}

std::uint64_t DetRng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double DetRng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double DetRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

cdouble DetRng::in_disc(double radius) {
  const double r = radius * std::sqrt(uniform01());
  const double theta = uniform(0.0, two_pi);
  return cdouble(r * std::cos(theta), r * std::sin(theta));
}

DetRng DetRng::fork(std::uint64_t salt) const {
  DetRng child(seed_ ^ (salt * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull));
  return child;
}

std::vector<Mode4> mode_cube(int K) {
  std::vector<Mode4> modes;
  const int w = 2 * K + 1;
  modes.reserve(static_cast<size_t>(w) * w * w * w);
  for (int k0 = -K; k0 <= K; ++k0)
    for (int k1 = -K; k1 <= K; ++k1)
      for (int k2 = -K; k2 <= K; ++k2)
        for (int k3 = -K; k3 <= K; ++k3) modes.push_back({k0, k1, k2, k3});
  return modes;
}

FourierScalar random_scalar(DetRng& rng, int K, double amplitude, bool real) {
  require(K >= 0, "random_scalar: K must be >= 0");
  require(amplitude >= 0.0, "random_scalar: amplitude must be >= 0");

  const std::vector<Mode4> modes = mode_cube(K);
  double weight_sum = 0.0;
  for (const auto& k : modes) weight_sum += std::ldexp(1.0, -l1_norm(k));

  std::map<Mode4, cdouble> terms;
  for (const auto& k : modes) {
    const double w = std::ldexp(1.0, -l1_norm(k)) / weight_sum;
    if (real) {
      // draw only the zero mode and the lexicographically positive half
      const Mode4 zero{0, 0, 0, 0};
      if (k == zero) {
        terms[k] = cdouble(rng.uniform(-amplitude, amplitude) * w, 0.0);
      } else if (k > negated(k)) {
        const cdouble c = rng.in_disc(amplitude) * w;
        terms[k] = c;
        terms[negated(k)] = std::conj(c);
      }
    } else {
      terms[k] = rng.in_disc(amplitude) * w;
    }
  }
  return FourierScalar::from_terms(std::move(terms), real);
}

ComponentField random_field(std::uint64_t seed, std::vector<int> shape, int K,
                            double amplitude, bool real) {
  DetRng rng(seed);
  ComponentField field(std::move(shape));
  for (size_t i = 0; i < field.size(); ++i)
    field.flat(i) = random_scalar(rng, K, amplitude, real);
  return field;
}

std::vector<Point4> sample_points(std::uint64_t seed, int count) {
  require(count >= 1, "sample_points: count must be >= 1");
  DetRng rng(seed);
  std::vector<Point4> pts;
  pts.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double a = rng.uniform(0.0, two_pi);
    const double b = rng.uniform(0.0, two_pi);
    const double c = rng.uniform(0.0, two_pi);
    const double d = rng.uniform(0.0, two_pi);
    pts.emplace_back(a, b, c, d);
  }
  return pts;
}

}  // namespace gaugekin
