#ifndef GAUGEKIN_FIELDS_HPP
#define GAUGEKIN_FIELDS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "gaugekin/common.hpp"

namespace gaugekin {

/// A spacetime point on the periodic 4-torus [0, 2pi)^4.
struct Point4 {
  std::array<double, 4> x{0.0, 0.0, 0.0, 0.0};

  Point4() = default;
  Point4(double x0, double x1, double x2, double x3);

  double operator[](int mu) const { return x[static_cast<size_t>(mu)]; }
};

using Mode4 = std::array<int, 4>;

/// Truncated Fourier series sum_k c_k exp(i k.x).  A real-flagged scalar
/// keeps c_{-k} = conj(c_k); construction symmetrizes the input terms.
/// Terms are stored sorted by mode, which fixes the summation order.
class FourierScalar {
 public:
  using Term = std::pair<Mode4, cdouble>;

  FourierScalar() = default;

  static FourierScalar constant(cdouble c, bool real = false);
  static FourierScalar from_terms(std::map<Mode4, cdouble> terms, bool real);

  bool is_real() const { return real_; }
  const std::vector<Term>& terms() const { return terms_; }

  /// Fixed-order coefficient sum; real-flagged scalars are checked to have
  /// |Im| < 1e-13 and return exactly real values.
  cdouble eval(const Point4& x) const;

  /// Exact derivative: c_k -> i k_mu c_k.  Realness is preserved.
  FourierScalar partial(int mu) const;

  FourierScalar scaled(double s) const;

  int max_abs_mode() const;

  bool operator==(const FourierScalar& o) const {
    return real_ == o.real_ && terms_ == o.terms_;
  }

 private:
  std::vector<Term> terms_;  // sorted by mode
  bool real_ = false;
};

/// Multi-indexed family of Fourier scalars (spinor/internal/Lorentz slots),
/// stored row-major over the index extents.
class ComponentField {
 public:
  ComponentField() = default;
  ComponentField(std::vector<int> shape);

  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  size_t size() const { return entries_.size(); }

  const FourierScalar& at(std::span<const int> idx) const;
  FourierScalar& at(std::span<const int> idx);
  const FourierScalar& flat(size_t i) const { return entries_[i]; }
  FourierScalar& flat(size_t i) { return entries_[i]; }
  const std::vector<FourierScalar>& entries() const { return entries_; }

  /// Largest |k_mu| over all stored modes (for phase-table sizing).
  int max_abs_mode() const;

  /// Evaluates every entry; the result is indexed like the field.
  std::vector<cdouble> eval(const Point4& x) const;

  ComponentField partial(int mu) const;

  size_t flat_index(std::span<const int> idx) const;

 private:
  std::vector<int> shape_;
  std::vector<FourierScalar> entries_;
};

/// Deterministic uniform generator with a fixed bit-to-double mapping, so
/// seeded draws are identical across platforms and standard libraries.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed);

  std::uint64_t next_u64();
  double uniform01();                    // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  cdouble in_disc(double radius);

  /// Stream derivation for independent per-check draws.
  DetRng fork(std::uint64_t salt) const;

 private:
  std::uint64_t state_;
  std::uint64_t seed_;
};

/// All modes with every component in [-K, K], lexicographic.
std::vector<Mode4> mode_cube(int K);

/// Random scalar with |c_k| <= amplitude and sup |f| <= amplitude (the
/// per-mode magnitudes carry a 2^-|k|_1 decay, normalized over the cube).
FourierScalar random_scalar(DetRng& rng, int K, double amplitude, bool real);

/// Deterministic random field over the given shape; real-flagged entries
/// satisfy the conjugate-symmetry invariant.
ComponentField random_field(std::uint64_t seed, std::vector<int> shape, int K,
                            double amplitude, bool real);

/// Seeded uniform points in [0,2pi)^4, fixed order.
std::vector<Point4> sample_points(std::uint64_t seed, int count);

}  // namespace gaugekin

#endif
