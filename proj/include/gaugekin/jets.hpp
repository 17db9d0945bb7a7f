#ifndef GAUGEKIN_JETS_HPP
#define GAUGEKIN_JETS_HPP

#include <Eigen/Dense>
#include <array>

#include "gaugekin/fields.hpp"

namespace gaugekin {

/// Symmetric pair index for second derivatives: (mu,nu) with mu <= nu.
inline constexpr int jet_pair_index(int mu, int nu) {
  if (mu > nu) std::swap(mu, nu);
  constexpr int base[4] = {0, 4, 7, 9};
  return base[mu] + (nu - mu);
}

/// 2-jet of a matrix-valued spacetime function at one point: value, the four
/// first partials, and the ten distinct second partials.  Jets with the
/// Leibniz product form an associative algebra, so compositions (products,
/// exponentials) propagate exact derivatives with no discretization error.
struct Jet {
  int order = 0;  // 0: value, 1: +first, 2: +second
  Eigen::MatrixXcd v;
  std::array<Eigen::MatrixXcd, 4> d;
  std::array<Eigen::MatrixXcd, 10> dd;

  static Jet zero(int rows, int cols, int order);
  static Jet identity(int n, int order);
  /// Spacetime-constant value (all derivatives vanish).
  static Jet constant(const Eigen::MatrixXcd& value, int order);

  int rows() const { return static_cast<int>(v.rows()); }
  int cols() const { return static_cast<int>(v.cols()); }

  const Eigen::MatrixXcd& d2(int mu, int nu) const { return dd[static_cast<size_t>(jet_pair_index(mu, nu))]; }
  Eigen::MatrixXcd& d2(int mu, int nu) { return dd[static_cast<size_t>(jet_pair_index(mu, nu))]; }

  /// Largest entry magnitude over all stored components.
  double max_abs() const;
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator-(const Jet& a);
Jet operator*(const Jet& a, const Jet& b);  // Leibniz to the common order
Jet operator*(cdouble s, const Jet& a);

/// Conjugate transpose, componentwise (daggers commute with partials).
Jet jet_adjoint(const Jet& a);

/// exp in the jet algebra via scaling-and-squaring; yields the exact 2-jet
/// of x -> exp(A(x)) when fed the 2-jet of A.
Jet jet_exp(const Jet& a);

/// The jet of the coordinate derivative d_mu f: value f.d[mu], first
/// derivatives f.dd[mu][*].  Output order is one below the input's.
Jet jet_partial(const Jet& a, int mu);

/// Per-point phase table e^{i k x_mu} shared by every scalar evaluated at x.
class PhaseTable {
 public:
  PhaseTable(const Point4& x, int max_mode);

  cdouble phase(const Mode4& k) const;
  const Point4& point() const { return x_; }

 private:
  Point4 x_;
  int max_mode_;
  std::array<std::vector<cdouble>, 4> axis_;  // index k + max_mode_
};

/// 1x1 jet of a Fourier scalar: exact value/derivative sums in one pass.
Jet scalar_jet(const FourierScalar& f, const PhaseTable& pt, int order);

/// Jet of a matrix whose (r,c) entry is entries[r*cols+c], all sharing one
/// phase table.
Jet matrix_jet(std::span<const FourierScalar> entries, int rows, int cols,
               const PhaseTable& pt, int order);

}  // namespace gaugekin

#endif
