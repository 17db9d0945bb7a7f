#include "gaugekin/jets.hpp"

#include <cmath>

namespace gaugekin {

namespace {
const cdouble kI(0.0, 1.0);
}

Jet Jet::zero(int rows, int cols, int order) {
  Jet j;
  j.order = order;
  j.v = Eigen::MatrixXcd::Zero(rows, cols);
  if (order >= 1)
    for (auto& m : j.d) m = Eigen::MatrixXcd::Zero(rows, cols);
  if (order >= 2)
    for (auto& m : j.dd) m = Eigen::MatrixXcd::Zero(rows, cols);
  return j;
}

Jet Jet::identity(int n, int order) {
  Jet j = zero(n, n, order);
  j.v = Eigen::MatrixXcd::Identity(n, n);
  return j;
}

Jet Jet::constant(const Eigen::MatrixXcd& value, int order) {
  Jet j = zero(static_cast<int>(value.rows()), static_cast<int>(value.cols()), order);
  j.v = value;
  return j;
}

double Jet::max_abs() const {
  double m = v.cwiseAbs().maxCoeff();
  if (order >= 1)
    for (const auto& x : d) m = std::max(m, x.cwiseAbs().maxCoeff());
  if (order >= 2)
    for (const auto& x : dd) m = std::max(m, x.cwiseAbs().maxCoeff());
  return m;
}

Jet operator+(const Jet& a, const Jet& b) {
  Jet out;
  out.order = std::min(a.order, b.order);
  out.v = a.v + b.v;
  if (out.order >= 1)
    for (int mu = 0; mu < 4; ++mu) out.d[mu] = a.d[mu] + b.d[mu];
  if (out.order >= 2)
    for (int p = 0; p < 10; ++p) out.dd[p] = a.dd[p] + b.dd[p];
  return out;
}

Jet operator-(const Jet& a, const Jet& b) {
  Jet out;
  out.order = std::min(a.order, b.order);
  out.v = a.v - b.v;
  if (out.order >= 1)
    for (int mu = 0; mu < 4; ++mu) out.d[mu] = a.d[mu] - b.d[mu];
  if (out.order >= 2)
    for (int p = 0; p < 10; ++p) out.dd[p] = a.dd[p] - b.dd[p];
  return out;
}

Jet operator-(const Jet& a) { return cdouble(-1.0) * a; }

Jet operator*(const Jet& a, const Jet& b) {
  Jet out;
  out.order = std::min(a.order, b.order);
  out.v = a.v * b.v;
  if (out.order >= 1)
    for (int mu = 0; mu < 4; ++mu) out.d[mu] = a.d[mu] * b.v + a.v * b.d[mu];
  if (out.order >= 2)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu; nu < 4; ++nu)
        out.d2(mu, nu) = a.d2(mu, nu) * b.v + a.d[mu] * b.d[nu] + a.d[nu] * b.d[mu] +
                         a.v * b.d2(mu, nu);
  return out;
}

Jet operator*(cdouble s, const Jet& a) {
  Jet out;
  out.order = a.order;
  out.v = s * a.v;
  if (out.order >= 1)
    for (int mu = 0; mu < 4; ++mu) out.d[mu] = s * a.d[mu];
  if (out.order >= 2)
    for (int p = 0; p < 10; ++p) out.dd[p] = s * a.dd[p];
  return out;
}

Jet jet_adjoint(const Jet& a) {
  Jet out;
  out.order = a.order;
  out.v = a.v.adjoint();
  if (out.order >= 1)
    for (int mu = 0; mu < 4; ++mu) out.d[mu] = a.d[mu].adjoint();
  if (out.order >= 2)
    for (int p = 0; p < 10; ++p) out.dd[p] = a.dd[p].adjoint();
  return out;
}

Jet jet_exp(const Jet& a) {
  require(a.v.rows() == a.v.cols(), "jet_exp: matrix must be square");
  const int n = a.rows();
  // Scale by the largest component magnitude so the series converges at the
  // same radius as the plain matrix exponential.
  const double norm = a.max_abs() * n;
  int squarings = 0;
  if (norm > 0.5) squarings = std::min(40, static_cast<int>(std::ceil(std::log2(norm / 0.5))));
  const cdouble scale(std::ldexp(1.0, -squarings));

  const Jet x = scale * a;
  Jet term = Jet::identity(n, a.order);
  Jet sum = term;
  for (int k = 1; k <= 16; ++k) {
    term = cdouble(1.0 / k) * (term * x);
    sum = sum + term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

Jet jet_partial(const Jet& a, int mu) {
  require(mu >= 0 && mu < 4, "jet_partial: Lorentz index must be in 0..3");
  require(a.order >= 1, "jet_partial: needs at least a 1-jet");
  Jet out;
  out.order = a.order - 1;
  out.v = a.d[mu];
  if (out.order >= 1)
    for (int nu = 0; nu < 4; ++nu) out.d[nu] = a.d2(mu, nu);
  return out;
}

PhaseTable::PhaseTable(const Point4& x, int max_mode) : x_(x), max_mode_(max_mode) {
  for (int mu = 0; mu < 4; ++mu) {
    auto& row = axis_[mu];
    row.resize(static_cast<size_t>(2 * max_mode_ + 1));
    for (int k = -max_mode_; k <= max_mode_; ++k)
      row[static_cast<size_t>(k + max_mode_)] = std::exp(kI * (k * x[mu]));
  }
}

cdouble PhaseTable::phase(const Mode4& k) const {
  cdouble p = axis_[0][static_cast<size_t>(k[0] + max_mode_)];
  p *= axis_[1][static_cast<size_t>(k[1] + max_mode_)];
  p *= axis_[2][static_cast<size_t>(k[2] + max_mode_)];
  p *= axis_[3][static_cast<size_t>(k[3] + max_mode_)];
  return p;
}

Jet scalar_jet(const FourierScalar& f, const PhaseTable& pt, int order) {
  Jet j = Jet::zero(1, 1, order);
  cdouble v(0.0);
  std::array<cdouble, 4> d{};
  std::array<cdouble, 10> dd{};
  for (const auto& [k, c] : f.terms()) {
    const cdouble p = c * pt.phase(k);
    v += p;
    if (order >= 1) {
      const cdouble ip = kI * p;
      for (int mu = 0; mu < 4; ++mu) d[mu] += static_cast<double>(k[mu]) * ip;
      if (order >= 2)
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = mu; nu < 4; ++nu)
            dd[static_cast<size_t>(jet_pair_index(mu, nu))] -=
                static_cast<double>(k[mu] * k[nu]) * p;
    }
  }
  if (f.is_real()) {
    ensure(std::abs(v.imag()) < 1e-13, "scalar_jet: real field evaluated non-real");
    v = cdouble(v.real(), 0.0);
  }
  j.v(0, 0) = v;
  if (order >= 1)
    for (int mu = 0; mu < 4; ++mu) j.d[mu](0, 0) = d[mu];
  if (order >= 2)
    for (int p = 0; p < 10; ++p) j.dd[p](0, 0) = dd[p];
  return j;
}

Jet matrix_jet(std::span<const FourierScalar> entries, int rows, int cols,
               const PhaseTable& pt, int order) {
  require(static_cast<int>(entries.size()) == rows * cols, "matrix_jet: entry count mismatch");
  Jet j = Jet::zero(rows, cols, order);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const Jet s = scalar_jet(entries[static_cast<size_t>(r * cols + c)], pt, order);
      j.v(r, c) = s.v(0, 0);
      if (order >= 1)
        for (int mu = 0; mu < 4; ++mu) j.d[mu](r, c) = s.d[mu](0, 0);
      if (order >= 2)
        for (int p = 0; p < 10; ++p) j.dd[p](r, c) = s.dd[p](0, 0);
    }
  return j;
}

}  // namespace gaugekin
