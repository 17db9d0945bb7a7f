#include "gaugekin/liealg.hpp"

#include <cmath>

namespace gaugekin {

namespace {

const cdouble kI(0.0, 1.0);

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

AlgebraBasis su_basis(int n) {
  require(n >= 2, "su_basis: n must be >= 2");
  AlgebraBasis basis;
  basis.kind = GroupKind::SU;
  basis.n = n;
  basis.generators.reserve(static_cast<size_t>(n) * n - 1);

  // Symmetric pairs: (E_jk + E_kj)/2.
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
      t(j, k) = 0.5;
      t(k, j) = 0.5;
      basis.generators.push_back(std::move(t));
    }
  // Antisymmetric pairs: (-i E_jk + i E_kj)/2.
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
      t(j, k) = -0.5 * kI;
      t(k, j) = 0.5 * kI;
      basis.generators.push_back(std::move(t));
    }
  // Diagonal: (E_11 + .. + E_ll - l E_{l+1,l+1}) / sqrt(2 l (l+1)).
  for (int l = 1; l < n; ++l) {
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
    const double norm = 1.0 / std::sqrt(2.0 * l * (l + 1));
    for (int j = 0; j < l; ++j) t(j, j) = norm;
    t(l, l) = -static_cast<double>(l) * norm;
    basis.generators.push_back(std::move(t));
  }
  return basis;
}

AlgebraBasis u1_basis(double charge) {
  AlgebraBasis basis;
  basis.kind = GroupKind::U1;
  basis.n = 1;
  basis.charge = charge;
  Eigen::MatrixXcd t(1, 1);
  t(0, 0) = charge / 2.0;
  basis.generators.push_back(std::move(t));
  return basis;
}

StructureConstants structure_constants(const AlgebraBasis& basis) {
  const int d = basis.dim();
  StructureConstants sc;
  sc.dim = d;
  sc.f.assign(static_cast<size_t>(d) * d * d, 0.0);
  if (basis.abelian()) return sc;

  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      if (a == b) continue;
      const Eigen::MatrixXcd comm = basis.generators[a] * basis.generators[b] -
                                    basis.generators[b] * basis.generators[a];
      for (int c = 0; c < d; ++c) {
        const cdouble tr = (comm * basis.generators[c]).trace();
        const cdouble f = -2.0 * kI * tr;
        ensure(std::abs(f.imag()) < 1e-12, "structure_constants: non-real coefficient");
        sc.at(a, b, c) = f.real();
      }
    }
  return sc;
}

Eigen::MatrixXcd mat_exp_taylor(const Eigen::MatrixXcd& A, int order, int squarings) {
  require(A.rows() == A.cols(), "mat_exp: matrix must be square");
  require(A.allFinite(), "mat_exp: entries must be finite");
  const int n = static_cast<int>(A.rows());
  const double scale = std::ldexp(1.0, -squarings);

  Eigen::MatrixXcd x = A * scale;
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd sum = term;
  for (int k = 1; k <= order; ++k) {
    term = (term * x) / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

Eigen::MatrixXcd mat_exp(const Eigen::MatrixXcd& A) {
  require(A.allFinite(), "mat_exp: entries must be finite");
  // Scale so the 1-norm drops below 1/2; order 16 leaves the truncation
  // remainder near 1e-20 at that radius.
  const double norm = A.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = std::min(40, static_cast<int>(std::ceil(std::log2(norm / 0.5))));
  return mat_exp_taylor(A, 16, squarings);
}

Eigen::MatrixXcd group_element(const AlgebraBasis& basis, std::span<const double> params) {
  require(static_cast<int>(params.size()) == basis.dim(),
          "group_element: parameter count must match generator count");
  Eigen::MatrixXcd exponent = Eigen::MatrixXcd::Zero(basis.n, basis.n);
  for (int a = 0; a < basis.dim(); ++a) exponent += params[a] * basis.generators[a];
  return mat_exp(kI * basis.coupling * exponent);
}

BasisDefects basis_defects(const AlgebraBasis& basis) {
  BasisDefects d;
  const int dim = basis.dim();
  for (const auto& t : basis.generators) {
    d.hermiticity = std::max(d.hermiticity, max_abs(Eigen::MatrixXcd(t - t.adjoint())));
    if (!basis.abelian())
      d.tracelessness = std::max(d.tracelessness, std::abs(t.trace()));
  }
  if (basis.abelian()) return d;

  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      const double expect = (a == b) ? 0.5 : 0.0;
      const cdouble tr = (basis.generators[a] * basis.generators[b]).trace();
      d.orthonormality = std::max(d.orthonormality, std::abs(tr - expect));
    }

  const StructureConstants sc = structure_constants(basis);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      Eigen::MatrixXcd rebuilt = Eigen::MatrixXcd::Zero(basis.n, basis.n);
      for (int c = 0; c < dim; ++c) rebuilt += kI * sc.at(a, b, c) * basis.generators[c];
      const Eigen::MatrixXcd comm = basis.generators[a] * basis.generators[b] -
                                    basis.generators[b] * basis.generators[a];
      d.closure = std::max(d.closure, max_abs(Eigen::MatrixXcd(comm - rebuilt)));
      for (int c = 0; c < dim; ++c) {
        d.antisymmetry = std::max(d.antisymmetry, std::abs(sc.at(a, b, c) + sc.at(b, a, c)));
        d.antisymmetry = std::max(d.antisymmetry, std::abs(sc.at(a, b, c) + sc.at(a, c, b)));
      }
    }

  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c)
        for (int e = 0; e < dim; ++e) {
          double s = 0.0;
          for (int dd = 0; dd < dim; ++dd)
            s += sc.at(a, dd, e) * sc.at(b, c, dd) + sc.at(b, dd, e) * sc.at(c, a, dd) +
                 sc.at(c, dd, e) * sc.at(a, b, dd);
          d.jacobi = std::max(d.jacobi, std::abs(s));
        }
  return d;
}

}  // namespace gaugekin
