#ifndef GAUGEKIN_LIEALG_HPP
#define GAUGEKIN_LIEALG_HPP

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "gaugekin/common.hpp"

namespace gaugekin {

enum class GroupKind { SU, U1 };

/// Generators, coupling, and (for U(1)) the charge eigenvalue of one factor
/// group.  Generators are Hermitian, trace-orthonormal to Tr(T_a T_b) =
/// delta_ab / 2; the single U(1) generator is the 1x1 matrix [charge/2].
struct AlgebraBasis {
  GroupKind kind = GroupKind::SU;
  int n = 2;  // matrix dimension (1 for U1)
  std::vector<Eigen::MatrixXcd> generators;
  double coupling = 1.0;
  double charge = 0.0;  // U1 only

  int dim() const { return static_cast<int>(generators.size()); }
  bool abelian() const { return kind == GroupKind::U1; }
};

/// Real antisymmetric coefficients f_abc with [T_a, T_b] = i f_abc T_c.
struct StructureConstants {
  int dim = 0;
  std::vector<double> f;  // dim^3, row-major (a,b,c)

  double at(int a, int b, int c) const { return f[(a * dim + b) * dim + c]; }
  double& at(int a, int b, int c) { return f[(a * dim + b) * dim + c]; }
};

/// Generalized Gell-Mann basis of su(n), normalized Tr(T_a T_b) = delta_ab/2.
/// Ordering: symmetric pairs (j<k) lexicographic, then antisymmetric pairs,
/// then diagonal.  For n=2 this is the Pauli basis sigma_i/2.
AlgebraBasis su_basis(int n);

/// Degenerate one-generator basis [charge/2] for a U(1) factor.
AlgebraBasis u1_basis(double charge);

/// Extracts f_abc = -2i Tr([T_a,T_b] T_c).  Zero for an abelian basis.
StructureConstants structure_constants(const AlgebraBasis& basis);

/// Taylor kernel with explicit scaling: exp(A) = (sum_{k<=order} (A/2^s)^k/k!)^(2^s).
Eigen::MatrixXcd mat_exp_taylor(const Eigen::MatrixXcd& A, int order, int squarings);

/// Matrix exponential, scaling-and-squaring.  Unitarity defect stays below
/// 1e-12 for anti-Hermitian inputs of spectral norm <= 10.
Eigen::MatrixXcd mat_exp(const Eigen::MatrixXcd& A);

/// exp(i g sum_a params_a T_a); unitary for any real params.
Eigen::MatrixXcd group_element(const AlgebraBasis& basis, std::span<const double> params);

/// Max-entry deviations from the basis contracts; all should be ~1e-13.
struct BasisDefects {
  double hermiticity = 0.0;
  double tracelessness = 0.0;     // SU only
  double orthonormality = 0.0;    // Tr(T_a T_b) - delta_ab/2
  double closure = 0.0;           // [T_a,T_b] - i f_abc T_c
  double antisymmetry = 0.0;      // f under index swaps
  double jacobi = 0.0;
};

BasisDefects basis_defects(const AlgebraBasis& basis);

}  // namespace gaugekin

#endif
