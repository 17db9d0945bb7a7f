#ifndef GAUGEKIN_DIRAC_HPP
#define GAUGEKIN_DIRAC_HPP

#include <Eigen/Dense>
#include <array>

namespace gaugekin {

/// Gamma matrices in the Dirac basis with metric diag(+,-,-,-):
/// gamma^0 = diag(I,-I), gamma^i = offdiag(sigma_i, -sigma_i),
/// gamma5 = i gamma^0 gamma^1 gamma^2 gamma^3.
struct DiracAlgebra {
  std::array<Eigen::Matrix4cd, 4> gamma;
  Eigen::Matrix4cd gamma5;
  std::array<double, 4> metric{1.0, -1.0, -1.0, -1.0};

  static const DiracAlgebra& standard();

  /// Max deviation from {g^mu,g^nu} = 2 eta^{mu nu}, hermiticity pattern,
  /// and (gamma5)^2 = I.
  double clifford_defect() const;
};

}  // namespace gaugekin

#endif
