#include "gaugekin/dirac.hpp"

#include <algorithm>
#include <complex>

namespace gaugekin {

namespace {

using cd = std::complex<double>;
const cd I(0.0, 1.0);

DiracAlgebra build() {
  DiracAlgebra d;
  Eigen::Matrix2cd s1, s2, s3, id;
  s1 << 0, 1, 1, 0;
  s2 << 0, -I, I, 0;
  s3 << 1, 0, 0, -1;
  id.setIdentity();

  auto block = [](const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b, const Eigen::Matrix2cd& c,
                  const Eigen::Matrix2cd& e) {
    Eigen::Matrix4cd m;
    m << a, b, c, e;
    return m;
  };
  const Eigen::Matrix2cd z = Eigen::Matrix2cd::Zero();

  d.gamma[0] = block(id, z, z, -id);
  d.gamma[1] = block(z, s1, -s1, z);
  d.gamma[2] = block(z, s2, -s2, z);
  d.gamma[3] = block(z, s3, -s3, z);
  d.gamma5 = I * d.gamma[0] * d.gamma[1] * d.gamma[2] * d.gamma[3];
  return d;
}

}  // namespace

const DiracAlgebra& DiracAlgebra::standard() {
  static const DiracAlgebra d = build();
  return d;
}

double DiracAlgebra::clifford_defect() const {
  double worst = 0.0;
  const Eigen::Matrix4cd id = Eigen::Matrix4cd::Identity();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const double eta = (mu == nu) ? metric[static_cast<size_t>(mu)] : 0.0;
      const Eigen::Matrix4cd anti = gamma[static_cast<size_t>(mu)] * gamma[static_cast<size_t>(nu)] +
                                    gamma[static_cast<size_t>(nu)] * gamma[static_cast<size_t>(mu)];
      worst = std::max(worst, (anti - 2.0 * eta * id).cwiseAbs().maxCoeff());
    }
  worst = std::max(worst, (gamma5 * gamma5 - id).cwiseAbs().maxCoeff());
  worst = std::max(worst, (gamma[0].adjoint() - gamma[0]).cwiseAbs().maxCoeff());
  for (int i = 1; i < 4; ++i)
    worst = std::max(worst,
                     (gamma[static_cast<size_t>(i)].adjoint() + gamma[static_cast<size_t>(i)]).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace gaugekin
