#ifndef GAUGEKIN_EWMODEL_HPP
#define GAUGEKIN_EWMODEL_HPP

#include "gaugekin/verify.hpp"

namespace gaugekin::ew {

/// Conventional hypercharge assignments, cross-validated by the
/// residual-symmetry oracle (external convention, not derived here).
struct Hypercharges {
  double lepton_doublet = -1.0;
  double right_singlet = -2.0;
  double higgs = 1.0;
};

/// SU(2) x U(1) instantiation: left doublet, right singlet, Higgs doublet
/// with a vacuum expectation value.
struct EWModel {
  ModelSpec spec;
  double vev_scale = 1.0;
  Hypercharges hypercharges;
};

EWModel build_ew_model(double g, double gprime, double vev, Hypercharges y = {});

/// xi_i(x), eta(x) fluctuation fields around the expectation value.
struct HiggsParam {
  std::array<FourierScalar, 3> xi;
  FourierScalar eta;
  double upsilon = 1.0;
};

/// (1/sqrt2) exp[(2i/upsilon) xi_i T_i] (0, upsilon+eta)^T -- the exact form.
Eigen::Vector2cd higgs_from_param(const HiggsParam& p, const Point4& x);

/// (1/sqrt2) (xi2 + i xi1, upsilon + eta - i xi3)^T -- first order in xi.
Eigen::Vector2cd higgs_linearized(const HiggsParam& p, const Point4& x);

/// (0, upsilon/sqrt2)^T.
Eigen::Vector2cd vev(double upsilon);

Eigen::Matrix4cd chiral_projector(Chirality side, const DiracAlgebra& dirac);

/// True when the model carries an SU(2) left factor, an abelian right
/// factor, and a bifundamental scalar with a nonzero expectation value.
bool is_ew_shaped(const ModelSpec& m);

/// The expectation value must be fixed by exactly the parameter line
/// alpha_1 = alpha_2 = 0, g alpha_3 = g' Y_phi beta; 100 random other
/// directions must all move it.
CheckResult residual_symmetry_check(const ModelSpec& m, const VerifyOptions& opt);

/// Field-strength pair (left tensor, abelian tensor) assembled from the
/// component fields through the structure constants -- an independent route
/// from the matrix-commutator evaluator.
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> ew_tensors_at(const ModelSpec& m,
                                                            const GaugeConfig& cfg, int mu,
                                                            int nu, const Point4& x);

}  // namespace gaugekin::ew

#endif
