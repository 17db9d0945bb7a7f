#ifndef GAUGEKIN_GAUGE_HPP
#define GAUGEKIN_GAUGE_HPP

#include <memory>

#include "gaugekin/dirac.hpp"
#include "gaugekin/jets.hpp"
#include "gaugekin/model.hpp"

namespace gaugekin {

/// A spacetime field presented through its exact jets at a point.  Fourier
/// data and transformed fields (closures over the original data) share this
/// surface, so derived quantities never see the difference.
class FieldSource {
 public:
  virtual ~FieldSource() = default;

  virtual const FieldDecl& decl() const = 0;
  virtual int rows() const = 0;
  virtual int cols() const = 0;
  /// 4 for fermions (spinor index), 1 for scalars.
  virtual int spin_components() const = 0;
  virtual std::vector<Jet> jets(const Point4& x, int order) const = 0;
  virtual int max_order() const = 0;
};

/// A gauge potential presented as the jets of the matrix-valued W_mu(x).
/// For an abelian sector the matrix is the 1x1 phase action -i(charge/2)B_mu.
class PotentialSource {
 public:
  virtual ~PotentialSource() = default;

  virtual Sector sector() const = 0;
  virtual std::array<Jet, 4> w_jets(const Point4& x, int order, double charge) const = 0;
  virtual int max_order() const = 0;
};

/// Both sector potentials of one gauge configuration.
struct GaugePair {
  const PotentialSource& u;
  const PotentialSource& v;
};

// ---- concrete sources ----

class FourierFieldSource final : public FieldSource {
 public:
  FourierFieldSource(const ModelSpec& m, const FieldInstance& inst);

  const FieldDecl& decl() const override { return inst_->decl; }
  int rows() const override { return rows_; }
  int cols() const override { return cols_; }
  int spin_components() const override { return spin_; }
  std::vector<Jet> jets(const Point4& x, int order) const override;
  int max_order() const override { return 2; }

 private:
  const ModelSpec* model_;
  const FieldInstance* inst_;
  int rows_, cols_, spin_, max_mode_;
};

class TransformedFieldSource final : public FieldSource {
 public:
  TransformedFieldSource(const ModelSpec& m, const FieldSource& base, const TransformSpec& t);

  const FieldDecl& decl() const override { return base_->decl(); }
  int rows() const override { return base_->rows(); }
  int cols() const override { return base_->cols(); }
  int spin_components() const override { return base_->spin_components(); }
  std::vector<Jet> jets(const Point4& x, int order) const override;
  int max_order() const override { return std::min(base_->max_order(), 2); }

 private:
  const ModelSpec* model_;
  const FieldSource* base_;
  const TransformSpec* transform_;
  int max_mode_;
};

class FourierPotentialSource final : public PotentialSource {
 public:
  FourierPotentialSource(const ModelSpec& m, Sector s, const GaugeConfig& cfg);

  Sector sector() const override { return sector_; }
  std::array<Jet, 4> w_jets(const Point4& x, int order, double charge) const override;
  int max_order() const override { return 2; }

 private:
  const ModelSpec* model_;
  Sector sector_;
  const ComponentField* w_;
  int max_mode_;
};

/// The transformed potential: (1/g) U d(U+) + U W U+ on the left sector,
/// (1/g) d(V+) V + V+ W V on the right.  Derivatives of the group element
/// are exact (jets through the exponential), so the result is an analytic
/// evaluator up to first derivatives.
class TransformedPotentialSource final : public PotentialSource {
 public:
  TransformedPotentialSource(const ModelSpec& m, Sector s, const PotentialSource& base,
                             const TransformSpec& t);

  Sector sector() const override { return base_->sector(); }
  std::array<Jet, 4> w_jets(const Point4& x, int order, double charge) const override;
  int max_order() const override { return std::min(base_->max_order() - 1, 1); }

 private:
  const ModelSpec* model_;
  const PotentialSource* base_;
  const TransformSpec* transform_;
  int max_mode_;
};

// ---- group elements ----

/// Jet of exp(i g sum_a params_a(x) T_a); for an abelian basis the exponent
/// is i g beta(x) (charge/2).
Jet group_jet(const AlgebraBasis& basis, std::span<const FourierScalar> params, double charge,
              const PhaseTable& pt, int order);

/// Group element value at a point: group_element(basis, eval(params, x)).
Eigen::MatrixXcd unitary_at(const AlgebraBasis& basis, std::span<const FourierScalar> params,
                            const Point4& x);

// ---- pointwise operations ----

/// -i sum_a T_a W_{a,mu}(x); anti-Hermitian for real component fields.
Eigen::MatrixXcd w_matrix_at(const ModelSpec& m, const GaugeConfig& cfg, Sector s, int mu,
                             const Point4& x);

/// Covariant derivative of one spinor-component jet (order drops by one):
/// D_mu f = d_mu f + g_U W^U_mu f (left action) + g_V f W^V_mu (right action).
Jet covariant_jet(const ModelSpec& m, const FieldDecl& f, const Jet& comp,
                  const std::array<Jet, 4>& wu, const std::array<Jet, 4>& wv, int mu);

/// Multi-indexed values of D_mu applied to a field at x.
std::vector<Eigen::MatrixXcd> covariant_derivative_at(const ModelSpec& m,
                                                      const FieldSource& field,
                                                      const GaugePair& w, int mu,
                                                      const Point4& x);

/// F_mu_nu = d_mu W_nu - d_nu W_mu + s g [W_mu, W_nu]; s is +1 on the left
/// sector and the model's adjudicated sign on the right sector.  Abelian
/// sectors carry no commutator term.
Eigen::MatrixXcd field_strength_at(const ModelSpec& m, const PotentialSource& pot, int mu,
                                   int nu, const Point4& x);

/// Same, from precomputed first-order potential jets (shared across pairs).
Eigen::MatrixXcd field_strength_from_jets(const ModelSpec& m, Sector s,
                                          const std::array<Jet, 4>& w, int mu, int nu);

/// i Tr[psi-bar gamma^mu D_mu psi] with psi-bar = psi+ gamma^0; complex in
/// general (the invariance checks compare the complex density).
cdouble lagrangian_fermion_at(const ModelSpec& m, const DiracAlgebra& dirac,
                              const FieldSource& psi, const GaugePair& w, const Point4& x);

enum class GaugeTraceForm { Daggered, Plain };

/// (1/2) Tr[F+_{mu nu} F^{mu nu}] (daggered) or (1/2) Tr[F F] (plain), with
/// both Lorentz indices raised by the metric.
double lagrangian_gauge_at(const ModelSpec& m, const PotentialSource& pot, const Point4& x,
                           const std::array<double, 4>& metric,
                           GaugeTraceForm form = GaugeTraceForm::Daggered);

/// eta^{mu nu} Tr[(D_mu phi)+ (D_nu phi)].
double lagrangian_scalar_at(const ModelSpec& m, const FieldSource& phi, const GaugePair& w,
                            const Point4& x, const std::array<double, 4>& metric);

/// Fermion terms minus both gauge terms plus the scalar terms.
cdouble lagrangian_total_at(const ModelSpec& m, const DiracAlgebra& dirac,
                            std::span<const FieldSource* const> fields, const GaugePair& w,
                            const Point4& x);

// ---- transformations ----

/// Pointwise evaluator for U(x) field V(x) with the spinor index inert.
std::unique_ptr<FieldSource> transform_field(const ModelSpec& m, const FieldSource& base,
                                             const TransformSpec& t);

std::unique_ptr<PotentialSource> transform_gauge_u(const ModelSpec& m,
                                                   const PotentialSource& base,
                                                   const TransformSpec& t);
std::unique_ptr<PotentialSource> transform_gauge_v(const ModelSpec& m,
                                                   const PotentialSource& base,
                                                   const TransformSpec& t);

/// First-order form of the gauge-transform law (exact for abelian sectors):
/// left:  W - i d_mu(alpha_a) T_a + [i g alpha_a T_a, W]
/// right: W - i d_mu(beta_b) T_b - [i g beta_b T_b, W]
Eigen::MatrixXcd linearized_gauge_transform_at(const ModelSpec& m, Sector s,
                                               const GaugeConfig& cfg, const TransformSpec& t,
                                               int mu, const Point4& x,
                                               bool include_commutator = true);

/// Finite-difference first derivatives of the group element (h = 1e-6), the
/// cross-check fallback for the analytic exponential jets.
std::array<Eigen::MatrixXcd, 4> group_derivative_fd(const AlgebraBasis& basis,
                                                    std::span<const FourierScalar> params,
                                                    double charge, const Point4& x,
                                                    double h = 1e-6);

}  // namespace gaugekin

#endif
