#include "gaugekin/gauge.hpp"

#include <cmath>

namespace gaugekin {

namespace {

const cdouble kI(0.0, 1.0);

/// Jet of scalar(x) * T for a constant matrix T.
Jet scalar_times_matrix(const Jet& s, const Eigen::MatrixXcd& t) {
  Jet out;
  out.order = s.order;
  out.v = s.v(0, 0) * t;
  if (out.order >= 1)
    for (int mu = 0; mu < 4; ++mu) out.d[mu] = s.d[mu](0, 0) * t;
  if (out.order >= 2)
    for (int p = 0; p < 10; ++p) out.dd[p] = s.dd[p](0, 0) * t;
  return out;
}

int spec_max_mode(const TransformSpec& t) {
  int m = 0;
  for (const auto& a : t.alpha) m = std::max(m, a.max_abs_mode());
  for (const auto& b : t.beta) m = std::max(m, b.max_abs_mode());
  return m;
}

std::span<const FourierScalar> side_params(const TransformSpec& t, Sector s) {
  return s == Sector::U ? std::span<const FourierScalar>(t.alpha)
                        : std::span<const FourierScalar>(t.beta);
}

}  // namespace

// ---- FourierFieldSource ----

FourierFieldSource::FourierFieldSource(const ModelSpec& m, const FieldInstance& inst)
    : model_(&m), inst_(&inst) {
  rows_ = m.rows_of(inst.decl);
  cols_ = m.cols_of(inst.decl);
  spin_ = inst.decl.kind == FieldKind::Fermion ? 4 : 1;
  max_mode_ = std::max(1, inst.data.max_abs_mode());
  const size_t expect = static_cast<size_t>(spin_) * rows_ * cols_;
  require(inst.data.size() == expect, "field instance shape mismatch with model");
}

std::vector<Jet> FourierFieldSource::jets(const Point4& x, int order) const {
  const PhaseTable pt(x, max_mode_);
  const auto& entries = inst_->data.entries();
  std::vector<Jet> out;
  out.reserve(static_cast<size_t>(spin_));
  const size_t block = static_cast<size_t>(rows_) * cols_;
  for (int s = 0; s < spin_; ++s)
    out.push_back(matrix_jet({entries.data() + s * block, block}, rows_, cols_, pt, order));
  return out;
}

// ---- TransformedFieldSource ----

TransformedFieldSource::TransformedFieldSource(const ModelSpec& m, const FieldSource& base,
                                               const TransformSpec& t)
    : model_(&m), base_(&base), transform_(&t) {
  max_mode_ = std::max(1, spec_max_mode(t));
}

std::vector<Jet> TransformedFieldSource::jets(const Point4& x, int order) const {
  std::vector<Jet> comps = base_->jets(x, order);
  const FieldDecl& f = base_->decl();
  const PhaseTable pt(x, max_mode_);
  if (f.acts_left()) {
    const Jet u = group_jet(model_->basis_u, transform_->alpha, f.u1_charge, pt, order);
    for (auto& c : comps) c = u * c;
  }
  if (f.acts_right()) {
    const Jet v = group_jet(model_->basis_v, transform_->beta, f.u1_charge, pt, order);
    for (auto& c : comps) c = c * v;
  }
  return comps;
}

// ---- FourierPotentialSource ----

FourierPotentialSource::FourierPotentialSource(const ModelSpec& m, Sector s,
                                               const GaugeConfig& cfg)
    : model_(&m), sector_(s), w_(s == Sector::U ? &cfg.wu : &cfg.wv) {
  require(w_->shape().size() == 2 && w_->shape()[0] == m.basis(s).dim() && w_->shape()[1] == 4,
          "gauge config shape mismatch with model");
  max_mode_ = std::max(1, w_->max_abs_mode());
}

std::array<Jet, 4> FourierPotentialSource::w_jets(const Point4& x, int order,
                                                  double charge) const {
  const AlgebraBasis& basis = model_->basis(sector_);
  const PhaseTable pt(x, max_mode_);
  std::array<Jet, 4> out;
  for (int mu = 0; mu < 4; ++mu) {
    Jet acc = Jet::zero(basis.n, basis.n, order);
    for (int a = 0; a < basis.dim(); ++a) {
      const int idx[2] = {a, mu};
      const Jet s = scalar_jet(w_->at(idx), pt, order);
      const Eigen::MatrixXcd gen =
          basis.abelian() ? Eigen::MatrixXcd::Constant(1, 1, charge / 2.0)
                          : basis.generators[static_cast<size_t>(a)];
      acc = acc + scalar_times_matrix(s, -kI * gen);
    }
    out[static_cast<size_t>(mu)] = std::move(acc);
  }
  return out;
}

// ---- TransformedPotentialSource ----

TransformedPotentialSource::TransformedPotentialSource(const ModelSpec& m, Sector s,
                                                       const PotentialSource& base,
                                                       const TransformSpec& t)
    : model_(&m), base_(&base), transform_(&t) {
  require(base.sector() == s, "transform_gauge: sector mismatch");
  max_mode_ = std::max(1, spec_max_mode(t));
}

std::array<Jet, 4> TransformedPotentialSource::w_jets(const Point4& x, int order,
                                                      double charge) const {
  require(order <= max_order(), "transformed potential provides jets up to first order only");
  const Sector s = base_->sector();
  const AlgebraBasis& basis = model_->basis(s);
  const PhaseTable pt(x, max_mode_);
  const Jet g = group_jet(basis, side_params(*transform_, s), charge, pt, order + 1);
  const Jet gdag = jet_adjoint(g);
  const std::array<Jet, 4> base_w = base_->w_jets(x, order, charge);
  const cdouble inv_g(1.0 / basis.coupling);

  std::array<Jet, 4> out;
  for (int mu = 0; mu < 4; ++mu) {
    const Jet dgdag = jet_partial(gdag, mu);
    if (s == Sector::U)
      out[static_cast<size_t>(mu)] =
          inv_g * (g * dgdag) + g * base_w[static_cast<size_t>(mu)] * gdag;
    else
      out[static_cast<size_t>(mu)] =
          inv_g * (dgdag * g) + gdag * base_w[static_cast<size_t>(mu)] * g;
  }
  return out;
}

// ---- group elements ----

Jet group_jet(const AlgebraBasis& basis, std::span<const FourierScalar> params, double charge,
              const PhaseTable& pt, int order) {
  require(static_cast<int>(params.size()) == basis.dim(),
          "group_jet: parameter count must match generator count");
  Jet exponent = Jet::zero(basis.n, basis.n, order);
  for (int a = 0; a < basis.dim(); ++a) {
    const Jet s = scalar_jet(params[static_cast<size_t>(a)], pt, order);
    const Eigen::MatrixXcd gen = basis.abelian()
                                     ? Eigen::MatrixXcd::Constant(1, 1, charge / 2.0)
                                     : basis.generators[static_cast<size_t>(a)];
    exponent = exponent + scalar_times_matrix(s, kI * basis.coupling * gen);
  }
  return jet_exp(exponent);
}

Eigen::MatrixXcd unitary_at(const AlgebraBasis& basis, std::span<const FourierScalar> params,
                            const Point4& x) {
  require(static_cast<int>(params.size()) == basis.dim(),
          "unitary_at: parameter count must match generator count");
  std::vector<double> values(params.size());
  for (size_t a = 0; a < params.size(); ++a) values[a] = params[a].eval(x).real();
  return group_element(basis, values);
}

// ---- pointwise operations ----

Eigen::MatrixXcd w_matrix_at(const ModelSpec& m, const GaugeConfig& cfg, Sector s, int mu,
                             const Point4& x) {
  require(mu >= 0 && mu < 4, "w_matrix_at: Lorentz index must be in 0..3");
  const FourierPotentialSource pot(m, s, cfg);
  return pot.w_jets(x, 0, m.basis(s).charge)[static_cast<size_t>(mu)].v;
}

Jet covariant_jet(const ModelSpec& m, const FieldDecl& f, const Jet& comp,
                  const std::array<Jet, 4>& wu, const std::array<Jet, 4>& wv, int mu) {
  Jet d = jet_partial(comp, mu);
  if (f.acts_left())
    d = d + cdouble(m.basis_u.coupling) * (wu[static_cast<size_t>(mu)] * comp);
  if (f.acts_right())
    d = d + cdouble(m.basis_v.coupling) * (comp * wv[static_cast<size_t>(mu)]);
  return d;
}

std::vector<Eigen::MatrixXcd> covariant_derivative_at(const ModelSpec& m,
                                                      const FieldSource& field,
                                                      const GaugePair& w, int mu,
                                                      const Point4& x) {
  require(mu >= 0 && mu < 4, "covariant_derivative_at: Lorentz index must be in 0..3");
  const FieldDecl& f = field.decl();
  const std::vector<Jet> comps = field.jets(x, 1);
  const std::array<Jet, 4> wu = w.u.w_jets(x, 0, f.u1_charge);
  const std::array<Jet, 4> wv = w.v.w_jets(x, 0, f.u1_charge);
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(comps.size());
  for (const Jet& c : comps) out.push_back(covariant_jet(m, f, c, wu, wv, mu).v);
  return out;
}

Eigen::MatrixXcd field_strength_from_jets(const ModelSpec& m, Sector s,
                                          const std::array<Jet, 4>& w, int mu, int nu) {
  require(mu >= 0 && mu < 4 && nu >= 0 && nu < 4, "field_strength: Lorentz indices in 0..3");
  const AlgebraBasis& basis = m.basis(s);
  Eigen::MatrixXcd f = w[static_cast<size_t>(nu)].d[static_cast<size_t>(mu)] -
                       w[static_cast<size_t>(mu)].d[static_cast<size_t>(nu)];
  if (!basis.abelian()) {
    const double sign = s == Sector::U ? 1.0 : m.v_commutator_sign;
    const Eigen::MatrixXcd& a = w[static_cast<size_t>(mu)].v;
    const Eigen::MatrixXcd& b = w[static_cast<size_t>(nu)].v;
    f += sign * basis.coupling * (a * b - b * a);
  }
  return f;
}

Eigen::MatrixXcd field_strength_at(const ModelSpec& m, const PotentialSource& pot, int mu,
                                   int nu, const Point4& x) {
  const std::array<Jet, 4> w = pot.w_jets(x, 1, m.basis(pot.sector()).charge);
  return field_strength_from_jets(m, pot.sector(), w, mu, nu);
}

cdouble lagrangian_fermion_at(const ModelSpec& m, const DiracAlgebra& dirac,
                              const FieldSource& psi, const GaugePair& w, const Point4& x) {
  require(psi.decl().kind == FieldKind::Fermion, "lagrangian_fermion_at: field must be a fermion");
  const FieldDecl& f = psi.decl();
  const std::vector<Jet> comps = psi.jets(x, 1);
  const std::array<Jet, 4> wu = w.u.w_jets(x, 0, f.u1_charge);
  const std::array<Jet, 4> wv = w.v.w_jets(x, 0, f.u1_charge);

  // D_mu psi per spinor component, then i psi+ gamma^0 gamma^mu (D_mu psi)
  // traced over the internal indices.
  std::array<std::vector<Eigen::MatrixXcd>, 4> dpsi;
  for (int mu = 0; mu < 4; ++mu) {
    dpsi[static_cast<size_t>(mu)].reserve(comps.size());
    for (const Jet& c : comps)
      dpsi[static_cast<size_t>(mu)].push_back(covariant_jet(m, f, c, wu, wv, mu).v);
  }

  cdouble density(0.0);
  for (int mu = 0; mu < 4; ++mu) {
    const Eigen::Matrix4cd contraction = dirac.gamma[0] * dirac.gamma[static_cast<size_t>(mu)];
    for (int s = 0; s < 4; ++s)
      for (int sp = 0; sp < 4; ++sp) {
        const cdouble coeff = contraction(s, sp);
        if (coeff == cdouble(0.0)) continue;
        density += coeff * (comps[static_cast<size_t>(s)].v.adjoint() *
                            dpsi[static_cast<size_t>(mu)][static_cast<size_t>(sp)])
                               .trace();
      }
  }
  return kI * density;
}

double lagrangian_gauge_at(const ModelSpec& m, const PotentialSource& pot, const Point4& x,
                           const std::array<double, 4>& metric, GaugeTraceForm form) {
  const std::array<Jet, 4> w = pot.w_jets(x, 1, m.basis(pot.sector()).charge);
  cdouble sum(0.0);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      const Eigen::MatrixXcd f = field_strength_from_jets(m, pot.sector(), w, mu, nu);
      const double raise = metric[static_cast<size_t>(mu)] * metric[static_cast<size_t>(nu)];
      const cdouble tr = form == GaugeTraceForm::Daggered
                             ? cdouble((f.adjoint() * f).trace())
                             : cdouble((f * f).trace());
      // (nu,mu) duplicates (mu,nu); the pair sum cancels the overall 1/2
      sum += raise * tr;
    }
  ensure(std::abs(sum.imag()) <= 1e-11 * (1.0 + std::abs(sum.real())),
         "lagrangian_gauge_at: non-real density");
  return sum.real();
}

double lagrangian_scalar_at(const ModelSpec& m, const FieldSource& phi, const GaugePair& w,
                            const Point4& x, const std::array<double, 4>& metric) {
  require(phi.decl().kind == FieldKind::Scalar, "lagrangian_scalar_at: field must be a scalar");
  const FieldDecl& f = phi.decl();
  const std::vector<Jet> comps = phi.jets(x, 1);
  const std::array<Jet, 4> wu = w.u.w_jets(x, 0, f.u1_charge);
  const std::array<Jet, 4> wv = w.v.w_jets(x, 0, f.u1_charge);

  cdouble sum(0.0);
  for (int mu = 0; mu < 4; ++mu) {
    const Eigen::MatrixXcd d = covariant_jet(m, f, comps[0], wu, wv, mu).v;
    sum += metric[static_cast<size_t>(mu)] * (d.adjoint() * d).trace();
  }
  ensure(std::abs(sum.imag()) <= 1e-11 * (1.0 + std::abs(sum.real())),
         "lagrangian_scalar_at: non-real density");
  return sum.real();
}

cdouble lagrangian_total_at(const ModelSpec& m, const DiracAlgebra& dirac,
                            std::span<const FieldSource* const> fields, const GaugePair& w,
                            const Point4& x) {
  cdouble total(0.0);
  for (const FieldSource* f : fields) {
    if (f->decl().kind == FieldKind::Fermion)
      total += lagrangian_fermion_at(m, dirac, *f, w, x);
    else
      total += lagrangian_scalar_at(m, *f, w, x, dirac.metric);
  }
  total -= lagrangian_gauge_at(m, w.v, x, dirac.metric, GaugeTraceForm::Daggered);
  total -= lagrangian_gauge_at(m, w.u, x, dirac.metric, GaugeTraceForm::Daggered);
  return total;
}

// ---- transformations ----

std::unique_ptr<FieldSource> transform_field(const ModelSpec& m, const FieldSource& base,
                                             const TransformSpec& t) {
  return std::make_unique<TransformedFieldSource>(m, base, t);
}

std::unique_ptr<PotentialSource> transform_gauge_u(const ModelSpec& m,
                                                   const PotentialSource& base,
                                                   const TransformSpec& t) {
  return std::make_unique<TransformedPotentialSource>(m, Sector::U, base, t);
}

std::unique_ptr<PotentialSource> transform_gauge_v(const ModelSpec& m,
                                                   const PotentialSource& base,
                                                   const TransformSpec& t) {
  return std::make_unique<TransformedPotentialSource>(m, Sector::V, base, t);
}

Eigen::MatrixXcd linearized_gauge_transform_at(const ModelSpec& m, Sector s,
                                               const GaugeConfig& cfg, const TransformSpec& t,
                                               int mu, const Point4& x, bool include_commutator) {
  const AlgebraBasis& basis = m.basis(s);
  const std::span<const FourierScalar> params = side_params(t, s);
  const Eigen::MatrixXcd w = w_matrix_at(m, cfg, s, mu, x);

  Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(basis.n, basis.n);
  Eigen::MatrixXcd exponent = Eigen::MatrixXcd::Zero(basis.n, basis.n);
  for (int a = 0; a < basis.dim(); ++a) {
    const Eigen::MatrixXcd& gen = basis.generators[static_cast<size_t>(a)];
    shift += params[static_cast<size_t>(a)].partial(mu).eval(x).real() * gen;
    exponent += params[static_cast<size_t>(a)].eval(x).real() * gen;
  }

  Eigen::MatrixXcd out = w - kI * shift;
  if (include_commutator && !basis.abelian()) {
    const Eigen::MatrixXcd xg = kI * basis.coupling * exponent;
    const double sign = s == Sector::U ? 1.0 : -1.0;
    out += sign * (xg * w - w * xg);
  }
  return out;
}

std::array<Eigen::MatrixXcd, 4> group_derivative_fd(const AlgebraBasis& basis,
                                                    std::span<const FourierScalar> params,
                                                    double charge, const Point4& x, double h) {
  AlgebraBasis eff = basis;
  if (basis.abelian()) {
    eff = u1_basis(charge);
    eff.coupling = basis.coupling;
  }
  std::array<Eigen::MatrixXcd, 4> out;
  for (int mu = 0; mu < 4; ++mu) {
    std::array<double, 4> hi = x.x, lo = x.x;
    hi[static_cast<size_t>(mu)] += h;
    lo[static_cast<size_t>(mu)] -= h;
    const Point4 xp(hi[0], hi[1], hi[2], hi[3]);
    const Point4 xm(lo[0], lo[1], lo[2], lo[3]);
    out[static_cast<size_t>(mu)] =
        (unitary_at(eff, params, xp) - unitary_at(eff, params, xm)) / (2.0 * h);
  }
  return out;
}

}  // namespace gaugekin
