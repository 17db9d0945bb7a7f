#include "gaugekin/model.hpp"

#include <cmath>
#include <set>

namespace gaugekin {

std::string to_string(Rep rep) {
  switch (rep) {
    case Rep::Bifundamental: return "bifundamental";
    case Rep::FundamentalU: return "fundamental_U";
    case Rep::FundamentalV: return "fundamental_V";
    case Rep::Singlet: return "singlet";
  }
  return "?";
}

std::string to_string(Chirality ch) {
  switch (ch) {
    case Chirality::None: return "none";
    case Chirality::Left: return "left";
    case Chirality::Right: return "right";
  }
  return "?";
}

void ModelSpec::validate() const {
  require(basis_u.dim() > 0 && basis_v.dim() > 0, "model: both factor groups must be declared");
  require(basis_u.coupling > 0.0 && basis_v.coupling > 0.0, "model: couplings must be positive");
  require(std::abs(v_commutator_sign) == 1.0, "model: commutator sign must be +1 or -1");

  const bool u_ab = basis_u.abelian();
  const bool v_ab = basis_v.abelian();

  std::set<std::string> names;
  for (const auto& f : fields) {
    require(!f.name.empty(), "model: field names must be nonempty");
    require(names.insert(f.name).second, "model: duplicate field name '" + f.name + "'");
    require(f.vev == 0.0 || f.kind == FieldKind::Scalar,
            "model: vev declared on non-scalar '" + f.name + "'");
    if (f.u1_charge != 0.0 && (u_ab || v_ab)) {
      const bool charge_acts = (u_ab && f.acts_left()) || (v_ab && f.acts_right());
      require(charge_acts, "model: field '" + f.name +
                               "' declares an abelian charge but its representation does not "
                               "touch the abelian factor");
    }
  }
}

GaugeConfig GaugeConfig::zero(const ModelSpec& m, int K) {
  (void)K;
  GaugeConfig cfg;
  cfg.wu = ComponentField({m.basis_u.dim(), 4});
  cfg.wv = ComponentField({m.basis_v.dim(), 4});
  for (size_t i = 0; i < cfg.wu.size(); ++i) cfg.wu.flat(i) = FourierScalar::constant(0.0, true);
  for (size_t i = 0; i < cfg.wv.size(); ++i) cfg.wv.flat(i) = FourierScalar::constant(0.0, true);
  return cfg;
}

GaugeConfig GaugeConfig::random(const ModelSpec& m, std::uint64_t seed, int K, double amplitude) {
  GaugeConfig cfg;
  cfg.wu = random_field(seed, {m.basis_u.dim(), 4}, K, amplitude, true);
  cfg.wv = random_field(seed ^ 0x5bd1e995u, {m.basis_v.dim(), 4}, K, amplitude, true);
  return cfg;
}

TransformSpec TransformSpec::identity(const ModelSpec& m) {
  TransformSpec t;
  t.alpha.assign(static_cast<size_t>(m.basis_u.dim()), FourierScalar::constant(0.0, true));
  t.beta.assign(static_cast<size_t>(m.basis_v.dim()), FourierScalar::constant(0.0, true));
  return t;
}

TransformSpec TransformSpec::random(const ModelSpec& m, std::uint64_t seed, int K,
                                    double amplitude) {
  DetRng rng(seed);
  TransformSpec t;
  for (int a = 0; a < m.basis_u.dim(); ++a)
    t.alpha.push_back(random_scalar(rng, K, amplitude, true));
  for (int b = 0; b < m.basis_v.dim(); ++b)
    t.beta.push_back(random_scalar(rng, K, amplitude, true));
  return t;
}

TransformSpec TransformSpec::random_constant(const ModelSpec& m, std::uint64_t seed,
                                             double amplitude) {
  DetRng rng(seed);
  TransformSpec t;
  for (int a = 0; a < m.basis_u.dim(); ++a)
    t.alpha.push_back(FourierScalar::constant(rng.uniform(-amplitude, amplitude), true));
  for (int b = 0; b < m.basis_v.dim(); ++b)
    t.beta.push_back(FourierScalar::constant(rng.uniform(-amplitude, amplitude), true));
  return t;
}

TransformSpec TransformSpec::scaled(double s) const {
  TransformSpec t;
  for (const auto& a : alpha) t.alpha.push_back(a.scaled(s));
  for (const auto& b : beta) t.beta.push_back(b.scaled(s));
  return t;
}

FieldInstance FieldInstance::random(const ModelSpec& m, const FieldDecl& decl, std::uint64_t seed,
                                    int K, double amplitude) {
  FieldInstance inst;
  inst.decl = decl;
  const int rows = m.rows_of(decl);
  const int cols = m.cols_of(decl);
  if (decl.kind == FieldKind::Scalar) {
    inst.data = random_field(seed, {rows, cols}, K, amplitude, false);
    return inst;
  }
  inst.data = random_field(seed, {4, rows, cols}, K, amplitude, false);
  if (decl.chirality != Chirality::None) {
    // Pin the spinor content to the matching chiral half: in the Dirac basis
    // P_{L/R} psi = psi forces lower = -/+ upper.
    const double sign = decl.chirality == Chirality::Left ? -1.0 : 1.0;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        for (int s = 0; s < 2; ++s) {
          const int upper[3] = {s, r, c};
          const int lower[3] = {s + 2, r, c};
          inst.data.at(lower) = inst.data.at(upper).scaled(sign);
        }
  }
  return inst;
}

FieldInstance FieldInstance::vev_instance(const ModelSpec& m, const FieldDecl& decl) {
  require(decl.kind == FieldKind::Scalar, "vev_instance: field must be a scalar");
  FieldInstance inst;
  inst.decl = decl;
  const int rows = m.rows_of(decl);
  const int cols = m.cols_of(decl);
  inst.data = ComponentField({rows, cols});
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const int idx[2] = {r, c};
      const bool at_vev = (r == rows - 1 && c == 0);
      inst.data.at(idx) =
          FourierScalar::constant(at_vev ? decl.vev / std::sqrt(2.0) : 0.0, false);
    }
  return inst;
}

}  // namespace gaugekin
