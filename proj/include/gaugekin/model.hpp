#ifndef GAUGEKIN_MODEL_HPP
#define GAUGEKIN_MODEL_HPP

#include <string>
#include <vector>

#include "gaugekin/fields.hpp"
#include "gaugekin/liealg.hpp"

namespace gaugekin {

enum class Sector { U, V };

enum class Rep { Bifundamental, FundamentalU, FundamentalV, Singlet };
enum class Chirality { None, Left, Right };
enum class FieldKind { Fermion, Scalar };

std::string to_string(Rep rep);
std::string to_string(Chirality ch);

struct FieldDecl {
  std::string name;
  FieldKind kind = FieldKind::Fermion;
  Rep rep = Rep::Bifundamental;
  Chirality chirality = Chirality::None;
  double u1_charge = 0.0;  // abelian charge; inert when no factor is U(1)
  double vev = 0.0;        // scalars only

  bool acts_left() const { return rep == Rep::Bifundamental || rep == Rep::FundamentalU; }
  bool acts_right() const { return rep == Rep::Bifundamental || rep == Rep::FundamentalV; }
};

/// The two factor groups plus the declared field content.
struct ModelSpec {
  std::string name;
  AlgebraBasis basis_u;
  AlgebraBasis basis_v;
  std::vector<FieldDecl> fields;

  /// Sign of the commutator term in the right-sector field strength.  The
  /// default is the sign adjudicated by the direct commutator-of-covariant-
  /// derivatives oracle; model files may override it (see the commutator
  /// check, which reports both candidates).
  double v_commutator_sign = -1.0;

  const AlgebraBasis& basis(Sector s) const { return s == Sector::U ? basis_u : basis_v; }

  int rows_of(const FieldDecl& f) const { return f.acts_left() ? basis_u.n : 1; }
  int cols_of(const FieldDecl& f) const { return f.acts_right() ? basis_v.n : 1; }

  /// Throws invalid_argument on inconsistent declarations (duplicate names,
  /// charge on a field the abelian factor cannot act on, bad couplings).
  void validate() const;
};

/// The two gauge potentials as real component fields W_{a,mu}(x) over the
/// generator bases; shape {dim, 4}.
struct GaugeConfig {
  ComponentField wu;
  ComponentField wv;

  static GaugeConfig zero(const ModelSpec& m, int K = 0);
  static GaugeConfig random(const ModelSpec& m, std::uint64_t seed, int K, double amplitude);
};

/// Spacetime-dependent transformation parameters, one real scalar per
/// generator of each factor.
struct TransformSpec {
  std::vector<FourierScalar> alpha;  // U factor
  std::vector<FourierScalar> beta;   // V factor

  static TransformSpec identity(const ModelSpec& m);
  static TransformSpec random(const ModelSpec& m, std::uint64_t seed, int K, double amplitude);
  /// Constant (zero-mode only) parameters: the global limit.
  static TransformSpec random_constant(const ModelSpec& m, std::uint64_t seed, double amplitude);

  TransformSpec scaled(double s) const;
  TransformSpec negated() const { return scaled(-1.0); }
};

/// Declared field plus its Fourier content.  Fermions store {4, rows, cols}
/// (spinor index first); scalars store {rows, cols}.
struct FieldInstance {
  FieldDecl decl;
  ComponentField data;

  static FieldInstance random(const ModelSpec& m, const FieldDecl& decl, std::uint64_t seed,
                              int K, double amplitude);
  /// Constant scalar instance pinned to the expectation value (0,..,0,v/sqrt2)^T.
  static FieldInstance vev_instance(const ModelSpec& m, const FieldDecl& decl);
};

}  // namespace gaugekin

#endif
