#ifndef GAUGEKIN_VERIFY_HPP
#define GAUGEKIN_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaugekin/gauge.hpp"

namespace gaugekin {

inline constexpr const char* kEngineVersion = "0.1.0";

struct VerifyOptions {
  std::uint64_t seed = 42;
  int points = 128;
  int modes = 2;  // Fourier cutoff K
  double amplitude = 0.5;
  double tol = 1e-8;  // relative tolerance for the Lagrangian-density checks
  int workers = 1;
  bool fd_crosscheck = false;
  /// Name of a check to run in its documented corrupted variant; the
  /// corrupted check must fail (this is the negative-control hook).
  std::string negative_control;
};

struct CheckResult {
  std::string name;
  double residual_max = 0.0;
  double residual_mean = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  int points = 0;
  std::string notes;

  static CheckResult from_residuals(std::string name, const std::vector<double>& residuals,
                                    double tolerance, std::string notes = {});
};

struct VerificationReport {
  std::string model_name;
  std::uint64_t seed = 0;
  int points = 0;
  int modes = 0;
  double amplitude = 0.0;
  std::string engine_version;
  std::map<std::string, std::string> sign_ledger;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

/// Convention record embedded in every report.
std::map<std::string, std::string> sign_ledger(const ModelSpec& m);

/// Instantiated random content for every declared field, plus the gauge
/// configuration and sample points, all derived from one seed.
struct SuiteInputs {
  std::vector<Point4> pts;
  GaugeConfig config;
  std::vector<FieldInstance> fields;

  static SuiteInputs draw(const ModelSpec& m, const VerifyOptions& opt);
};

// ---- individual checks ----
// Each check draws its own transformation parameters from the option seed
// and reports max/mean residuals over the sample points.

/// Free kinetic bilinear under a constant transformation.  Corruption:
/// transform only one slot of the bilinear.
CheckResult check_global_invariance(const ModelSpec& m, std::span<const FieldInstance> fields,
                                    const GaugeConfig& cfg, const VerifyOptions& opt);

/// Total kinetic density under a simultaneous local transformation of
/// matter and both gauge sectors.  Corruption: transform gauge only.
CheckResult check_local_invariance(const ModelSpec& m, std::span<const FieldInstance> fields,
                                   const GaugeConfig& cfg, const VerifyOptions& opt);

/// D'_mu psi' = U (D_mu psi) V at every point.  Corruption: leave the
/// potentials untransformed on the primed side.
CheckResult check_covariant_transform(const ModelSpec& m, std::span<const FieldInstance> fields,
                                      const GaugeConfig& cfg, const VerifyOptions& opt);

/// D'_nu D'_mu psi' = U (D_nu D_mu psi) V.  Corruption: leave the right
/// sector untransformed on the primed side.
CheckResult check_second_derivative(const ModelSpec& m, std::span<const FieldInstance> fields,
                                    const GaugeConfig& cfg, const VerifyOptions& opt);

/// [D_mu, D_nu] f against g_U F^U f + g_V f F^V, run with both candidate
/// right-sector commutator signs; the rejected sign's residual is recorded
/// in the notes.  Corruption: adopt the rejected sign.
CheckResult check_commutator_identity(const ModelSpec& m, std::span<const FieldInstance> fields,
                                      const GaugeConfig& cfg, const VerifyOptions& opt);

/// Finite transform of W against the first-order law, per sector.  For a
/// non-abelian sector the parameter-halving residual ratio must sit in
/// [3,5]; for an abelian sector the two laws agree to rounding.
/// Corruption: drop the commutator term from the first-order law.
std::vector<CheckResult> check_infinitesimal_gauge_law(const ModelSpec& m, const GaugeConfig& cfg,
                                                       const VerifyOptions& opt);

/// Transforming the zero configuration must give vanishing field strengths.
CheckResult check_pure_gauge_flatness(const ModelSpec& m, const VerifyOptions& opt);

/// Abelian sectors: the transformed potential against the closed-form
/// component shift B + d(beta).
std::vector<CheckResult> check_abelian_potential_law(const ModelSpec& m, const GaugeConfig& cfg,
                                                     const VerifyOptions& opt);

/// Generator contracts of one factor group.
CheckResult check_algebra(const AlgebraBasis& basis, const std::string& name);

/// Analytic group-element derivatives against central finite differences.
CheckResult check_fd_crosscheck(const ModelSpec& m, const VerifyOptions& opt);

/// Maximum relative residual of the total kinetic density under the given
/// local transformation (the core of check_local_invariance, exposed for
/// scaling property tests).
double local_invariance_residual(const ModelSpec& m, std::span<const FieldInstance> fields,
                                 const GaugeConfig& cfg, const TransformSpec& t,
                                 std::span<const Point4> pts, int workers);

/// Runs the full battery.  Construction failures surface as errored checks;
/// the remaining checks still run.
VerificationReport run_suite(const ModelSpec& m, const VerifyOptions& opt);

}  // namespace gaugekin

#endif
