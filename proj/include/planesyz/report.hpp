#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planesyz/classifier.hpp"
#include "planesyz/field.hpp"
#include "planesyz/hilbert.hpp"
#include "planesyz/polynomial.hpp"

namespace planesyz {

/// One consistency check run on a finished analysis. Checks that do not
/// apply to the curve (for example the 3-syzygy ones when m != 3) are kept
/// with applicable = false.
struct AuditResult {
  std::string name;
  bool applicable = false;
  bool passed = false;
  std::string detail;

  friend bool operator==(const AuditResult&, const AuditResult&) = default;
};

/// Polynomial data shown with --verbose, printed over the working field.
struct VerboseData {
  std::vector<std::vector<std::string>> syzygies;  // rho_1..rho_m as (a, b, c)
  std::map<std::string, std::string> pairings;     // "g12" -> g_12
  std::vector<std::vector<std::string>> h_matrix;
  std::map<std::string, std::string> minors;       // "m12" -> m_12

  friend bool operator==(const VerboseData&, const VerboseData&) = default;
};

struct CurveReport {
  std::string input;
  std::string polynomial;  // canonical form of the parsed input
  std::string field;
  std::string evidence;    // "certified" over QQ, "modular evidence" over F_p
  int d = 0;
  bool reduced = false;
  int singular_scheme_dimension = 0;
  int m = 0;
  std::vector<int> exponents;
  std::vector<int> relation_degrees;  // e_1..e_{m-2}
  std::vector<int> epsilons;
  int64_t tau = 0;
  std::optional<int> sigma;
  int64_t nu = 0;
  int T = 0;
  Series n_vector;
  Series milnor_algebra;  // dim (S/J_f)_k for k = 0..3d
  Series pairing_quotient;  // S/I(C), finite length
  Series fitting_quotient;  // S/Fitt_0(N(f))
  std::vector<std::string> labels;
  std::optional<int64_t> dpw_bound;
  Thm3Audit maximal_tjurina;
  std::vector<AuditResult> audits;
  std::vector<std::string> warnings;
  std::optional<VerboseData> verbose;
  std::optional<std::map<std::string, double>> timings;  // seconds per stage

  bool audits_passed() const;

  friend bool operator==(const CurveReport&, const CurveReport&) = default;
};

struct AnalysisOptions {
  bool verbose = false;
  bool timings = false;
  int max_degree_guard = 16;
};

/// Full pipeline: validate, AR(f), I(C), H and its minors, Fitt_0, N(f),
/// classification and audits. Validation failures throw; failed audits are
/// recorded in the report. Structural inconsistencies found on the way
/// (InternalInconsistency, EquivalenceViolated, NoAligningShift) also throw.
CurveReport analyze(const IntPolynomial& f, const std::string& input, const CoefficientField& field,
                    const AnalysisOptions& options = {});
/// Parses `text` first.
CurveReport analyze_text(const std::string& text, const CoefficientField& field,
                         const AnalysisOptions& options = {});

/// Plain-text rendering for terminals.
std::string render_text(const CurveReport& report);

/// Integer invariants only, for comparing runs over different fields.
struct IntegerInvariants {
  int d, m;
  std::vector<int> exponents, relation_degrees, epsilons;
  int64_t tau;
  std::optional<int> sigma;
  int64_t nu;
  int T;
  Series n_vector, milnor_algebra, pairing_quotient, fitting_quotient;
  std::vector<std::string> labels;
  std::vector<bool> maximal_tjurina_flags;
  std::vector<std::pair<std::string, bool>> audits;

  friend bool operator==(const IntegerInvariants&, const IntegerInvariants&) = default;
};
IntegerInvariants integer_invariants(const CurveReport& report);

}  // namespace planesyz
