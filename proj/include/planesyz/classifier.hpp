#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planesyz/curve.hpp"

namespace planesyz {

/// du Plessis-Wall bound (d-1)(d-d1-1) + d1^2 - C(2d1-d+2, 2), valid for
/// d/2 <= d1 <= d-1. Throws OutOfRegime outside that range.
int64_t dpw_bound(int d, int d1);

/// The four characterizations of maximal Tjurina curves, each evaluated on
/// its own.
struct Thm3Audit {
  bool applicable = false;  // m >= 3
  int power = 0;            // 2 d1 - d + 1
  bool maximal_tjurina = false;    // (1)
  bool linear_entries = false;     // (2)
  bool ideal_is_power = false;     // (3), both forms below agree
  bool ideal_equality_form = false;
  bool minors_span_form = false;
  bool hilbert_series_form = false;  // (4)
  std::optional<int64_t> tau_max;
  std::optional<int64_t> margin;  // tau_max - tau

  bool all_agree() const {
    return linear_entries == maximal_tjurina && ideal_is_power == maximal_tjurina &&
           hilbert_series_form == maximal_tjurina;
  }

  friend bool operator==(const Thm3Audit&, const Thm3Audit&) = default;
};

struct Classification {
  int m = 0;
  bool free = false;
  bool nearly_free = false;
  bool plus_one_generated = false;
  bool three_syzygy = false;
  bool maximal_tjurina = false;
  std::optional<int64_t> dpw;  // bound when d1 >= d/2
  Thm3Audit thm3;

  /// Label strings such as "free", "three-syzygy", "maximal-tjurina(4,3)",
  /// always led by "<m>-syzygy".
  std::vector<std::string> labels(int d, int d1) const;
};

/// Labels from the exponents, cross-checked against nu: free iff nu = 0 and
/// nearly free iff nu = 1. Throws InternalInconsistency on disagreement.
Classification classify(const Exponents& exp, const JacobianModuleData& jd);

/// Evaluates (1)-(4) independently and throws EquivalenceViolated when they
/// disagree or when the two forms of (3) disagree.
template <typename F>
Thm3Audit thm3_audit(const F& field, const Exponents& exp, const SecondSyzygyData<typename F::Elem>& h,
                     const GradedSubmodule<typename F::Elem>& ic,
                     const std::map<std::pair<int, int>, Polynomial<typename F::Elem>>& minors,
                     const JacobianModuleData& jd);

}  // namespace planesyz
