#pragma once

#include "koch/arrangement.hpp"
#include "koch/chain.hpp"
#include "koch/report.hpp"

#include <optional>

namespace koch {

struct PipelineOptions {
  /// Largest s for which the sign-vector oracle is run alongside.
  int oracle_cap = 4;
};

struct PipelineResult {
  VerificationReport report;
  std::optional<EuclideanCensus> census;  // empty if the build failed
};

/// Chain invariants, validity, arrangement structure, expected face counts
/// and (for small s) the oracle cross-check, for one chain.
PipelineResult verify_chain(const Chain& chain,
                            const PipelineOptions& options = {});

/// verify_chain for each generated K_s with s in [lo, hi], plus the
/// pentagon recurrence across the range.
VerificationReport verify_range(int lo, int hi,
                                const PipelineOptions& options = {});

/// Structural invariants of a Koch chain: size, anchor points, mirror
/// symmetry, and interior points strictly inside the base triangle.
VerificationReport chain_structure_report(const Chain& chain);

}  // namespace koch
