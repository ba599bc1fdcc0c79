#ifndef DESSINS_CATALOG_HPP
#define DESSINS_CATALOG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dessins/dessin.hpp"
#include "dessins/exact.hpp"
#include "dessins/group.hpp"
#include "dessins/passport.hpp"

namespace dessins {

/// One census row, fully predicted from the family parameters: passport,
/// group label (the branch table of the classification; Unknown for the open
/// case), and which polynomial constructor realizes it.
struct RowPrediction {
  FamilyParams params;
  Passport passport;
  GroupLabel label;       // branch label; compare with normalize_label
  std::string shabat_id;  // family tag, resolved by family_polynomial
  int n = 0;              // edge count
  int d = 1;              // block count where applicable (gcd(s,t), 2, or 3)
  int m = 0;              // n / d
};

RowPrediction predict(const FamilyParams& params);

/// The Shabat polynomial constructor matching the family.
ExactPolynomial family_polynomial(const FamilyParams& params);

struct RowAssertion {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RowReport {
  FamilyParams params;
  RowPrediction prediction;
  BigInt computed_order = 0;
  GroupLabel recognized;
  std::vector<RowAssertion> assertions;
  std::vector<std::string> notes;  // open-case findings, never failures
  bool all_pass = true;
};

struct VerifyOptions {
  bool with_lift = false;
  int lift_max_degree = 14;
  /// Cross-check the stabilizer-chain order against the BFS oracle whenever
  /// the group is at most this big; 0 disables the check.
  std::uint64_t bfs_cap = 0;
};

/// End-to-end row check: canonical dessin passport, tree flag, monodromy
/// order and recognized label against the prediction, exact Shabat property
/// and polynomial passport, optionally the traced lift.  Predicted-Unknown
/// rows record the computed order as a note instead of asserting.
RowReport verify_row(const FamilyParams& params, const VerifyOptions& options = {});

struct SweepConfig {
  int max_n = 30;
  int max_r = 6;  // per-family parameter caps; <= 0 removes the cap
  int max_s = 6;
  int max_t = 6;
  int jobs = 1;
  VerifyOptions verify;
};

/// Deterministic row order: family by family, parameters lexicographic.
std::vector<FamilyParams> sweep_grid(const SweepConfig& config);
std::vector<RowReport> run_sweep(const SweepConfig& config);

/// Human-readable table mirroring the census layout, one row per report.
std::string sweep_table(const std::vector<RowReport>& reports);

}  // namespace dessins

#endif
