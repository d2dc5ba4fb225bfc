#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypermono/bruteforce.hpp"
#include "hypermono/exactcount.hpp"

namespace hypermono {

enum class TableKind { kHultman, kReduced };
enum class TableFormat { kText, kCsv, kJson };

/// Triangle of H(n,k) (rows 1..max_n, k <= n) or r(n,k) (rows 3..max_n,
/// k <= n/2). Cells outside a row's range are empty.
struct CountTable {
  TableKind kind = TableKind::kHultman;
  std::vector<long> rows;
  std::vector<long> columns;
  std::vector<std::vector<std::optional<Count>>> cells;
};

CountTable make_table(TableKind kind, long max_n);
std::string format_table(const CountTable& table, TableFormat format);

enum class SequenceKind { kU, kHultmanFlat, kReducedFlat };

/// First `count` terms as "index value" lines. u is indexed by genus from 1,
/// the H triangle (rows n = 0, 1, ... holding H(n+1, 1..n+1)) from 0, and the
/// r triangle (rows n >= 3 holding r(n, 1..n/2)) from 1.
std::string oeis_bfile(SequenceKind kind, long count);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first failing case
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  std::string to_text() const;
  /// {"passed": bool, "checks": [{"name", "passed", "detail"}, ...]}
  std::string to_json() const;
};

/// Oracle-versus-formula comparison for every m <= max_m, plus exhaustive
/// model cross-checks for m <= min(max_m, 7).
VerifyReport verify_all(std::size_t max_m, const ScanOptions& options);

/// Cycle graph, gluing, breakpoint and round-trip checks over all circular
/// faces on m points. Returns the first failure, if any.
std::optional<std::string> model_cross_check(std::size_t m);

}  // namespace hypermono
