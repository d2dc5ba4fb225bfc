#include "hypermono/reports.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "hypermono/error.hpp"
#include "hypermono/hypermap.hpp"
#include "hypermono/models.hpp"

namespace hypermono {

CountTable make_table(TableKind kind, long max_n) {
  if (max_n < 1) fail(ErrorCode::kInvalidArgument, "table needs max_n >= 1");
  CountTable table;
  table.kind = kind;
  const long first_row = kind == TableKind::kHultman ? 1 : 3;
  const long last_column = kind == TableKind::kHultman ? max_n : max_n / 2;
  for (long k = 1; k <= last_column; ++k) table.columns.push_back(k);
  for (long n = first_row; n <= max_n; ++n) {
    table.rows.push_back(n);
    std::vector<std::optional<Count>> row(table.columns.size());
    for (long k : table.columns) {
      if (kind == TableKind::kHultman && k <= n) row[k - 1] = hultman_H(n, k);
      if (kind == TableKind::kReduced && 2 * k <= n) row[k - 1] = reduced_r(n, k);
    }
    table.cells.push_back(std::move(row));
  }
  return table;
}

std::string format_table(const CountTable& table, TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::kJson) {
    nlohmann::ordered_json j;
    j["kind"] = table.kind == TableKind::kHultman ? "H" : "r";
    j["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      auto cells = nlohmann::ordered_json::array();
      for (const auto& cell : table.cells[r]) cells.push_back(cell ? nlohmann::ordered_json(to_decimal(*cell)) : nullptr);
      rows.push_back({{"n", table.rows[r]}, {"cells", std::move(cells)}});
    }
    j["rows"] = std::move(rows);
    return j.dump();
  }
  if (format == TableFormat::kCsv) {
    out << "n";
    for (long k : table.columns) out << ",k=" << k;
    out << "\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      out << table.rows[r];
      for (const auto& cell : table.cells[r]) {
        out << ",";
        if (cell) out << to_decimal(*cell);
      }
      out << "\n";
    }
    return out.str();
  }
  std::vector<std::size_t> width(table.columns.size() + 1, 0);
  std::string corner = table.kind == TableKind::kHultman ? "H n\\k" : "r n\\k";
  width[0] = corner.size();
  for (long n : table.rows) width[0] = std::max(width[0], std::to_string(n).size());
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    width[c + 1] = std::to_string(table.columns[c]).size();
    for (const auto& row : table.cells) {
      if (row[c]) width[c + 1] = std::max(width[c + 1], to_decimal(*row[c]).size());
    }
  }
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  out << pad(corner, width[0]) << " |";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << " " << pad(std::to_string(table.columns[c]), width[c + 1]);
  }
  out << "\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    std::string line = pad(std::to_string(table.rows[r]), width[0]) + " |";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      const auto& cell = table.cells[r][c];
      line += " " + pad(cell ? to_decimal(*cell) : "", width[c + 1]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

std::string oeis_bfile(SequenceKind kind, long count) {
  if (count < 0) fail(ErrorCode::kInvalidArgument, "term count must be nonnegative");
  std::ostringstream out;
  long emitted = 0;
  auto emit = [&](long index, const Count& value) {
    out << index << " " << to_decimal(value) << "\n";
    ++emitted;
  };
  switch (kind) {
    case SequenceKind::kU:
      for (long g = 1; g <= count; ++g) emit(g, u_of_g(g));
      break;
    case SequenceKind::kHultmanFlat:
      for (long n = 0; emitted < count; ++n) {
        for (long k = 1; k <= n + 1 && emitted < count; ++k) emit(emitted, hultman_H(n + 1, k));
      }
      break;
    case SequenceKind::kReducedFlat:
      for (long n = 3; emitted < count; ++n) {
        for (long k = 1; 2 * k <= n && emitted < count; ++k) emit(emitted + 1, reduced_r(n, k));
      }
      break;
  }
  return out.str();
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const CheckResult& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  out << (ok() ? "all checks passed" : "verification FAILED") << "\n";
  return out.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["passed"] = ok();
  auto checks_json = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks) {
    checks_json.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["checks"] = std::move(checks_json);
  return j.dump();
}

std::optional<std::string> model_cross_check(std::size_t m) {
  CircularIterator it(m);
  while (it.next()) {
    const Permutation pi = it.face();
    const std::string where = "pi=" + format_cycles(pi);
    const Hypermap h = Hypermap::from_face(pi);
    const std::size_t k = h.classify().k;
    const CycleGraph graph(pi);
    if (graph.alternating_cycles().size() != k) return where + ": alternating cycle count differs from z(alpha)";
    if (alternating_to_alpha(graph) != h.alpha()) return where + ": alternating cycles do not project to alpha";
    if (2 * h.genus() != m - k) return where + ": genus differs from (m - z(alpha))/2";
    const GluingDiagram gluing = gluing_from_pi(pi);
    if (gluing.genus() != h.genus()) return where + ": gluing genus differs";
    if (gluing.vertex_class_count() != k + 1) return where + ": vertex classes differ from z(alpha)+1";
    if (pi_from_gluing(gluing) != pi) return where + ": gluing round trip failed";
    if (h.face() != pi) return where + ": face round trip failed";
    if ((breakpoints(pi).size() == m) != h.classify().is_reduced) return where + ": breakpoint/reduced mismatch";
  }
  return std::nullopt;
}

VerifyReport verify_all(std::size_t max_m, const ScanOptions& options) {
  if (max_m < 1) fail(ErrorCode::kInvalidArgument, "verify needs max_m >= 1");
  check_feasible(max_m, options);
  VerifyReport report;
  for (std::size_t m = 1; m <= max_m; ++m) {
    const DistributionReport d = distribution_check(m, options);
    CheckResult check{"distribution m=" + std::to_string(m) + " (" + to_decimal(d.cycles.total) + " faces)", true, ""};
    if (!d.ok()) {
      const Mismatch& first = d.mismatches.front();
      check.passed = false;
      check.detail = first.quantity + "(" + std::to_string(first.m) + "," + std::to_string(first.k) +
                     "): oracle " + to_decimal(first.oracle) + " formula " + to_decimal(first.formula);
    }
    report.checks.push_back(std::move(check));
  }
  for (std::size_t m = 1; m <= std::min<std::size_t>(max_m, 7); ++m) {
    CheckResult check{"models m=" + std::to_string(m), true, ""};
    if (auto failure = model_cross_check(m)) {
      check.passed = false;
      check.detail = *failure;
    }
    report.checks.push_back(std::move(check));
  }
  {
    CheckResult check{"worked examples", true, ""};
    const Hypermap eight = Hypermap::from_face(Permutation::from_cycles({{0, 4, 1, 6, 2, 5, 7, 3}}, 8));
    const Hypermap five = Hypermap::from_face(Permutation::from_cycles({{0, 2, 3, 1, 4}}, 5));
    if (eight.alpha() != Permutation::from_cycles({{1, 5, 3, 0, 4}, {7, 6, 2}}, 8)) {
      check.passed = false;
      check.detail = "alpha of (0 4 1 6 2 5 7 3) is " + format_cycles(eight.alpha());
    } else if (five.alpha() != Permutation::from_cycles({{1, 4, 2}}, 5) || five.genus() != 1 ||
               gluing_from_pi(five.face()).genus() != 1) {
      check.passed = false;
      check.detail = "(0 2 3 1 4) does not give alpha (0)(1 4 2)(3) of genus 1";
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace hypermono
