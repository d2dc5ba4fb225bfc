#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypermono/exactcount.hpp"
#include "hypermono/hypermap.hpp"
#include "hypermono/permutation.hpp"

namespace hypermono {

inline constexpr std::size_t kDefaultMaxPoints = 12;

struct ScanOptions {
  unsigned threads = 1;                       // 0 means one per hardware thread
  std::size_t max_points = kDefaultMaxPoints; // refuse larger scans unless forced
  bool force = false;
  bool prune = true;                          // prefix pruning for reduced scans
};

/// Selects every `count`-th block of the scan space, starting at `index`.
struct Slice {
  std::size_t index = 0;
  std::size_t count = 1;
};

/// Walks the circular permutations of {0, ..., m-1} as face cycles
/// (0 a_1 ... a_{m-1}), with (a_1, ..., a_{m-1}) in lexicographic order.
/// Slices are formed from the first two entries a_1, a_2, so any set of
/// slices {0, ..., count-1} covers each permutation exactly once.
///
/// With `reduced_only`, prefixes containing an adjacency pi(x) = x+1 mod m are
/// cut off as soon as they appear, leaving exactly the faces of reduced
/// hypermonopoles.
class CircularIterator {
 public:
  CircularIterator(std::size_t m, Slice slice = {}, bool reduced_only = false);

  /// Advances to the next face; false once the slice is exhausted.
  bool next();

  /// Current face in cycle order, starting at 0.
  std::span<const Point> order() const { return {order_.data(), m_}; }
  Permutation face() const { return Permutation::from_cycle_order(order()); }

  /// z(sigma pi^-1) for the current face pi, sigma = (0 1 ... m-1).
  std::size_t hyperedge_count() const;

  /// Number of blocks the scan space is split into before slicing.
  static std::size_t block_count(std::size_t m);

 private:
  bool allowed(std::size_t pos, Point v) const;
  bool in_slice() const;

  std::size_t m_;
  Slice slice_;
  bool reduced_only_;
  std::size_t prefix_depth_;
  bool started_ = false;
  bool done_ = false;
  std::size_t pos_ = 0;
  std::vector<Point> order_;
  std::uint64_t used_ = 0;
};

/// Counts indexed by number of hyperedges k, for a fixed point count.
struct CountByK {
  std::map<std::size_t, Count> counts;
  Count total = 0;

  void add(std::size_t k, const Count& n);
  void merge(const CountByK& other);
  Count at(std::size_t k) const;
  bool operator==(const CountByK&) const = default;
};

/// Throws kInfeasible when m exceeds the safety limit without `force`.
void check_feasible(std::size_t m, const ScanOptions& options);

/// With sigma = (0 ... m-1), counts circular faces pi by z(sigma pi^-1).
CountByK count_by_cycles(std::size_t m, const ScanOptions& options = {});
CountByK count_by_cycles(std::size_t m, Slice slice);

/// Same scan restricted to reduced hypermonopoles (alpha without fixed points).
CountByK count_reduced(std::size_t m, const ScanOptions& options = {});
CountByK count_reduced(std::size_t m, Slice slice, bool prune = true);

/// Lazy stream of the reduced unicellular hypermonopoles with sigma fixed,
/// for each (m, k) in turn. Single consumer.
class ReducedStream {
 public:
  explicit ReducedStream(std::vector<std::pair<std::size_t, std::size_t>> targets);

  std::optional<Hypermap> next();

 private:
  std::vector<std::pair<std::size_t, std::size_t>> targets_;
  std::size_t current_ = 0;
  std::optional<CircularIterator> iterator_;
};

/// (m, k) for m = 2g+1 ... 4g with k = m - 2g.
std::vector<std::pair<std::size_t, std::size_t>> genus_window(std::size_t g);

ReducedStream enumerate_reduced(std::size_t m, std::size_t k, const ScanOptions& options = {});
ReducedStream enumerate_by_genus(std::size_t g, const ScanOptions& options = {});

/// Materialized enumeration in stream order; parallel over slices when
/// options.threads != 1.
std::vector<Hypermap> collect_reduced(std::size_t m, std::size_t k, const ScanOptions& options = {});
std::vector<Hypermap> collect_by_genus(std::size_t g, const ScanOptions& options = {});

struct Mismatch {
  std::string quantity;  // "H" or "r"
  std::size_t m = 0;
  std::size_t k = 0;
  Count oracle = 0;
  Count formula = 0;
};

struct DistributionReport {
  std::size_t m = 0;
  CountByK cycles;
  CountByK reduced;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Compares both oracle scans on m points with the closed formulas.
DistributionReport distribution_check(std::size_t m, const ScanOptions& options = {});

unsigned resolve_threads(unsigned requested);

}  // namespace hypermono
