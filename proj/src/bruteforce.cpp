#include "hypermono/bruteforce.hpp"

#include <atomic>
#include <thread>

#include "hypermono/error.hpp"

namespace hypermono {

namespace {

constexpr std::size_t kHardMaxPoints = 63;

// Runs `work` on every block of the m-point scan space and returns the
// per-block results in block order, independent of the thread count.
template <typename Result, typename Work>
std::vector<Result> run_blocks(std::size_t m, unsigned threads, Work work) {
  const std::size_t blocks = CircularIterator::block_count(m);
  std::vector<Result> results(blocks);
  const unsigned workers = std::min<std::size_t>(resolve_threads(threads), blocks);
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) results[b] = work(Slice{b, blocks});
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t b = next++; b < blocks; b = next++) results[b] = work(Slice{b, blocks});
    });
  }
  pool.clear();
  return results;
}

CountByK scan(std::size_t m, Slice slice, bool reduced, bool prune) {
  std::vector<std::uint64_t> counts(m + 1, 0);
  CircularIterator it(m, slice, reduced && prune);
  while (it.next()) {
    if (reduced && !prune) {
      // Unpruned reference path: test the adjacency condition on the leaf.
      auto order = it.order();
      bool adjacent = false;
      for (std::size_t j = 0; j < m; ++j) {
        if (order[(j + 1) % m] == (order[j] + 1) % m) adjacent = true;
      }
      if (adjacent) continue;
    }
    ++counts[it.hyperedge_count()];
  }
  CountByK out;
  for (std::size_t k = 0; k <= m; ++k) {
    if (counts[k] != 0) out.add(k, counts[k]);
  }
  return out;
}

CountByK scan_parallel(std::size_t m, const ScanOptions& options, bool reduced) {
  check_feasible(m, options);
  auto parts = run_blocks<CountByK>(m, options.threads,
                                    [&](Slice s) { return scan(m, s, reduced, options.prune); });
  CountByK total;
  for (const CountByK& part : parts) total.merge(part);
  return total;
}

}  // namespace

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

CircularIterator::CircularIterator(std::size_t m, Slice slice, bool reduced_only)
    : m_(m), slice_(slice), reduced_only_(reduced_only), prefix_depth_(std::min<std::size_t>(m - 1, 2)),
      order_(m, 0) {
  if (m == 0 || m > kHardMaxPoints) {
    fail(ErrorCode::kInfeasible, "point count " + std::to_string(m) + " outside 1.." +
                                     std::to_string(kHardMaxPoints));
  }
  if (slice.count == 0 || slice.index >= slice.count) fail(ErrorCode::kInvalidArgument, "bad slice");
}

std::size_t CircularIterator::block_count(std::size_t m) { return m >= 3 ? (m - 1) * (m - 2) : 1; }

bool CircularIterator::in_slice() const {
  std::size_t block = 0;
  if (prefix_depth_ >= 1) block = order_[1] - 1;
  if (prefix_depth_ == 2) {
    const Point a1 = order_[1];
    const Point a2 = order_[2];
    block = block * (m_ - 2) + (a2 - 1 - (a2 > a1 ? 1 : 0));
  }
  return block % slice_.count == slice_.index;
}

bool CircularIterator::allowed(std::size_t pos, Point v) const {
  if (!reduced_only_) return true;
  if (v == (order_[pos - 1] + 1) % m_) return false;
  // the last entry maps back to 0
  return pos != m_ - 1 || v != m_ - 1;
}

bool CircularIterator::next() {
  if (done_) return false;
  if (m_ == 1) {
    // pi = (0) always has the adjacency 0 -> 0+1 mod 1.
    done_ = true;
    return !reduced_only_ && in_slice();
  }
  std::size_t pos = m_ - 1;
  if (!started_) {
    started_ = true;
    pos = 1;
    order_[1] = 0;
  }
  while (true) {
    // 0 never occurs past position 0, so it marks "nothing tried yet".
    const Point prev = order_[pos];
    if (prev != 0) used_ &= ~(std::uint64_t{1} << prev);
    Point v = prev + 1;
    while (v < m_ && (((used_ >> v) & 1u) != 0 || !allowed(pos, v))) ++v;
    if (v == m_) {
      order_[pos] = 0;
      if (pos == 1) {
        done_ = true;
        return false;
      }
      --pos;
      continue;
    }
    order_[pos] = v;
    used_ |= std::uint64_t{1} << v;
    if (pos == prefix_depth_ && !in_slice()) continue;
    if (pos == m_ - 1) return true;
    ++pos;
    order_[pos] = 0;
  }
}

std::size_t CircularIterator::hyperedge_count() const {
  // alpha = sigma pi^-1 sends order[j] to order[j-1] + 1.
  Point alpha[64];
  for (std::size_t j = 0; j < m_; ++j) {
    const Point before = order_[j == 0 ? m_ - 1 : j - 1];
    alpha[order_[j]] = static_cast<Point>((before + 1) % m_);
  }
  std::uint64_t seen = 0;
  std::size_t z = 0;
  for (Point start = 0; start < m_; ++start) {
    if ((seen >> start) & 1u) continue;
    ++z;
    for (Point x = start; ((seen >> x) & 1u) == 0; x = alpha[x]) seen |= std::uint64_t{1} << x;
  }
  return z;
}

void CountByK::add(std::size_t k, const Count& n) {
  counts[k] += n;
  total += n;
}

void CountByK::merge(const CountByK& other) {
  for (const auto& [k, n] : other.counts) add(k, n);
}

Count CountByK::at(std::size_t k) const {
  auto it = counts.find(k);
  return it == counts.end() ? Count(0) : it->second;
}

void check_feasible(std::size_t m, const ScanOptions& options) {
  if (m == 0) fail(ErrorCode::kInvalidArgument, "point count must be at least 1");
  if (m > options.max_points && !options.force) {
    fail(ErrorCode::kInfeasible, "exhaustive scan on " + std::to_string(m) +
                                     " points exceeds the safety limit of " +
                                     std::to_string(options.max_points) + "; use --force to override");
  }
}

CountByK count_by_cycles(std::size_t m, const ScanOptions& options) { return scan_parallel(m, options, false); }

CountByK count_by_cycles(std::size_t m, Slice slice) { return scan(m, slice, false, false); }

CountByK count_reduced(std::size_t m, const ScanOptions& options) { return scan_parallel(m, options, true); }

CountByK count_reduced(std::size_t m, Slice slice, bool prune) { return scan(m, slice, true, prune); }

ReducedStream::ReducedStream(std::vector<std::pair<std::size_t, std::size_t>> targets)
    : targets_(std::move(targets)) {}

std::optional<Hypermap> ReducedStream::next() {
  while (current_ < targets_.size()) {
    const auto [m, k] = targets_[current_];
    if (!iterator_) iterator_.emplace(m, Slice{}, true);
    while (iterator_->next()) {
      if (iterator_->hyperedge_count() == k) return Hypermap::from_face(iterator_->face());
    }
    iterator_.reset();
    ++current_;
  }
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> genus_window(std::size_t g) {
  std::vector<std::pair<std::size_t, std::size_t>> window;
  for (std::size_t m = 2 * g + 1; m <= 4 * g; ++m) window.emplace_back(m, m - 2 * g);
  return window;
}

ReducedStream enumerate_reduced(std::size_t m, std::size_t k, const ScanOptions& options) {
  check_feasible(m, options);
  return ReducedStream({{m, k}});
}

ReducedStream enumerate_by_genus(std::size_t g, const ScanOptions& options) {
  if (g > 0) check_feasible(4 * g, options);
  return ReducedStream(genus_window(g));
}

std::vector<Hypermap> collect_reduced(std::size_t m, std::size_t k, const ScanOptions& options) {
  check_feasible(m, options);
  auto parts = run_blocks<std::vector<Hypermap>>(m, options.threads, [&](Slice s) {
    std::vector<Hypermap> found;
    CircularIterator it(m, s, true);
    while (it.next()) {
      if (it.hyperedge_count() == k) found.push_back(Hypermap::from_face(it.face()));
    }
    return found;
  });
  std::vector<Hypermap> out;
  for (auto& part : parts) {
    for (auto& h : part) out.push_back(std::move(h));
  }
  return out;
}

std::vector<Hypermap> collect_by_genus(std::size_t g, const ScanOptions& options) {
  if (g > 0) check_feasible(4 * g, options);
  std::vector<Hypermap> out;
  for (const auto& [m, k] : genus_window(g)) {
    for (auto& h : collect_reduced(m, k, options)) out.push_back(std::move(h));
  }
  return out;
}

DistributionReport distribution_check(std::size_t m, const ScanOptions& options) {
  DistributionReport report;
  report.m = m;
  report.cycles = count_by_cycles(m, options);
  report.reduced = count_reduced(m, options);
  const long n = static_cast<long>(m);
  for (std::size_t k = 1; k <= m; ++k) {
    Count formula = hultman_H(n, static_cast<long>(k));
    Count oracle = report.cycles.at(k);
    if (formula != oracle) report.mismatches.push_back({"H", m, k, oracle, formula});
  }
  for (std::size_t k = 1; k <= m; ++k) {
    // Reduced maps with k > m/2 cannot exist, so the formula value there is 0.
    Count formula = (m >= 2 && 2 * k <= m) ? reduced_r(n, static_cast<long>(k)) : Count(0);
    Count oracle = report.reduced.at(k);
    if (formula != oracle) report.mismatches.push_back({"r", m, k, oracle, formula});
  }
  return report;
}

}  // namespace hypermono
