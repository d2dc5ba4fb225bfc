#include "hypermono/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "hypermono/error.hpp"

namespace hypermono {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) fail(ErrorCode::kInvalidArgument, "permutation needs at least one point");
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size()) {
      fail(ErrorCode::kInvalidArgument, "image " + std::to_string(y) + " out of range");
    }
    if (seen[y]) fail(ErrorCode::kInvalidArgument, "image " + std::to_string(y) + " repeated");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t m) {
  std::vector<Point> images(m);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::rotation(std::size_t m) {
  std::vector<Point> images(m);
  for (std::size_t x = 0; x < m; ++x) images[x] = static_cast<Point>((x + 1) % m);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::span<const Cycle> cycles, std::size_t m) {
  if (m == 0) fail(ErrorCode::kInvalidArgument, "permutation needs at least one point");
  std::vector<Point> images(m);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> listed(m, false);
  for (const Cycle& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      Point x = cycle[j];
      if (x >= m) {
        fail(ErrorCode::kInvalidArgument,
             "point " + std::to_string(x) + " out of range for m=" + std::to_string(m));
      }
      if (listed[x]) fail(ErrorCode::kInvalidArgument, "point " + std::to_string(x) + " listed twice");
      listed[x] = true;
      images[x] = cycle[(j + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::initializer_list<Cycle> cycles, std::size_t m) {
  return from_cycles(std::span<const Cycle>(cycles.begin(), cycles.size()), m);
}

Permutation Permutation::from_cycle_order(std::span<const Point> order) {
  std::vector<Point> images(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    if (order[j] >= order.size()) fail(ErrorCode::kInvalidArgument, "cycle order is not a permutation");
    images[order[j]] = order[(j + 1) % order.size()];
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(size());
  for (std::size_t x = 0; x < size(); ++x) inv[images_[x]] = static_cast<Point>(x);
  return Permutation(std::move(inv));
}

CycleDecomposition Permutation::cycles() const {
  CycleDecomposition out;
  std::vector<bool> seen(size(), false);
  // Scanning leaders in increasing order yields canonical form directly.
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    Cycle cycle;
    Point x = static_cast<Point>(start);
    do {
      seen[x] = true;
      cycle.push_back(x);
      x = images_[x];
    } while (x != start);
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::size_t Permutation::cycle_count() const {
  std::vector<bool> seen(size(), false);
  std::size_t z = 0;
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    ++z;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) seen[x] = true;
  }
  return z;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::vector<Point> Permutation::fixed_points() const {
  std::vector<Point> out;
  for (std::size_t x = 0; x < size(); ++x) {
    if (images_[x] == x) out.push_back(static_cast<Point>(x));
  }
  return out;
}

Permutation Permutation::remove_point(Point x) const {
  if (size() < 2) fail(ErrorCode::kInvalidArgument, "cannot remove a point from a 1-point permutation");
  if (x >= size()) fail(ErrorCode::kInvalidArgument, "point " + std::to_string(x) + " out of range");
  auto relabel = [x](Point y) { return y > x ? y - 1 : y; };
  std::vector<Point> images;
  images.reserve(size() - 1);
  for (std::size_t y = 0; y < size(); ++y) {
    if (y == x) continue;
    Point image = images_[y] == x ? images_[x] : images_[y];
    images.push_back(relabel(image));
  }
  return Permutation(std::move(images));
}

Permutation Permutation::insert_point_after(Point after, bool fixed) const {
  if (after >= size()) {
    fail(ErrorCode::kInvalidArgument, "insertion point " + std::to_string(after) + " out of range");
  }
  const Point inserted = after + 1;
  auto relabel = [inserted](Point y) { return y >= inserted ? y + 1 : y; };
  std::vector<Point> images(size() + 1);
  for (std::size_t y = 0; y < size(); ++y) {
    images[relabel(static_cast<Point>(y))] = relabel(images_[y]);
  }
  if (fixed) {
    images[inserted] = inserted;
  } else {
    images[inserted] = images[after];
    images[after] = inserted;
  }
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    fail(ErrorCode::kInvalidArgument, "cannot compose permutations of sizes " +
                                          std::to_string(p.size()) + " and " + std::to_string(q.size()));
  }
  std::vector<Point> images(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) images[x] = p(q(static_cast<Point>(x)));
  return Permutation(std::move(images));
}

Permutation parse_cycles(std::string_view text, std::optional<std::size_t> m, unsigned base) {
  std::vector<Cycle> cycles;
  std::optional<Cycle> open;
  std::size_t max_label = 0;
  bool any = false;
  std::size_t i = 0;
  auto error = [&](const std::string& what) {
    fail(ErrorCode::kInvalidArgument, "bad cycle notation \"" + std::string(text) + "\": " + what);
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (c == '(') {
      if (open) error("nested '('");
      open.emplace();
      ++i;
    } else if (c == ')') {
      if (!open) error("unmatched ')'");
      if (!open->empty()) cycles.push_back(std::move(*open));
      open.reset();
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!open) error("label outside parentheses");
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > (1u << 30)) error("label too large");
        ++i;
      }
      if (value < base) error("label " + std::to_string(value) + " below base " + std::to_string(base));
      value -= base;
      max_label = std::max(max_label, value);
      any = true;
      open->push_back(static_cast<Point>(value));
    } else {
      error(std::string("unexpected character '") + c + "'");
    }
  }
  if (open) error("unterminated cycle");
  std::size_t size = m.value_or(any ? max_label + 1 : 0);
  if (size == 0) error("cannot infer the number of points");
  return Permutation::from_cycles(cycles, size);
}

std::string format_cycles(const Permutation& p, unsigned base) {
  std::string out;
  for (const Cycle& cycle : p.cycles().cycles) {
    out += '(';
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(cycle[j] + base);
    }
    out += ')';
  }
  return out;
}

}  // namespace hypermono
