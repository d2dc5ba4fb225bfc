#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypermono {

using Point = std::uint32_t;
using Cycle = std::vector<Point>;

/// Cycles of a permutation in canonical form: each cycle starts at its
/// smallest point and the cycles are ordered by that leading point. Two
/// decompositions are equal iff the permutations are equal.
struct CycleDecomposition {
  std::vector<Cycle> cycles;

  std::size_t count() const { return cycles.size(); }
  bool operator==(const CycleDecomposition&) const = default;
};

/// A bijection of {0, ..., m-1}, m >= 1. Immutable once constructed.
class Permutation {
 public:
  /// Validates that `images` is a bijection; images[x] is the image of x.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t m);

  /// The standard circular permutation x -> x+1 mod m.
  static Permutation rotation(std::size_t m);

  /// Builds from cycles; points not listed are fixed.
  static Permutation from_cycles(std::span<const Cycle> cycles, std::size_t m);
  static Permutation from_cycles(std::initializer_list<Cycle> cycles, std::size_t m);

  /// The circular permutation whose single cycle visits `order` in sequence.
  static Permutation from_cycle_order(std::span<const Point> order);

  std::size_t size() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Permutation inverse() const;
  CycleDecomposition cycles() const;
  std::size_t cycle_count() const;
  bool is_circular() const { return cycle_count() == 1; }
  bool is_identity() const;
  /// true iff the permutation is even (m - z is even).
  bool is_even() const { return (size() - cycle_count()) % 2 == 0; }
  std::vector<Point> fixed_points() const;

  /// Splices `x` out of its cycle: the preimage of x is sent to the image of
  /// x. Surviving labels above x shift down by one.
  Permutation remove_point(Point x) const;

  /// Inverse of remove_point for a point inserted right after `after` in its
  /// cycle: the new point gets label after+1 and is sent to the old image of
  /// `after`. `fixed` inserts it as a new fixed point instead.
  Permutation insert_point_after(Point after, bool fixed) const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

/// Right-to-left product: compose(p, q)(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// Parses cycle notation such as "(1 5 3 0 4)(7,6,2)". Labels are read with
/// `base` subtracted. When `m` is absent it is inferred from the largest label.
Permutation parse_cycles(std::string_view text, std::optional<std::size_t> m = std::nullopt,
                         unsigned base = 0);

/// Canonical cycle notation with fixed points written as singleton cycles,
/// labels offset by `base`, e.g. "(0)(1 4 2)(3)".
std::string format_cycles(const Permutation& p, unsigned base = 0);

}  // namespace hypermono
