#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypermono/permutation.hpp"

namespace hypermono {

/// Derived data of a hypermap, computed once at construction.
struct HypermapClass {
  bool is_monopole = false;    // single vertex: sigma circular
  bool is_unicellular = false; // single face: alpha^-1 sigma circular
  bool is_reduced = false;     // unicellular monopole without buds
  std::size_t genus = 0;
  std::size_t k = 0;           // number of hyperedges, z(alpha)

  bool operator==(const HypermapClass&) const = default;
};

/// A pair (sigma, alpha) generating a transitive group on {0, ..., m-1}.
/// sigma lists points around vertices, alpha around hyperedges, and the
/// faces are the cycles of alpha^-1 sigma.
class Hypermap {
 public:
  /// Throws kNotHypermap if <sigma, alpha> is not transitive.
  Hypermap(Permutation sigma, Permutation alpha);

  /// The unique unicellular hypermonopole (sigma, sigma pi^-1) with vertex
  /// sigma and face pi. Both inputs must be circular.
  static Hypermap from_vertex_and_face(const Permutation& sigma, const Permutation& face);

  /// from_vertex_and_face with sigma = (0 1 ... m-1).
  static Hypermap from_face(const Permutation& face);

  std::size_t size() const { return sigma_.size(); }
  const Permutation& sigma() const { return sigma_; }
  const Permutation& alpha() const { return alpha_; }
  const Permutation& face() const { return face_; }
  const HypermapClass& classify() const { return class_; }
  std::size_t genus() const { return class_.genus; }

  /// Fixed points of alpha.
  std::vector<Point> buds() const { return alpha_.fixed_points(); }

  bool operator==(const Hypermap& other) const {
    return sigma_ == other.sigma_ && alpha_ == other.alpha_;
  }

 private:
  Permutation sigma_;
  Permutation alpha_;
  Permutation face_;
  HypermapClass class_;
};

/// Genus from z(sigma) + z(alpha) + z(alpha^-1 sigma) = m + 2 - 2g.
/// Throws kInternal if the right-hand side is not a nonnegative even number.
std::size_t genus_of(std::size_t m, std::size_t z_sigma, std::size_t z_alpha, std::size_t z_face);

/// Removes bud `i` from a unicellular hypermonopole on at least two points.
/// Labels above i shift down by one; genus is unchanged.
Hypermap remove_bud(const Hypermap& h, Point i);

/// Adds a bud right after `after` on the vertex, with label after+1.
/// remove_bud(insert_bud(h, x), x + 1) == h.
Hypermap insert_bud(const Hypermap& h, Point after);

/// Removes the smallest bud until none remain or one point is left.
Hypermap reduce(const Hypermap& h);

/// {"m", "sigma", "alpha", "face", "genus", "k", "reduced"}; cycle strings
/// are offset by `base`.
std::string to_json(const Hypermap& h, unsigned base = 0);

/// Reads {"m", "sigma", "alpha"}; derived fields, if present, are ignored.
Hypermap hypermap_from_json(const std::string& text, unsigned base = 0);

}  // namespace hypermono
