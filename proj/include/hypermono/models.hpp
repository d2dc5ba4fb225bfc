#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypermono/permutation.hpp"

namespace hypermono {

enum class Sign { kNegative, kPositive };

struct SignedVertex {
  Point point = 0;
  Sign sign = Sign::kNegative;

  bool operator==(const SignedVertex&) const = default;
};

std::string to_string(const SignedVertex& v, unsigned base = 0);

/// Two-coloured cycle graph of a circular face pi, with sigma = (0 ... m-1).
/// Each point i has copies i- and i+. Grey (sigma) edges run i- -> (i+1)+ and
/// black (pi^-1) edges run i+ -> pi^-1(i)-, so every vertex has one edge of
/// each colour in and out and the graph splits into alternating cycles.
class CycleGraph {
 public:
  explicit CycleGraph(Permutation pi);

  std::size_t size() const { return pi_.size(); }
  const Permutation& pi() const { return pi_; }

  SignedVertex grey_target(Point i) const;   // from i-
  SignedVertex black_target(Point i) const;  // from i+

  /// Each cycle starts at its smallest negative vertex, which is followed by
  /// a grey edge; cycles are ordered by that starting vertex.
  const std::vector<std::vector<SignedVertex>>& alternating_cycles() const { return cycles_; }

 private:
  Permutation pi_;
  Permutation pi_inverse_;
  std::vector<std::vector<SignedVertex>> cycles_;
};

/// Throws kNotCircular unless pi is circular.
CycleGraph build_cycle_graph(const Permutation& pi);

/// Positive vertices of each alternating cycle, in traversal order, read as
/// the cycles of alpha = sigma pi^-1.
Permutation alternating_to_alpha(const CycleGraph& graph);

/// Points i with pi(i) != i+1 mod m.
std::vector<Point> breakpoints(const Permutation& pi);

/// A 2m-gon with m black sides followed by m grey sides, black side i glued
/// to grey side pairing[i]. Black side 0 and grey side 0 stand for the edges
/// added along the cut diagonal.
///
/// Corners are numbered 0 .. 2m-1 counterclockwise; black side i runs from
/// corner i to corner i+1. Grey sides are numbered clockwise, so grey side j
/// occupies the boundary from corner 2m-1-j to corner 2m-j (mod 2m). Gluing
/// respects orientation: the start of one side is identified with the end of
/// the other along the boundary.
class GluingDiagram {
 public:
  /// Throws kInvalidArgument unless `pairing` is a bijection of {0..m-1}.
  explicit GluingDiagram(std::vector<Point> pairing);

  std::size_t size() const { return pairing_.size(); }
  const std::vector<Point>& pairing() const { return pairing_; }

  /// Boundary position (0 .. 2m-1) of grey side j.
  std::size_t grey_position(Point j) const { return 2 * size() - 1 - j; }

  /// Class representative (smallest corner) of each corner.
  const std::vector<std::size_t>& corner_class() const { return corner_class_; }
  std::size_t vertex_class_count() const { return vertex_classes_; }
  /// From V - m + 1 = 2 - 2g.
  std::size_t genus() const { return genus_; }

 private:
  std::vector<Point> pairing_;
  std::vector<std::size_t> corner_class_;
  std::size_t vertex_classes_ = 0;
  std::size_t genus_ = 0;
};

/// Writes pi as its cycle (pi_0 pi_1 ... pi_{m-1}) starting at pi_0 = 0 and
/// glues black side i to grey side pi_i. Throws kNotCircular unless pi is
/// circular.
GluingDiagram gluing_from_pi(const Permutation& pi);

/// Reads the pairing back as a cycle; throws kNotCircular unless the cut
/// sides are glued to each other (pairing[0] = 0).
Permutation pi_from_gluing(const GluingDiagram& diagram);

std::string cycle_graph_json(const CycleGraph& graph, unsigned base = 0);
std::string gluing_json(const GluingDiagram& diagram, unsigned base = 0);

/// Graphviz digraph with 2m signed nodes and 2m labelled edges.
std::string render_dot(const CycleGraph& graph, unsigned base = 0);

/// SVG 1.1 drawing of the polygon: sides as arrows, pairing chords between
/// glued sides, corners labelled by vertex class.
std::string render_svg(const GluingDiagram& diagram, unsigned base = 0);

}  // namespace hypermono
