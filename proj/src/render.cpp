#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

#include "hypermono/models.hpp"

namespace hypermono {

namespace {

struct Vec2 {
  double x;
  double y;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

constexpr double kCenter = 260.0;
constexpr double kRadius = 200.0;

// Corner c of the 2m-gon, counterclockwise on screen starting from the left.
Vec2 corner(std::size_t c, std::size_t corners) {
  const double theta = std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(c) /
                                              static_cast<double>(corners);
  return {kCenter + kRadius * std::cos(theta), kCenter - kRadius * std::sin(theta)};
}

Vec2 outward(Vec2 p, double distance) {
  const double dx = p.x - kCenter;
  const double dy = p.y - kCenter;
  const double len = std::hypot(dx, dy);
  if (len < 1e-9) return p;
  return {p.x + dx / len * distance, p.y + dy / len * distance};
}

// Point on side `side` between its two corners; for the digon the sides are
// drawn as half circles and the midpoint sits on the arc.
Vec2 side_point(std::size_t side, std::size_t corners, double t) {
  if (corners == 2) {
    const double theta = std::numbers::pi + std::numbers::pi * (static_cast<double>(side) + t);
    return {kCenter + kRadius * std::cos(theta), kCenter - kRadius * std::sin(theta)};
  }
  Vec2 a = corner(side, corners);
  Vec2 b = corner((side + 1) % corners, corners);
  return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}

std::string side_path(std::size_t from, std::size_t to, std::size_t corners, bool black) {
  Vec2 a = corner(from, corners);
  Vec2 b = corner(to, corners);
  std::string d = "M " + fmt(a.x) + " " + fmt(a.y) + " ";
  if (corners == 2) {
    // black runs counterclockwise (sweep 0 on screen), grey clockwise.
    return d + "A " + fmt(kRadius) + " " + fmt(kRadius) + " 0 0 " + (black ? "0 " : "1 ") + fmt(b.x) + " " +
           fmt(b.y);
  }
  return d + "L " + fmt(b.x) + " " + fmt(b.y);
}

}  // namespace

std::string render_dot(const CycleGraph& graph, unsigned base) {
  std::ostringstream out;
  out << "digraph cycle_graph {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle, fontname=\"Helvetica\"];\n";
  for (Point i = 0; i < graph.size(); ++i) {
    for (Sign s : {Sign::kNegative, Sign::kPositive}) {
      const std::string id = to_string(SignedVertex{i, s}, base);
      out << "  \"" << id << "\" [label=\"" << (i + base) << (s == Sign::kPositive ? "⁺" : "⁻") << "\"];\n";
    }
  }
  std::size_t index = 0;
  for (const auto& cycle : graph.alternating_cycles()) {
    out << "  // alternating cycle " << index++ << "\n";
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const SignedVertex& from = cycle[j];
      const SignedVertex& to = cycle[(j + 1) % cycle.size()];
      const bool grey = from.sign == Sign::kNegative;
      out << "  \"" << to_string(from, base) << "\" -> \"" << to_string(to, base) << "\" [label=\""
          << (grey ? "σ" : "π⁻¹") << "\", color=\"" << (grey ? "gray60" : "black") << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string render_svg(const GluingDiagram& diagram, unsigned base) {
  const std::size_t m = diagram.size();
  const std::size_t corners = 2 * m;
  const double size = 2 * kCenter;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(size) << "\" height=\""
      << fmt(size) << "\" viewBox=\"0 0 " << fmt(size) << " " << fmt(size) << "\">\n";
  out << "  <defs>\n";
  for (const char* colour : {"black", "gray"}) {
    out << "    <marker id=\"arrow-" << colour
        << "\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"8\" markerHeight=\"8\" "
           "orient=\"auto\">\n";
    out << "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"" << colour << "\"/>\n";
    out << "    </marker>\n";
  }
  out << "  </defs>\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "  <g id=\"pairing\" stroke=\"#4a7ab5\" stroke-width=\"1\" stroke-dasharray=\"4 3\">\n";
  for (std::size_t i = 0; i < m; ++i) {
    Vec2 a = side_point(i, corners, 0.5);
    Vec2 b = side_point(diagram.grey_position(diagram.pairing()[i]), corners, 0.5);
    out << "    <line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x) << "\" y2=\""
        << fmt(b.y) << "\"/>\n";
  }
  out << "  </g>\n";

  out << "  <g id=\"black-sides\" fill=\"none\" stroke=\"black\" stroke-width=\"3\">\n";
  for (std::size_t i = 0; i < m; ++i) {
    out << "    <path d=\"" << side_path(i, i + 1, corners, true) << "\" marker-end=\"url(#arrow-black)\"/>\n";
  }
  out << "  </g>\n";
  out << "  <g id=\"grey-sides\" fill=\"none\" stroke=\"gray\" stroke-width=\"3\">\n";
  for (std::size_t j = 0; j < m; ++j) {
    // clockwise: from the later corner back to the earlier one
    const std::size_t s = diagram.grey_position(static_cast<Point>(j));
    out << "    <path d=\"" << side_path((s + 1) % corners, s, corners, false)
        << "\" marker-end=\"url(#arrow-gray)\"/>\n";
  }
  out << "  </g>\n";

  out << "  <g id=\"side-labels\" font-family=\"Helvetica\" font-size=\"14\" text-anchor=\"middle\">\n";
  for (std::size_t s = 0; s < corners; ++s) {
    const bool black = s < m;
    const std::size_t label = black ? s : corners - 1 - s;
    Vec2 p = outward(side_point(s, corners, 0.5), 16);
    out << "    <text x=\"" << fmt(p.x) << "\" y=\"" << fmt(p.y + 5) << "\" fill=\"" << (black ? "black" : "gray")
        << "\">" << (label + base) << "</text>\n";
  }
  out << "  </g>\n";

  // Vertex classes numbered in order of their smallest corner.
  std::map<std::size_t, std::size_t> class_number;
  for (std::size_t c = 0; c < corners; ++c) class_number.emplace(diagram.corner_class()[c], class_number.size());
  out << "  <g id=\"corners\" font-family=\"Helvetica\" font-size=\"12\" text-anchor=\"middle\">\n";
  for (std::size_t c = 0; c < corners; ++c) {
    Vec2 p = corner(c, corners);
    Vec2 label = outward(p, -18);
    out << "    <circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\"4\" fill=\"#c0392b\"/>\n";
    out << "    <text x=\"" << fmt(label.x) << "\" y=\"" << fmt(label.y + 4) << "\" fill=\"#c0392b\">v"
        << class_number.at(diagram.corner_class()[c]) << "</text>\n";
  }
  out << "  </g>\n";
  out << "  <text x=\"10\" y=\"20\" font-family=\"Helvetica\" font-size=\"13\">m=" << m
      << " vertices=" << diagram.vertex_class_count() << " genus=" << diagram.genus() << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace hypermono
