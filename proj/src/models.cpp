#include "hypermono/models.hpp"

#include <numeric>

#include <json.hpp>

#include "hypermono/error.hpp"

namespace hypermono {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller root wins, so every root is the minimum of its class.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_circular(const Permutation& pi) {
  if (!pi.is_circular()) fail(ErrorCode::kNotCircular, "face permutation is not circular");
}

}  // namespace

std::string to_string(const SignedVertex& v, unsigned base) {
  return std::to_string(v.point + base) + (v.sign == Sign::kPositive ? "+" : "-");
}

CycleGraph::CycleGraph(Permutation pi) : pi_(std::move(pi)), pi_inverse_(pi_.inverse()) {
  require_circular(pi_);
  const std::size_t m = size();
  std::vector<bool> visited(m, false);  // negative copies; positives follow them
  for (Point start = 0; start < m; ++start) {
    if (visited[start]) continue;
    std::vector<SignedVertex> cycle;
    Point i = start;
    do {
      visited[i] = true;
      SignedVertex plus = grey_target(i);
      cycle.push_back({i, Sign::kNegative});
      cycle.push_back(plus);
      i = black_target(plus.point).point;
    } while (i != start);
    cycles_.push_back(std::move(cycle));
  }
}

SignedVertex CycleGraph::grey_target(Point i) const {
  return {static_cast<Point>((i + 1) % size()), Sign::kPositive};
}

SignedVertex CycleGraph::black_target(Point i) const { return {pi_inverse_(i), Sign::kNegative}; }

CycleGraph build_cycle_graph(const Permutation& pi) { return CycleGraph(pi); }

Permutation alternating_to_alpha(const CycleGraph& graph) {
  std::vector<Cycle> cycles;
  for (const auto& alternating : graph.alternating_cycles()) {
    Cycle positives;
    for (const SignedVertex& v : alternating) {
      if (v.sign == Sign::kPositive) positives.push_back(v.point);
    }
    cycles.push_back(std::move(positives));
  }
  return Permutation::from_cycles(cycles, graph.size());
}

std::vector<Point> breakpoints(const Permutation& pi) {
  std::vector<Point> out;
  const std::size_t m = pi.size();
  for (Point i = 0; i < m; ++i) {
    if (pi(i) != (i + 1) % m) out.push_back(i);
  }
  return out;
}

GluingDiagram::GluingDiagram(std::vector<Point> pairing) : pairing_(std::move(pairing)) {
  // Validates the bijection.
  const Permutation as_permutation(pairing_);
  const std::size_t m = size();
  const std::size_t corners = 2 * m;
  DisjointSets sets(corners);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t grey_start = grey_position(pairing_[i]);
    const std::size_t grey_end = (grey_start + 1) % corners;
    sets.unite(i, grey_end);
    sets.unite(i + 1, grey_start);
  }
  corner_class_.resize(corners);
  for (std::size_t c = 0; c < corners; ++c) {
    corner_class_[c] = sets.find(c);
    if (corner_class_[c] == c) ++vertex_classes_;
  }
  // V - E + F with E = m glued edges and F = 1.
  if (vertex_classes_ > m + 1 || (m + 1 - vertex_classes_) % 2 != 0) {
    fail(ErrorCode::kInternal, "gluing has non-integral genus");
  }
  genus_ = (m + 1 - vertex_classes_) / 2;
}

GluingDiagram gluing_from_pi(const Permutation& pi) {
  require_circular(pi);
  std::vector<Point> order;
  order.reserve(pi.size());
  Point x = 0;
  do {
    order.push_back(x);
    x = pi(x);
  } while (x != 0);
  return GluingDiagram(std::move(order));
}

Permutation pi_from_gluing(const GluingDiagram& diagram) {
  if (diagram.pairing().front() != 0) {
    fail(ErrorCode::kNotCircular, "gluing does not encode a unicellular hypermonopole");
  }
  return Permutation::from_cycle_order(diagram.pairing());
}

std::string cycle_graph_json(const CycleGraph& graph, unsigned base) {
  nlohmann::ordered_json j;
  j["m"] = graph.size();
  j["pi"] = format_cycles(graph.pi(), base);
  j["alpha"] = format_cycles(alternating_to_alpha(graph), base);
  auto cycles = nlohmann::ordered_json::array();
  for (const auto& cycle : graph.alternating_cycles()) {
    auto vertices = nlohmann::ordered_json::array();
    for (const SignedVertex& v : cycle) vertices.push_back(to_string(v, base));
    cycles.push_back(std::move(vertices));
  }
  j["alternating_cycles"] = std::move(cycles);
  return j.dump();
}

std::string gluing_json(const GluingDiagram& diagram, unsigned base) {
  nlohmann::ordered_json j;
  j["m"] = diagram.size();
  auto pairing = nlohmann::ordered_json::array();
  for (Point grey : diagram.pairing()) pairing.push_back(grey + base);
  j["pairing"] = std::move(pairing);
  j["corner_classes"] = diagram.corner_class();
  j["vertex_classes"] = diagram.vertex_class_count();
  j["genus"] = diagram.genus();
  return j.dump();
}

}  // namespace hypermono
