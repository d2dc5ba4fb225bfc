#include "hypermono/hypermap.hpp"

#include <json.hpp>

#include "hypermono/error.hpp"

namespace hypermono {

namespace {

bool is_transitive(const Permutation& sigma, const Permutation& alpha) {
  std::vector<bool> reached(sigma.size(), false);
  std::vector<Point> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Point x = stack.back();
    stack.pop_back();
    for (Point y : {sigma(x), alpha(x)}) {
      if (!reached[y]) {
        reached[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == sigma.size();
}

void require_unicellular_monopole(const Hypermap& h, const char* op) {
  const HypermapClass& c = h.classify();
  if (!c.is_monopole || !c.is_unicellular) {
    fail(ErrorCode::kInvalidArgument, std::string(op) + " needs a unicellular hypermonopole");
  }
}

}  // namespace

std::size_t genus_of(std::size_t m, std::size_t z_sigma, std::size_t z_alpha, std::size_t z_face) {
  const std::size_t z = z_sigma + z_alpha + z_face;
  if (z > m + 2 || (m + 2 - z) % 2 != 0) {
    fail(ErrorCode::kInternal, "inconsistent cycle counts: m=" + std::to_string(m) +
                                   " z=" + std::to_string(z_sigma) + "+" + std::to_string(z_alpha) +
                                   "+" + std::to_string(z_face));
  }
  return (m + 2 - z) / 2;
}

Hypermap::Hypermap(Permutation sigma, Permutation alpha)
    : sigma_(std::move(sigma)), alpha_(std::move(alpha)), face_(compose(alpha_.inverse(), sigma_)) {
  if (!is_transitive(sigma_, alpha_)) fail(ErrorCode::kNotHypermap, "not a hypermap: group is not transitive");
  const std::size_t z_sigma = sigma_.cycle_count();
  const std::size_t z_face = face_.cycle_count();
  class_.k = alpha_.cycle_count();
  class_.genus = genus_of(size(), z_sigma, class_.k, z_face);
  class_.is_monopole = z_sigma == 1;
  class_.is_unicellular = z_face == 1;
  class_.is_reduced = class_.is_monopole && class_.is_unicellular && alpha_.fixed_points().empty();
}

Hypermap Hypermap::from_vertex_and_face(const Permutation& sigma, const Permutation& face) {
  if (!sigma.is_circular()) fail(ErrorCode::kNotCircular, "vertex permutation is not circular");
  if (!face.is_circular()) fail(ErrorCode::kNotCircular, "face permutation is not circular");
  return Hypermap(sigma, compose(sigma, face.inverse()));
}

Hypermap Hypermap::from_face(const Permutation& face) {
  return from_vertex_and_face(Permutation::rotation(face.size()), face);
}

Hypermap remove_bud(const Hypermap& h, Point i) {
  require_unicellular_monopole(h, "remove_bud");
  if (h.size() < 2) fail(ErrorCode::kInvalidArgument, "cannot remove the only point");
  if (i >= h.size() || h.alpha()(i) != i) {
    fail(ErrorCode::kInvalidArgument, "point " + std::to_string(i) + " is not a bud");
  }
  return Hypermap(h.sigma().remove_point(i), h.alpha().remove_point(i));
}

Hypermap insert_bud(const Hypermap& h, Point after) {
  require_unicellular_monopole(h, "insert_bud");
  if (after >= h.size()) {
    fail(ErrorCode::kInvalidArgument, "insertion point " + std::to_string(after) + " out of range");
  }
  return Hypermap(h.sigma().insert_point_after(after, false), h.alpha().insert_point_after(after, true));
}

Hypermap reduce(const Hypermap& h) {
  require_unicellular_monopole(h, "reduce");
  Hypermap current = h;
  while (current.size() > 1) {
    std::vector<Point> buds = current.buds();
    if (buds.empty()) break;
    current = remove_bud(current, buds.front());
  }
  return current;
}

std::string to_json(const Hypermap& h, unsigned base) {
  nlohmann::ordered_json j;
  j["m"] = h.size();
  j["sigma"] = format_cycles(h.sigma(), base);
  j["alpha"] = format_cycles(h.alpha(), base);
  j["face"] = format_cycles(h.face(), base);
  j["genus"] = h.genus();
  j["k"] = h.classify().k;
  j["reduced"] = h.classify().is_reduced;
  return j.dump();
}

Hypermap hypermap_from_json(const std::string& text, unsigned base) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    std::size_t m = j.at("m").get<std::size_t>();
    return Hypermap(parse_cycles(j.at("sigma").get<std::string>(), m, base),
                    parse_cycles(j.at("alpha").get<std::string>(), m, base));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kInvalidArgument, std::string("bad hypermap JSON: ") + e.what());
  }
}

}  // namespace hypermono
