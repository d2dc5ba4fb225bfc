#include <doctest.h>

#include <cstring>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "hypermono/hypermono.h"

namespace {

struct PermDeleter {
  void operator()(hm_perm* p) const { hm_perm_free(p); }
};
struct MapDeleter {
  void operator()(hm_hypermap* h) const { hm_hypermap_free(h); }
};
struct GluingDeleter {
  void operator()(hm_gluing* g) const { hm_gluing_free(g); }
};
struct EnumDeleter {
  void operator()(hm_enumerator* e) const { hm_enumerator_free(e); }
};
using Perm = std::unique_ptr<hm_perm, PermDeleter>;
using Map = std::unique_ptr<hm_hypermap, MapDeleter>;
using Gluing = std::unique_ptr<hm_gluing, GluingDeleter>;
using Enumerator = std::unique_ptr<hm_enumerator, EnumDeleter>;

// Takes ownership of a library-allocated string.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  hm_free(s);
  return out;
}

Perm parse(const char* text, std::size_t m = 0, unsigned base = 0) {
  hm_perm* p = nullptr;
  REQUIRE(hm_perm_parse(text, m, base, &p) == HM_OK);
  return Perm(p);
}

std::string format(const hm_perm* p, unsigned base = 0) {
  char* s = nullptr;
  REQUIRE(hm_perm_format(p, base, &s) == HM_OK);
  return take(s);
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(hm_version()) == "1.0.0");
  CHECK(std::string(hm_status_name(HM_OK)) == "ok");
  CHECK(std::string(hm_status_name(HM_INFEASIBLE)) == "infeasible");
  hm_free(nullptr);
}

TEST_CASE("counts as decimal strings") {
  char* s = nullptr;
  REQUIRE(hm_reduced(7, 3, &s) == HM_OK);
  CHECK(take(s) == "49");
  REQUIRE(hm_hultman(5, 2, &s) == HM_OK);
  CHECK(take(s) == "0");
  REQUIRE(hm_u(10, &s) == HM_OK);
  CHECK(take(s) == "207083242485963591169089778");
  REQUIRE(hm_stirling_c(41, 1, &s) == HM_OK);
  CHECK(take(s) == "815915283247897734345611269596115894272000000000");
  REQUIRE(hm_binomial(60, 30, &s) == HM_OK);
  CHECK(take(s) == "118264581564861424");

  s = nullptr;
  CHECK(hm_reduced(6, 4, &s) == HM_INVALID_ARGUMENT);
  CHECK(s == nullptr);
  CHECK(std::strlen(hm_last_error()) > 0);
  CHECK(hm_u(1, nullptr) == HM_INVALID_ARGUMENT);
}

TEST_CASE("generating polynomials as JSON") {
  char* s = nullptr;
  REQUIRE(hm_genpoly_hultman(4, &s) == HM_OK);
  CHECK(take(s) == R"(["0","0","5","0","1"])");
  REQUIRE(hm_genpoly_reduced(4, &s) == HM_OK);
  CHECK(take(s) == R"(["0","0","1","0","-1"])");
}

TEST_CASE("tables and b-files") {
  char* s = nullptr;
  REQUIRE(hm_table(HM_TABLE_REDUCED, 4, HM_FORMAT_CSV, &s) == HM_OK);
  CHECK(take(s) == "n,k=1,k=2\n3,1,\n4,0,1\n");
  REQUIRE(hm_table(HM_TABLE_REDUCED, 4, HM_FORMAT_JSON, &s) == HM_OK);
  CHECK(take(s) == R"({"kind":"r","columns":[1,2],"rows":[{"n":3,"cells":["1",null]},{"n":4,"cells":["0","1"]}]})");
  REQUIRE(hm_oeis_bfile(HM_SEQ_U, 2, &s) == HM_OK);
  CHECK(take(s) == "1 2\n2 114\n");
}

TEST_CASE("permutations") {
  Perm p = parse("(0,2,3,1,4)");
  CHECK(hm_perm_size(p.get()) == 5);
  CHECK(hm_perm_image(p.get(), 3) == 1);
  CHECK(hm_perm_cycle_count(p.get()) == 1);
  CHECK(format(p.get()) == "(0 2 3 1 4)");
  CHECK(format(p.get(), 1) == "(1 3 4 2 5)");
  CHECK(format(parse("(1 3 4 2 5)", 0, 1).get()) == "(0 2 3 1 4)");
  CHECK(format(parse("(1 4 2)", 5).get()) == "(0)(1 4 2)(3)");

  const std::uint32_t images[] = {1, 2, 0};
  hm_perm* raw = nullptr;
  REQUIRE(hm_perm_from_images(images, 3, &raw) == HM_OK);
  Perm q(raw);
  CHECK(format(q.get()) == "(0 1 2)");

  const std::uint32_t bad[] = {0, 0, 1};
  raw = nullptr;
  CHECK(hm_perm_from_images(bad, 3, &raw) == HM_INVALID_ARGUMENT);
  CHECK(raw == nullptr);
  CHECK(hm_perm_parse("(0 1", 0, 0, &raw) == HM_INVALID_ARGUMENT);
  CHECK(hm_perm_parse(nullptr, 0, 0, &raw) == HM_INVALID_ARGUMENT);
  CHECK(std::string(hm_last_error()).find("NULL") != std::string::npos);
}

TEST_CASE("hypermaps") {
  Perm sigma = parse("(0 1 2 3 4)");
  Perm alpha = parse("(1 4 2)", 5);
  hm_hypermap* raw = nullptr;
  REQUIRE(hm_hypermap_new(sigma.get(), alpha.get(), &raw) == HM_OK);
  Map h(raw);

  hm_hypermap_info info{};
  REQUIRE(hm_hypermap_info_get(h.get(), &info) == HM_OK);
  CHECK(info.m == 5);
  CHECK(info.genus == 1);
  CHECK(info.k == 3);
  CHECK(info.is_monopole == 1);
  CHECK(info.is_unicellular == 1);
  CHECK(info.is_reduced == 0);

  hm_perm* face = nullptr;
  REQUIRE(hm_hypermap_face(h.get(), &face) == HM_OK);
  CHECK(format(Perm(face).get()) == "(0 2 3 1 4)");

  char* json = nullptr;
  REQUIRE(hm_hypermap_to_json(h.get(), 0, &json) == HM_OK);
  const std::string text = take(json);
  CHECK(nlohmann::json::parse(text)["genus"] == 1);
  raw = nullptr;
  REQUIRE(hm_hypermap_from_json(text.c_str(), 0, &raw) == HM_OK);
  Map back(raw);
  hm_perm* back_alpha = nullptr;
  REQUIRE(hm_hypermap_alpha(back.get(), &back_alpha) == HM_OK);
  CHECK(format(Perm(back_alpha).get()) == "(0)(1 4 2)(3)");

  raw = nullptr;
  REQUIRE(hm_hypermap_reduce(h.get(), &raw) == HM_OK);
  Map reduced(raw);
  REQUIRE(hm_hypermap_info_get(reduced.get(), &info) == HM_OK);
  CHECK(info.m == 3);
  CHECK(info.is_reduced == 1);
  CHECK(info.genus == 1);

  raw = nullptr;
  REQUIRE(hm_hypermap_insert_bud(reduced.get(), 0, &raw) == HM_OK);
  Map grown(raw);
  raw = nullptr;
  REQUIRE(hm_hypermap_remove_bud(grown.get(), 1, &raw) == HM_OK);
  Map shrunk(raw);
  REQUIRE(hm_hypermap_info_get(shrunk.get(), &info) == HM_OK);
  CHECK(info.m == 3);
  raw = nullptr;
  CHECK(hm_hypermap_remove_bud(reduced.get(), 0, &raw) == HM_INVALID_ARGUMENT);

  Perm id2 = parse("(0)(1)");
  raw = nullptr;
  CHECK(hm_hypermap_new(id2.get(), id2.get(), &raw) == HM_NOT_HYPERMAP);
  CHECK(raw == nullptr);

  Perm face_pi = parse("(0 2 3 1 4)");
  raw = nullptr;
  REQUIRE(hm_hypermap_from_face(nullptr, face_pi.get(), &raw) == HM_OK);
  Map from_face(raw);
  hm_perm* a = nullptr;
  REQUIRE(hm_hypermap_alpha(from_face.get(), &a) == HM_OK);
  CHECK(format(Perm(a).get()) == "(0)(1 4 2)(3)");
  Perm not_circular = parse("(0 1)(2 3 4)");
  raw = nullptr;
  CHECK(hm_hypermap_from_face(nullptr, not_circular.get(), &raw) == HM_NOT_CIRCULAR);
}

TEST_CASE("scans") {
  hm_scan_options options;
  hm_scan_options_init(&options);
  CHECK(options.threads == 0);
  options.threads = 2;
  char* json = nullptr;
  REQUIRE(hm_scan_count_reduced(7, &options, &json) == HM_OK);
  const auto parsed = nlohmann::json::parse(take(json));
  CHECK(parsed["m"] == 7);
  CHECK(parsed["counts"]["1"] == "180");
  CHECK(parsed["counts"]["3"] == "49");
  CHECK(parsed["total"] == "229");

  REQUIRE(hm_scan_count_by_cycles(4, nullptr, &json) == HM_OK);
  CHECK(nlohmann::json::parse(take(json))["counts"]["2"] == "5");

  json = nullptr;
  CHECK(hm_scan_count_by_cycles(13, &options, &json) == HM_INFEASIBLE);
  CHECK(std::string(hm_last_error()).find("--force") != std::string::npos);
  options.max_points = 4;
  CHECK(hm_scan_count_by_cycles(5, &options, &json) == HM_INFEASIBLE);
  options.force = 1;
  REQUIRE(hm_scan_count_by_cycles(5, &options, &json) == HM_OK);
  hm_free(json);

  int agree = 0;
  REQUIRE(hm_distribution_check(8, nullptr, &agree, nullptr) == HM_OK);
  CHECK(agree == 1);
  int passed = 0;
  char* report = nullptr;
  REQUIRE(hm_verify(4, nullptr, HM_FORMAT_TEXT, &passed, &report) == HM_OK);
  CHECK(passed == 1);
  CHECK(take(report).find("all checks passed") != std::string::npos);
  REQUIRE(hm_verify(3, nullptr, HM_FORMAT_JSON, &passed, &report) == HM_OK);
  const auto verified = nlohmann::json::parse(take(report));
  CHECK(verified["passed"] == true);
  CHECK(verified["checks"].size() == 7);
}

TEST_CASE("enumerators") {
  for (unsigned threads : {1u, 2u}) {
    hm_scan_options options;
    hm_scan_options_init(&options);
    options.threads = threads;
    hm_enumerator* raw = nullptr;
    REQUIRE(hm_enumerate_genus(2, &options, &raw) == HM_OK);
    Enumerator it(raw);
    std::size_t count = 0;
    for (;;) {
      hm_hypermap* h = nullptr;
      REQUIRE(hm_enumerator_next(it.get(), &h) == HM_OK);
      if (h == nullptr) break;
      Map owned(h);
      hm_hypermap_info info{};
      REQUIRE(hm_hypermap_info_get(owned.get(), &info) == HM_OK);
      CHECK(info.genus == 2);
      CHECK(info.is_reduced == 1);
      ++count;
    }
    CHECK(count == 114);
  }

  hm_enumerator* raw = nullptr;
  REQUIRE(hm_enumerate_reduced(3, 1, nullptr, &raw) == HM_OK);
  Enumerator it(raw);
  hm_hypermap* h = nullptr;
  REQUIRE(hm_enumerator_next(it.get(), &h) == HM_OK);
  Map only(h);
  hm_perm* alpha = nullptr;
  REQUIRE(hm_hypermap_alpha(only.get(), &alpha) == HM_OK);
  CHECK(format(Perm(alpha).get()) == "(0 2 1)");
  h = reinterpret_cast<hm_hypermap*>(&raw);
  REQUIRE(hm_enumerator_next(it.get(), &h) == HM_OK);
  CHECK(h == nullptr);

  raw = nullptr;
  CHECK(hm_enumerate_genus(5, nullptr, &raw) == HM_INFEASIBLE);
}

TEST_CASE("models") {
  Perm pi = parse("(0 4 1 6 2 5 7 3)");
  hm_perm* alpha = nullptr;
  REQUIRE(hm_cycle_graph_alpha(pi.get(), &alpha) == HM_OK);
  CHECK(format(Perm(alpha).get()) == "(0 4 1 5 3)(2 7 6)");

  char* s = nullptr;
  REQUIRE(hm_cycle_graph_json(pi.get(), 0, &s) == HM_OK);
  CHECK(nlohmann::json::parse(take(s))["alternating_cycles"].size() == 2);
  REQUIRE(hm_cycle_graph_dot(pi.get(), 0, &s) == HM_OK);
  CHECK(take(s).rfind("digraph", 0) == 0);

  Perm five = parse("(0 2 3 1 4)");
  REQUIRE(hm_breakpoints(five.get(), 0, &s) == HM_OK);
  CHECK(take(s) == "[0,1,3]");

  hm_gluing* raw = nullptr;
  REQUIRE(hm_gluing_from_pi(five.get(), &raw) == HM_OK);
  Gluing g(raw);
  CHECK(hm_gluing_size(g.get()) == 5);
  CHECK(hm_gluing_vertex_count(g.get()) == 4);
  CHECK(hm_gluing_genus(g.get()) == 1);
  hm_perm* back = nullptr;
  REQUIRE(hm_gluing_pi(g.get(), &back) == HM_OK);
  CHECK(format(Perm(back).get()) == "(0 2 3 1 4)");
  REQUIRE(hm_gluing_svg(g.get(), 0, &s) == HM_OK);
  CHECK(take(s).find("</svg>") != std::string::npos);
  REQUIRE(hm_gluing_json(g.get(), 0, &s) == HM_OK);
  CHECK(nlohmann::json::parse(take(s))["genus"] == 1);

  const std::uint32_t swapped[] = {1, 0, 3, 2};
  raw = nullptr;
  REQUIRE(hm_gluing_from_pairing(swapped, 4, &raw) == HM_OK);
  Gluing bad(raw);
  back = nullptr;
  CHECK(hm_gluing_pi(bad.get(), &back) == HM_NOT_CIRCULAR);
  CHECK(back == nullptr);
  const std::uint32_t repeated[] = {0, 0};
  raw = nullptr;
  CHECK(hm_gluing_from_pairing(repeated, 2, &raw) == HM_INVALID_ARGUMENT);
}

TEST_CASE("last error is per thread") {
  char* s = nullptr;
  CHECK(hm_reduced(6, 4, &s) == HM_INVALID_ARGUMENT);
  const std::string main_error = hm_last_error();
  std::string other;
  std::thread([&] {
    char* t = nullptr;
    REQUIRE(hm_u(1, &t) == HM_OK);
    hm_free(t);
    other = hm_last_error();
  }).join();
  CHECK(other.empty());
  CHECK(std::string(hm_last_error()) == main_error);
}
