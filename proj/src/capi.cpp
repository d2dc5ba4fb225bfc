#include "hypermono/hypermono.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "hypermono/bruteforce.hpp"
#include "hypermono/error.hpp"
#include "hypermono/exactcount.hpp"
#include "hypermono/hypermap.hpp"
#include "hypermono/models.hpp"
#include "hypermono/reports.hpp"

using namespace hypermono;

struct hm_perm {
  Permutation value;
};

struct hm_hypermap {
  Hypermap value;
};

struct hm_gluing {
  GluingDiagram value;
};

struct hm_enumerator {
  // Lazy for serial scans; materialized in stream order for parallel ones.
  std::variant<ReducedStream, std::vector<Hypermap>> source;
  std::size_t position = 0;
};

namespace {

thread_local std::string last_error;

hm_status set_error(hm_status status, const std::string& message) {
  last_error = message;
  return status;
}

hm_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return HM_INVALID_ARGUMENT;
    case ErrorCode::kNotHypermap: return HM_NOT_HYPERMAP;
    case ErrorCode::kNotCircular: return HM_NOT_CIRCULAR;
    case ErrorCode::kInfeasible: return HM_INFEASIBLE;
    case ErrorCode::kInternal: return HM_INTERNAL;
    case ErrorCode::kIo: return HM_IO;
  }
  return HM_INTERNAL;
}

template <typename Body>
hm_status guarded(Body body) {
  try {
    body();
    last_error.clear();
    return HM_OK;
  } catch (const Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(HM_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(HM_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* ptr, const char* what) {
  if (ptr == nullptr) fail(ErrorCode::kInvalidArgument, std::string(what) + " must not be NULL");
}

ScanOptions scan_options(const hm_scan_options* options) {
  ScanOptions out;
  if (options != nullptr) {
    out.threads = options->threads;
    out.max_points = options->max_points;
    out.force = options->force != 0;
  }
  return out;
}

std::string poly_json(const IntPolynomial& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const BigInt& c : p.coefficients()) j.push_back(to_decimal(c));
  return j.dump();
}

std::string counts_json(std::size_t m, const CountByK& counts) {
  nlohmann::ordered_json j;
  j["m"] = m;
  nlohmann::ordered_json by_k = nlohmann::ordered_json::object();
  for (const auto& [k, n] : counts.counts) by_k[std::to_string(k)] = to_decimal(n);
  j["counts"] = std::move(by_k);
  j["total"] = to_decimal(counts.total);
  return j.dump();
}

template <typename Compute>
hm_status count_out(char** out, Compute compute) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(to_decimal(compute()));
  });
}

hm_status perm_out(hm_perm** out, const Permutation& p) {
  return guarded([&] {
    require(out, "out");
    *out = new hm_perm{p};
  });
}

}  // namespace

extern "C" {

const char* hm_version(void) { return "1.0.0"; }

const char* hm_status_name(hm_status status) {
  switch (status) {
    case HM_OK: return "ok";
    case HM_INVALID_ARGUMENT: return "invalid argument";
    case HM_NOT_HYPERMAP: return "not a hypermap";
    case HM_NOT_CIRCULAR: return "not circular";
    case HM_INFEASIBLE: return "infeasible";
    case HM_INTERNAL: return "internal error";
    case HM_IO: return "i/o error";
  }
  return "unknown";
}

const char* hm_last_error(void) { return last_error.c_str(); }

void hm_free(void* ptr) { std::free(ptr); }

hm_status hm_binomial(long n, long k, char** out) {
  return count_out(out, [&] { return binomial(n, k); });
}

hm_status hm_stirling_c(long n, long k, char** out) {
  return count_out(out, [&] { return stirling_c(n, k); });
}

hm_status hm_hultman(long n, long k, char** out) {
  return count_out(out, [&] { return hultman_H(n, k); });
}

hm_status hm_reduced(long n, long k, char** out) {
  return count_out(out, [&] { return reduced_r(n, k); });
}

hm_status hm_u(long g, char** out) {
  return count_out(out, [&] { return u_of_g(g); });
}

hm_status hm_genpoly_hultman(long n, char** out_json) {
  return guarded([&] {
    require(out_json, "out_json");
    *out_json = copy_string(poly_json(genpoly_H(n)));
  });
}

hm_status hm_genpoly_reduced(long n, char** out_json) {
  return guarded([&] {
    require(out_json, "out_json");
    *out_json = copy_string(poly_json(genpoly_r(n)));
  });
}

hm_status hm_table(hm_table_kind kind, long max_n, hm_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    const TableKind k = kind == HM_TABLE_REDUCED ? TableKind::kReduced : TableKind::kHultman;
    const TableFormat f = format == HM_FORMAT_CSV    ? TableFormat::kCsv
                          : format == HM_FORMAT_JSON ? TableFormat::kJson
                                                     : TableFormat::kText;
    *out = copy_string(format_table(make_table(k, max_n), f));
  });
}

hm_status hm_oeis_bfile(hm_sequence_kind kind, long count, char** out) {
  return guarded([&] {
    require(out, "out");
    SequenceKind k = SequenceKind::kU;
    if (kind == HM_SEQ_HULTMAN_FLAT) k = SequenceKind::kHultmanFlat;
    if (kind == HM_SEQ_REDUCED_FLAT) k = SequenceKind::kReducedFlat;
    *out = copy_string(oeis_bfile(k, count));
  });
}

hm_status hm_perm_parse(const char* text, size_t m, unsigned base, hm_perm** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    std::optional<std::size_t> size;
    if (m != 0) size = m;
    *out = new hm_perm{parse_cycles(text, size, base)};
  });
}

hm_status hm_perm_from_images(const uint32_t* images, size_t m, hm_perm** out) {
  return guarded([&] {
    require(images, "images");
    require(out, "out");
    *out = new hm_perm{Permutation(std::vector<Point>(images, images + m))};
  });
}

void hm_perm_free(hm_perm* perm) { delete perm; }

size_t hm_perm_size(const hm_perm* perm) { return perm ? perm->value.size() : 0; }

uint32_t hm_perm_image(const hm_perm* perm, uint32_t x) {
  return perm && x < perm->value.size() ? perm->value(x) : x;
}

size_t hm_perm_cycle_count(const hm_perm* perm) { return perm ? perm->value.cycle_count() : 0; }

hm_status hm_perm_format(const hm_perm* perm, unsigned base, char** out) {
  return guarded([&] {
    require(perm, "perm");
    require(out, "out");
    *out = copy_string(format_cycles(perm->value, base));
  });
}

hm_status hm_hypermap_new(const hm_perm* sigma, const hm_perm* alpha, hm_hypermap** out) {
  return guarded([&] {
    require(sigma, "sigma");
    require(alpha, "alpha");
    require(out, "out");
    *out = new hm_hypermap{Hypermap(sigma->value, alpha->value)};
  });
}

hm_status hm_hypermap_from_face(const hm_perm* sigma, const hm_perm* face, hm_hypermap** out) {
  return guarded([&] {
    require(face, "face");
    require(out, "out");
    *out = new hm_hypermap{sigma ? Hypermap::from_vertex_and_face(sigma->value, face->value)
                                 : Hypermap::from_face(face->value)};
  });
}

hm_status hm_hypermap_from_json(const char* json, unsigned base, hm_hypermap** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new hm_hypermap{hypermap_from_json(json, base)};
  });
}

void hm_hypermap_free(hm_hypermap* map) { delete map; }

hm_status hm_hypermap_info_get(const hm_hypermap* map, hm_hypermap_info* out) {
  return guarded([&] {
    require(map, "map");
    require(out, "out");
    const HypermapClass& c = map->value.classify();
    *out = hm_hypermap_info{map->value.size(), c.genus, c.k, c.is_monopole, c.is_unicellular, c.is_reduced};
  });
}

hm_status hm_hypermap_sigma(const hm_hypermap* map, hm_perm** out) {
  if (map == nullptr) return set_error(HM_INVALID_ARGUMENT, "map must not be NULL");
  return perm_out(out, map->value.sigma());
}

hm_status hm_hypermap_alpha(const hm_hypermap* map, hm_perm** out) {
  if (map == nullptr) return set_error(HM_INVALID_ARGUMENT, "map must not be NULL");
  return perm_out(out, map->value.alpha());
}

hm_status hm_hypermap_face(const hm_hypermap* map, hm_perm** out) {
  if (map == nullptr) return set_error(HM_INVALID_ARGUMENT, "map must not be NULL");
  return perm_out(out, map->value.face());
}

hm_status hm_hypermap_to_json(const hm_hypermap* map, unsigned base, char** out) {
  return guarded([&] {
    require(map, "map");
    require(out, "out");
    *out = copy_string(to_json(map->value, base));
  });
}

hm_status hm_hypermap_remove_bud(const hm_hypermap* map, uint32_t bud, hm_hypermap** out) {
  return guarded([&] {
    require(map, "map");
    require(out, "out");
    *out = new hm_hypermap{remove_bud(map->value, bud)};
  });
}

hm_status hm_hypermap_insert_bud(const hm_hypermap* map, uint32_t after, hm_hypermap** out) {
  return guarded([&] {
    require(map, "map");
    require(out, "out");
    *out = new hm_hypermap{insert_bud(map->value, after)};
  });
}

hm_status hm_hypermap_reduce(const hm_hypermap* map, hm_hypermap** out) {
  return guarded([&] {
    require(map, "map");
    require(out, "out");
    *out = new hm_hypermap{reduce(map->value)};
  });
}

void hm_scan_options_init(hm_scan_options* options) {
  if (options == nullptr) return;
  options->threads = 0;
  options->max_points = kDefaultMaxPoints;
  options->force = 0;
}

hm_status hm_scan_count_by_cycles(size_t m, const hm_scan_options* options, char** out_json) {
  return guarded([&] {
    require(out_json, "out_json");
    *out_json = copy_string(counts_json(m, count_by_cycles(m, scan_options(options))));
  });
}

hm_status hm_scan_count_reduced(size_t m, const hm_scan_options* options, char** out_json) {
  return guarded([&] {
    require(out_json, "out_json");
    *out_json = copy_string(counts_json(m, count_reduced(m, scan_options(options))));
  });
}

hm_status hm_enumerate_reduced(size_t m, size_t k, const hm_scan_options* options, hm_enumerator** out) {
  return guarded([&] {
    require(out, "out");
    const ScanOptions opts = scan_options(options);
    if (resolve_threads(opts.threads) == 1) {
      *out = new hm_enumerator{enumerate_reduced(m, k, opts)};
    } else {
      *out = new hm_enumerator{collect_reduced(m, k, opts)};
    }
  });
}

hm_status hm_enumerate_genus(size_t g, const hm_scan_options* options, hm_enumerator** out) {
  return guarded([&] {
    require(out, "out");
    const ScanOptions opts = scan_options(options);
    if (resolve_threads(opts.threads) == 1) {
      *out = new hm_enumerator{enumerate_by_genus(g, opts)};
    } else {
      *out = new hm_enumerator{collect_by_genus(g, opts)};
    }
  });
}

hm_status hm_enumerator_next(hm_enumerator* it, hm_hypermap** out) {
  return guarded([&] {
    require(it, "it");
    require(out, "out");
    *out = nullptr;
    if (auto* stream = std::get_if<ReducedStream>(&it->source)) {
      if (auto h = stream->next()) *out = new hm_hypermap{std::move(*h)};
    } else {
      auto& items = std::get<std::vector<Hypermap>>(it->source);
      if (it->position < items.size()) *out = new hm_hypermap{items[it->position++]};
    }
  });
}

void hm_enumerator_free(hm_enumerator* it) { delete it; }

hm_status hm_distribution_check(size_t m, const hm_scan_options* options, int* agree, char** out_json) {
  return guarded([&] {
    const DistributionReport report = distribution_check(m, scan_options(options));
    if (agree != nullptr) *agree = report.ok() ? 1 : 0;
    if (out_json != nullptr) {
      nlohmann::ordered_json j;
      j["m"] = m;
      j["agree"] = report.ok();
      auto mismatches = nlohmann::ordered_json::array();
      for (const Mismatch& mm : report.mismatches) {
        mismatches.push_back({{"quantity", mm.quantity},
                              {"k", mm.k},
                              {"oracle", to_decimal(mm.oracle)},
                              {"formula", to_decimal(mm.formula)}});
      }
      j["mismatches"] = std::move(mismatches);
      *out_json = copy_string(j.dump());
    }
  });
}

hm_status hm_verify(size_t max_m, const hm_scan_options* options, hm_format format, int* passed, char** out) {
  return guarded([&] {
    const VerifyReport report = verify_all(max_m, scan_options(options));
    if (passed != nullptr) *passed = report.ok() ? 1 : 0;
    if (out != nullptr) *out = copy_string(format == HM_FORMAT_JSON ? report.to_json() : report.to_text());
  });
}

hm_status hm_cycle_graph_json(const hm_perm* pi, unsigned base, char** out) {
  return guarded([&] {
    require(pi, "pi");
    require(out, "out");
    *out = copy_string(cycle_graph_json(build_cycle_graph(pi->value), base));
  });
}

hm_status hm_cycle_graph_dot(const hm_perm* pi, unsigned base, char** out) {
  return guarded([&] {
    require(pi, "pi");
    require(out, "out");
    *out = copy_string(render_dot(build_cycle_graph(pi->value), base));
  });
}

hm_status hm_cycle_graph_alpha(const hm_perm* pi, hm_perm** out) {
  return guarded([&] {
    require(pi, "pi");
    require(out, "out");
    *out = new hm_perm{alternating_to_alpha(build_cycle_graph(pi->value))};
  });
}

hm_status hm_breakpoints(const hm_perm* pi, unsigned base, char** out_json) {
  return guarded([&] {
    require(pi, "pi");
    require(out_json, "out_json");
    nlohmann::json j = nlohmann::json::array();
    for (Point p : breakpoints(pi->value)) j.push_back(p + base);
    *out_json = copy_string(j.dump());
  });
}

hm_status hm_gluing_from_pi(const hm_perm* pi, hm_gluing** out) {
  return guarded([&] {
    require(pi, "pi");
    require(out, "out");
    *out = new hm_gluing{gluing_from_pi(pi->value)};
  });
}

hm_status hm_gluing_from_pairing(const uint32_t* pairing, size_t m, hm_gluing** out) {
  return guarded([&] {
    require(pairing, "pairing");
    require(out, "out");
    *out = new hm_gluing{GluingDiagram(std::vector<Point>(pairing, pairing + m))};
  });
}

void hm_gluing_free(hm_gluing* gluing) { delete gluing; }

size_t hm_gluing_size(const hm_gluing* gluing) { return gluing ? gluing->value.size() : 0; }

size_t hm_gluing_vertex_count(const hm_gluing* gluing) {
  return gluing ? gluing->value.vertex_class_count() : 0;
}

size_t hm_gluing_genus(const hm_gluing* gluing) { return gluing ? gluing->value.genus() : 0; }

hm_status hm_gluing_pi(const hm_gluing* gluing, hm_perm** out) {
  return guarded([&] {
    require(gluing, "gluing");
    require(out, "out");
    *out = new hm_perm{pi_from_gluing(gluing->value)};
  });
}

hm_status hm_gluing_json(const hm_gluing* gluing, unsigned base, char** out) {
  return guarded([&] {
    require(gluing, "gluing");
    require(out, "out");
    *out = copy_string(hypermono::gluing_json(gluing->value, base));
  });
}

hm_status hm_gluing_svg(const hm_gluing* gluing, unsigned base, char** out) {
  return guarded([&] {
    require(gluing, "gluing");
    require(out, "out");
    *out = copy_string(render_svg(gluing->value, base));
  });
}

}  // extern "C"
