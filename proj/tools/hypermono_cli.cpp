// Command-line front end. Everything goes through the C interface in
// hypermono/hypermono.h.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypermono/hypermono.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;
constexpr int kExitIo = 4;

struct FreeString {
  void operator()(char* p) const { hm_free(p); }
};
struct FreePerm {
  void operator()(hm_perm* p) const { hm_perm_free(p); }
};
struct FreeMap {
  void operator()(hm_hypermap* p) const { hm_hypermap_free(p); }
};
struct FreeGluing {
  void operator()(hm_gluing* p) const { hm_gluing_free(p); }
};
struct FreeEnumerator {
  void operator()(hm_enumerator* p) const { hm_enumerator_free(p); }
};

using PermPtr = std::unique_ptr<hm_perm, FreePerm>;
using MapPtr = std::unique_ptr<hm_hypermap, FreeMap>;
using GluingPtr = std::unique_ptr<hm_gluing, FreeGluing>;
using EnumeratorPtr = std::unique_ptr<hm_enumerator, FreeEnumerator>;

// Library failure carrying the exit code the CLI should report.
struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(hm_status status) {
  switch (status) {
    case HM_INFEASIBLE: return kExitRefused;
    case HM_IO: return kExitIo;
    case HM_INTERNAL: return kExitMismatch;
    default: return kExitUsage;
  }
}

void check(hm_status status) {
  if (status != HM_OK) {
    throw Failure{exit_code_for(status), std::string(hm_status_name(status)) + ": " + hm_last_error()};
  }
}

std::string take(char* raw) {
  std::unique_ptr<char, FreeString> owned(raw);
  return owned ? std::string(owned.get()) : std::string();
}

struct Globals {
  unsigned base = 0;
  unsigned threads = 0;
  std::optional<std::size_t> max_m;
  bool force = false;
  bool json = false;
  bool csv = false;

  hm_scan_options scan() const {
    hm_scan_options options;
    hm_scan_options_init(&options);
    options.threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    if (max_m) {
      options.max_points = *max_m;
    } else if (const char* env = std::getenv("HYPERMONO_MAX_M")) {
      try {
        options.max_points = std::stoul(env);
      } catch (const std::exception&) {
        throw Failure{kExitUsage, std::string("HYPERMONO_MAX_M is not a number: ") + env};
      }
    }
    options.force = force ? 1 : 0;
    return options;
  }
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit_json_record(const std::string& query, const nlohmann::ordered_json& parameters,
                      const nlohmann::ordered_json& value, const std::string& provenance) {
  nlohmann::ordered_json j;
  j["query"] = query;
  j["parameters"] = parameters;
  j["value"] = value;
  j["provenance"] = provenance;
  std::cout << j.dump() << "\n";
}

// One OutputRecord in the requested format.
void emit_record(const Globals& g, const std::string& query, const nlohmann::ordered_json& parameters,
                 const std::string& value, const std::string& provenance) {
  if (g.json) {
    emit_json_record(query, parameters, value, provenance);
  } else if (g.csv) {
    std::string params;
    for (const auto& [key, v] : parameters.items()) {
      if (!params.empty()) params += ';';
      params += key + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    std::cout << "query,parameters,value,provenance\n"
              << csv_field(query) << "," << csv_field(params) << "," << value << "," << provenance << "\n";
  } else {
    std::cout << value << "\n";
  }
}

std::string scan_entry(const std::string& counts_json, long k) {
  auto j = nlohmann::json::parse(counts_json);
  const auto& counts = j.at("counts");
  auto it = counts.find(std::to_string(k));
  return it == counts.end() ? "0" : it->get<std::string>();
}

int cmd_count(const Globals& g, const std::string& kind, const std::vector<long>& args, bool verify) {
  nlohmann::ordered_json params;
  params["kind"] = kind;
  char* raw = nullptr;
  long n = 0, k = 0;
  if (kind == "H" || kind == "r") {
    if (args.size() != 2) throw Failure{kExitUsage, "count " + kind + " takes two arguments: n k"};
    n = args[0];
    k = args[1];
    params["n"] = n;
    params["k"] = k;
    check(kind == "H" ? hm_hultman(n, k, &raw) : hm_reduced(n, k, &raw));
  } else if (kind == "u") {
    if (args.size() != 1) throw Failure{kExitUsage, "count u takes one argument: g"};
    n = args[0];
    params["g"] = n;
    check(hm_u(n, &raw));
  } else {
    throw Failure{kExitUsage, "unknown count kind '" + kind + "' (expected H, r or u)"};
  }
  const std::string value = take(raw);
  if (!verify) {
    emit_record(g, "count", params, value, "formula");
    return kExitOk;
  }

  const hm_scan_options options = g.scan();
  std::string oracle;
  if (kind == "u") {
    EnumeratorPtr it;
    hm_enumerator* raw_it = nullptr;
    check(hm_enumerate_genus(static_cast<std::size_t>(n), &options, &raw_it));
    it.reset(raw_it);
    unsigned long long count = 0;
    for (;;) {
      hm_hypermap* map = nullptr;
      check(hm_enumerator_next(it.get(), &map));
      if (map == nullptr) break;
      hm_hypermap_free(map);
      ++count;
    }
    oracle = std::to_string(count);
  } else {
    char* counts = nullptr;
    const auto m = static_cast<std::size_t>(n);
    check(kind == "H" ? hm_scan_count_by_cycles(m, &options, &counts) : hm_scan_count_reduced(m, &options, &counts));
    oracle = scan_entry(take(counts), k);
  }
  if (oracle != value) {
    emit_record(g, "count", params, value, "formula");
    std::cerr << "verification mismatch: formula " << value << ", brute force " << oracle << "\n";
    return kExitMismatch;
  }
  emit_record(g, "count", params, value, "both-agree");
  return kExitOk;
}

int cmd_table(const Globals& g, const std::string& kind, long max_n) {
  if (kind != "H" && kind != "r") throw Failure{kExitUsage, "unknown table kind '" + kind + "' (expected H or r)"};
  const hm_format format = g.json ? HM_FORMAT_JSON : g.csv ? HM_FORMAT_CSV : HM_FORMAT_TEXT;
  char* raw = nullptr;
  check(hm_table(kind == "H" ? HM_TABLE_HULTMAN : HM_TABLE_REDUCED, max_n, format, &raw));
  if (g.json) {
    emit_json_record("table", {{"kind", kind}, {"max_n", max_n}}, nlohmann::ordered_json::parse(take(raw)), "formula");
  } else {
    std::cout << take(raw);
  }
  return kExitOk;
}

std::string describe(const Globals& g, hm_hypermap* map, bool as_json) {
  char* raw = nullptr;
  check(hm_hypermap_to_json(map, g.base, &raw));
  std::string json = take(raw);
  if (as_json) return json;
  auto j = nlohmann::json::parse(json);
  std::ostringstream out;
  out << "m=" << j["m"].get<std::size_t>() << " alpha=" << j["alpha"].get<std::string>()
      << " face=" << j["face"].get<std::string>() << " genus=" << j["genus"].get<std::size_t>()
      << " k=" << j["k"].get<std::size_t>();
  return out.str();
}

int cmd_enumerate(const Globals& g, const std::string& mode, const std::vector<long>& args,
                  const std::string& format) {
  const bool as_json = format == "json" || g.json;
  if (format != "json" && format != "text") throw Failure{kExitUsage, "--format must be json or text"};
  const hm_scan_options options = g.scan();
  hm_enumerator* raw_it = nullptr;
  std::string formula;
  nlohmann::ordered_json params{{"mode", mode}};
  if (mode == "nk") {
    if (args.size() != 2 || args[0] < 1 || args[1] < 1) {
      throw Failure{kExitUsage, "enumerate nk takes two positive arguments: m k"};
    }
    const long m = args[0], k = args[1];
    params["m"] = m;
    params["k"] = k;
    check(hm_enumerate_reduced(static_cast<std::size_t>(m), static_cast<std::size_t>(k), &options, &raw_it));
    if (m >= 2 && 2 * k <= m) {
      char* raw = nullptr;
      check(hm_reduced(m, k, &raw));
      formula = take(raw);
    } else {
      // reduced maps have at most m/2 hyperedges
      formula = "0";
    }
  } else if (mode == "genus") {
    if (args.size() != 1 || args[0] < 0) throw Failure{kExitUsage, "enumerate genus takes one argument: g >= 0"};
    params["g"] = args[0];
    check(hm_enumerate_genus(static_cast<std::size_t>(args[0]), &options, &raw_it));
    char* raw = nullptr;
    check(hm_u(args[0], &raw));
    formula = take(raw);
  } else {
    throw Failure{kExitUsage, "unknown enumerate mode '" + mode + "' (expected nk or genus)"};
  }
  EnumeratorPtr it(raw_it);
  unsigned long long count = 0;
  for (;;) {
    hm_hypermap* raw_map = nullptr;
    check(hm_enumerator_next(it.get(), &raw_map));
    if (raw_map == nullptr) break;
    MapPtr map(raw_map);
    std::cout << describe(g, map.get(), as_json) << "\n";
    ++count;
  }
  const bool agree = std::to_string(count) == formula;
  if (g.json) {
    emit_json_record("enumerate", params, {{"count", std::to_string(count)}, {"formula", formula}, {"agree", agree}},
                     agree ? "both-agree" : "bruteforce");
  } else {
    std::cout << "count=" << count << " formula=" << formula << (agree ? " OK" : " MISMATCH") << "\n";
  }
  return agree ? kExitOk : kExitMismatch;
}

int cmd_verify(const Globals& g, std::size_t max_m) {
  const hm_scan_options options = g.scan();
  int passed = 0;
  char* raw = nullptr;
  check(hm_verify(max_m, &options, g.json ? HM_FORMAT_JSON : HM_FORMAT_TEXT, &passed, &raw));
  if (g.json) {
    emit_json_record("verify", {{"max_m", max_m}}, nlohmann::ordered_json::parse(take(raw)),
                     passed ? "both-agree" : "bruteforce");
  } else {
    std::cout << take(raw);
  }
  return passed ? kExitOk : kExitMismatch;
}

PermPtr parse_perm(const std::string& text, std::size_t m, unsigned base) {
  hm_perm* raw = nullptr;
  check(hm_perm_parse(text.c_str(), m, base, &raw));
  return PermPtr(raw);
}

std::vector<uint32_t> parse_pairing(const std::string& text, unsigned base) {
  std::vector<uint32_t> out;
  std::string token;
  std::istringstream in(text);
  for (char c; in.get(c);) {
    if (c == ',' || c == ' ' || c == '\t' || c == '[' || c == ']') continue;
    in.putback(c);
    long v = -1;
    if (!(in >> v) || v < static_cast<long>(base)) throw Failure{kExitUsage, "bad gluing pairing: " + text};
    out.push_back(static_cast<uint32_t>(v - base));
  }
  if (out.empty()) throw Failure{kExitUsage, "empty gluing pairing"};
  return out;
}

struct ConvertSource {
  std::string pi;
  std::string alpha;
  std::string gluing;
  std::string hypermap;
  std::size_t m = 0;

  std::string kind() const {
    return !pi.empty() ? "pi" : !alpha.empty() ? "alpha" : !gluing.empty() ? "gluing" : "hypermap";
  }
  const std::string& text() const {
    return !pi.empty() ? pi : !alpha.empty() ? alpha : !gluing.empty() ? gluing : hypermap;
  }
};

// Resolves any accepted input to the face pi (sigma fixed to (0 ... m-1)).
PermPtr face_from_source(const Globals& g, const ConvertSource& src) {
  const int given = !src.pi.empty() + !src.alpha.empty() + !src.gluing.empty() + !src.hypermap.empty();
  if (given != 1) throw Failure{kExitUsage, "give exactly one of --pi, --alpha, --gluing, --hypermap"};
  if (!src.pi.empty()) return parse_perm(src.pi, src.m, g.base);
  if (!src.gluing.empty()) {
    std::vector<uint32_t> pairing = parse_pairing(src.gluing, g.base);
    hm_gluing* raw = nullptr;
    check(hm_gluing_from_pairing(pairing.data(), pairing.size(), &raw));
    GluingPtr gluing(raw);
    hm_perm* pi = nullptr;
    check(hm_gluing_pi(gluing.get(), &pi));
    return PermPtr(pi);
  }
  MapPtr map;
  if (!src.alpha.empty()) {
    PermPtr alpha = parse_perm(src.alpha, src.m, g.base);
    std::vector<uint32_t> rotation(hm_perm_size(alpha.get()));
    for (std::size_t x = 0; x < rotation.size(); ++x) rotation[x] = static_cast<uint32_t>((x + 1) % rotation.size());
    hm_perm* raw_sigma = nullptr;
    check(hm_perm_from_images(rotation.data(), rotation.size(), &raw_sigma));
    PermPtr sigma(raw_sigma);
    hm_hypermap* raw_map = nullptr;
    check(hm_hypermap_new(sigma.get(), alpha.get(), &raw_map));
    map.reset(raw_map);
  } else {
    hm_hypermap* raw_map = nullptr;
    check(hm_hypermap_from_json(src.hypermap.c_str(), g.base, &raw_map));
    map.reset(raw_map);
  }
  hm_hypermap_info info{};
  check(hm_hypermap_info_get(map.get(), &info));
  if (!info.is_monopole || !info.is_unicellular) {
    throw Failure{kExitUsage, "input is not a unicellular hypermonopole"};
  }
  hm_perm* face = nullptr;
  check(hm_hypermap_face(map.get(), &face));
  return PermPtr(face);
}

std::string format_perm(const Globals& g, const hm_perm* p) {
  char* raw = nullptr;
  check(hm_perm_format(p, g.base, &raw));
  return take(raw);
}

std::string cycle_graph_text(const Globals& g, const hm_perm* pi) {
  char* raw = nullptr;
  check(hm_cycle_graph_json(pi, g.base, &raw));
  auto j = nlohmann::json::parse(take(raw));
  std::ostringstream out;
  for (const auto& cycle : j["alternating_cycles"]) {
    const std::size_t len = cycle.size();
    for (std::size_t i = 0; i < len; ++i) {
      out << cycle[i].get<std::string>() << (i % 2 == 0 ? " -sigma-> " : " -pi^-1-> ");
    }
    out << cycle[0].get<std::string>() << "\n";
  }
  return out.str();
}

int cmd_convert(const Globals& g, const ConvertSource& src, const std::string& target) {
  PermPtr pi = face_from_source(g, src);
  if (hm_perm_cycle_count(pi.get()) != 1) {
    throw Failure{kExitUsage, "not circular: pi must be a single cycle on all m points"};
  }
  hm_hypermap* raw_map = nullptr;
  check(hm_hypermap_from_face(nullptr, pi.get(), &raw_map));
  MapPtr map(raw_map);
  nlohmann::ordered_json value;
  std::string text;
  if (target == "pi") {
    text = format_perm(g, pi.get()) + "\n";
    value = format_perm(g, pi.get());
  } else if (target == "alpha") {
    hm_perm* raw = nullptr;
    check(hm_hypermap_alpha(map.get(), &raw));
    PermPtr alpha(raw);
    value = format_perm(g, alpha.get());
    text = value.get<std::string>() + "\n";
  } else if (target == "hypermap") {
    char* raw = nullptr;
    check(hm_hypermap_to_json(map.get(), g.base, &raw));
    text = take(raw);
    value = nlohmann::ordered_json::parse(text);
    text += "\n";
  } else if (target == "cyclegraph") {
    char* raw = nullptr;
    check(hm_cycle_graph_json(pi.get(), g.base, &raw));
    value = nlohmann::ordered_json::parse(take(raw));
    text = cycle_graph_text(g, pi.get());
  } else if (target == "gluing") {
    hm_gluing* raw = nullptr;
    check(hm_gluing_from_pi(pi.get(), &raw));
    GluingPtr gluing(raw);
    char* json = nullptr;
    check(hm_gluing_json(gluing.get(), g.base, &json));
    value = nlohmann::ordered_json::parse(take(json));
    // Grey side glued to each black side, ready to feed back to --gluing.
    for (const auto& grey : value["pairing"]) text += (text.empty() ? "" : " ") + grey.dump();
    text += "\n";
  } else {
    throw Failure{kExitUsage, "unknown target '" + target + "' (expected alpha, pi, hypermap, cyclegraph, gluing)"};
  }
  if (g.json) {
    emit_json_record("convert", {{"from", src.kind()}, {"input", src.text()}, {"to", target}}, value, "formula");
  } else {
    std::cout << text;
  }
  return kExitOk;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content) || !out.flush()) throw Failure{kExitIo, "cannot write " + path};
}

int cmd_render(const Globals& g, const ConvertSource& src, const std::string& format, const std::string& path) {
  PermPtr pi = face_from_source(g, src);
  std::string content;
  char* raw = nullptr;
  if (format == "svg") {
    hm_gluing* raw_gluing = nullptr;
    check(hm_gluing_from_pi(pi.get(), &raw_gluing));
    GluingPtr gluing(raw_gluing);
    check(hm_gluing_svg(gluing.get(), g.base, &raw));
  } else if (format == "dot") {
    check(hm_cycle_graph_dot(pi.get(), g.base, &raw));
  } else {
    throw Failure{kExitUsage, "--format must be svg or dot"};
  }
  write_output(path, take(raw));
  return kExitOk;
}

int cmd_oeis(const std::string& kind, long count, const std::string& path) {
  hm_sequence_kind k;
  if (kind == "u") {
    k = HM_SEQ_U;
  } else if (kind == "H-flat") {
    k = HM_SEQ_HULTMAN_FLAT;
  } else if (kind == "r-flat") {
    k = HM_SEQ_REDUCED_FLAT;
  } else {
    throw Failure{kExitUsage, "unknown sequence '" + kind + "' (expected u, H-flat or r-flat)"};
  }
  char* raw = nullptr;
  check(hm_oeis_bfile(k, count, &raw));
  write_output(path, take(raw));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts, enumerates and cross-checks reduced unicellular hypermonopoles"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--base", g.base, "Label offset for cycle notation (0 or 1)")
      ->check(CLI::IsMember({0u, 1u}))
      ->default_val(0);
  app.add_option("--threads", g.threads, "Worker threads for exhaustive scans (0 = all cores, 1 = serial)");
  app.add_option("--max-m", g.max_m, "Safety limit on points for exhaustive scans (env HYPERMONO_MAX_M)");
  app.add_flag("--force", g.force, "Run exhaustive scans above the safety limit");
  auto* json_flag = app.add_flag("--json", g.json, "Emit JSON records");
  app.add_flag("--csv", g.csv, "Emit CSV with a header row")->excludes(json_flag);

  std::string count_kind;
  std::vector<long> count_args;
  bool count_verify = false;
  auto* count = app.add_subcommand("count", "Exact H(n,k), r(n,k) or u(g)");
  count->add_option("kind", count_kind, "H, r or u")->required();
  count->add_option("args", count_args, "n k, or g")->required();
  count->add_flag("--verify", count_verify, "Confirm with the brute-force oracle");

  std::string table_kind;
  long table_max = 0;
  auto* table = app.add_subcommand("table", "Triangle of H(n,k) or r(n,k)");
  table->add_option("kind", table_kind, "H or r")->required();
  table->add_option("max_n", table_max, "Largest n")->required();

  std::string enum_mode;
  std::vector<long> enum_args;
  std::string enum_format = "text";
  auto* enumerate = app.add_subcommand("enumerate", "List reduced unicellular hypermonopoles");
  enumerate->add_option("mode", enum_mode, "nk or genus")->required();
  enumerate->add_option("args", enum_args, "m k, or g")->required();
  enumerate->add_option("--format", enum_format, "json or text");

  std::size_t verify_max = 0;
  auto* verify = app.add_subcommand("verify", "Compare every oracle with the formulas up to max_m points");
  verify->add_option("max_m", verify_max, "Largest point count")->required();

  ConvertSource src;
  std::string convert_target;
  auto* convert = app.add_subcommand("convert", "Convert between face, hyperedges, cycle graph and gluing");
  auto add_source = [&src](CLI::App* cmd) {
    cmd->add_option("--pi", src.pi, "Circular face in cycle notation");
    cmd->add_option("--alpha", src.alpha, "Hyperedge permutation in cycle notation");
    cmd->add_option("--m", src.m, "Number of points (when fixed points are omitted)");
    cmd->add_option("--gluing", src.gluing, "Grey side glued to each black side 0..m-1");
    cmd->add_option("--hypermap", src.hypermap, "Hypermap JSON {m, sigma, alpha}");
  };
  add_source(convert);
  convert->add_option("--to", convert_target, "alpha, pi, hypermap, cyclegraph or gluing")->required();

  std::string render_format = "svg";
  std::string render_out;
  auto* render = app.add_subcommand("render", "Draw the polygon gluing (SVG) or cycle graph (DOT)");
  add_source(render);
  render->add_option("--format", render_format, "svg or dot");
  render->add_option("--out", render_out, "Output path (default stdout)");

  std::string oeis_kind;
  long oeis_count = 0;
  std::string oeis_out;
  auto* oeis = app.add_subcommand("oeis", "Write a sequence in b-file format");
  oeis->add_option("kind", oeis_kind, "u, H-flat or r-flat")->required();
  oeis->add_option("count", oeis_count, "Number of terms")->required();
  oeis->add_option("--out", oeis_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(g, count_kind, count_args, count_verify);
    if (table->parsed()) return cmd_table(g, table_kind, table_max);
    if (enumerate->parsed()) return cmd_enumerate(g, enum_mode, enum_args, enum_format);
    if (verify->parsed()) return cmd_verify(g, verify_max);
    if (convert->parsed()) return cmd_convert(g, src, convert_target);
    if (render->parsed()) return cmd_render(g, src, render_format, render_out);
    if (oeis->parsed()) return cmd_oeis(oeis_kind, oeis_count, oeis_out);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
