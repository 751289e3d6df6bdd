// gph: build, verify and classify graphicahedra; check presentations;
// realize the C_q-graphicahedron as a torus tessellation.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gph/gph.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

enum Exit { kOk = 0, kClaimFailed = 1, kUsage = 2, kCap = 3 };

struct RunConfig {
  std::size_t cap_faces = gph::Caps::faces;
  std::size_t cap_closure = gph::Caps::closure;
  std::size_t cap_cosets = gph::Caps::cosets;
  std::string out;
  std::string format = "json";
};

const char* pass(bool ok) { return ok ? "PASS" : "FAIL"; }
const char* yes_no(bool b) { return b ? "true" : "false"; }

gph::Graph named_graph(const std::string& s) {
  const auto colon = s.find(':');
  const std::string kind = s.substr(0, colon);
  const int n = gph::detail::parse_int(s.substr(colon + 1), "graph size");
  if (kind == "star") return gph::star_graph(n);
  if (kind == "cycle") return gph::cycle_graph(n);
  if (kind == "path") return gph::path_graph(n);
  if (kind == "complete") return gph::complete_graph(n);
  throw gph::ParseError("unknown graph family '" + kind + "'");
}

/// A file path, a family name such as cycle:4, or inline edge-list/JSON text.
gph::Graph load_graph(const std::string& source) {
  std::error_code ec;
  if (fs::is_regular_file(source, ec)) {
    std::ifstream in(source);
    std::stringstream ss;
    ss << in.rdbuf();
    return gph::parse_graph(ss.str());
  }
  const auto colon = source.find(':');
  if (colon != std::string::npos && source.find('=') == std::string::npos && source.front() != '{') {
    return named_graph(source);
  }
  return gph::parse_graph(source);
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
  throw gph::InvalidArgument("format '" + cfg.format + "' not available here (use " + list + ")");
}

void write_output(const RunConfig& cfg, const std::string& name, const std::string& content) {
  if (cfg.out.empty()) return;
  fs::create_directories(cfg.out);
  const fs::path path = fs::path(cfg.out) / name;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw gph::InvalidArgument("cannot write " + path.string());
  os << content;
  std::cerr << "wrote " << path.string() << '\n';
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

int cmd_build(const RunConfig& cfg, const std::string& source) {
  require_format(cfg, {"json", "dot", "csv"});
  const gph::Graph g = load_graph(source);
  const gph::FaceLattice lat = gph::build_graphicahedron(g, cfg.cap_faces);
  const std::size_t flags = gph::enumerate_flags(lat).size();
  const auto fv = lat.f_vector();
  const bool formula_ok = flags == gph::detail::factorial(g.p()) * gph::detail::factorial(g.q());

  std::cout << "f = (" << join(fv) << "); flags = " << flags << '\n';
  for (std::size_t i = 0; i < fv.size(); ++i) std::cout << "rank " << i << ": " << fv[i] << " faces\n";
  if (lat.rank() == 3) std::cout << "euler characteristic = " << gph::euler_characteristic(lat) << '\n';

  if (cfg.format == "json") {
    json doc = gph::to_json(lat);
    doc["f_vector"] = fv;
    doc["flags"] = flags;
    write_output(cfg, "faces.json", doc.dump(2) + "\n");
  } else if (cfg.format == "dot") {
    write_output(cfg, "hasse.dot", gph::hasse_dot(lat));
  } else {
    std::ostringstream os;
    os << "rank,count\n";
    for (std::size_t i = 0; i < fv.size(); ++i) os << i << ',' << fv[i] << '\n';
    write_output(cfg, "f_vector.csv", os.str());
  }
  return formula_ok ? kOk : kClaimFailed;
}

int cmd_verify(const RunConfig& cfg, const std::string& source) {
  require_format(cfg, {"json"});
  const gph::Graph g = load_graph(source);
  const gph::SymmetryAnalysis sym(g, cfg.cap_faces);
  const gph::AxiomReport axioms = gph::verify_polytope_axioms(sym.lattice());
  const auto report = sym.transitivity_report();
  const bool regular = sym.is_regular();

  bool all_transitive = true, cross_checks = true;
  for (const auto& r : report) {
    all_transitive = all_transitive && r.transitive;
    cross_checks = cross_checks && r.routes_agree && r.chain_agrees && r.dual_agrees;
  }
  std::cout << "axioms: " << pass(axioms.ok()) << " (flags = " << axioms.flag_count << ")\n";
  for (const auto& v : axioms.violations) std::cout << "  " << v << '\n';
  std::cout << "regular: " << yes_no(regular);
  if (all_transitive) {
    std::cout << "; all ranks transitive";
  } else {
    for (int j = 1; j + 1 < g.q(); ++j)
      std::cout << "; " << j << "-face-transitive: " << yes_no(report[static_cast<std::size_t>(j)].transitive);
  }
  std::cout << '\n' << "cross-checks: " << pass(cross_checks) << '\n';

  json doc = {{"graph", gph::to_json(g)},
              {"axioms",
               {{"unique_least", axioms.unique_least},
                {"unique_greatest", axioms.unique_greatest},
                {"graded", axioms.graded},
                {"diamond", axioms.diamond},
                {"flag_connected", axioms.flag_connected},
                {"strongly_flag_connected", axioms.strongly_flag_connected},
                {"adjacency_involutive", axioms.adjacency_involutive},
                {"flags", axioms.flag_count},
                {"strong_pairs_checked", axioms.strong_pairs_checked},
                {"violations", axioms.violations}}},
              {"transitivity", gph::to_json(report)},
              {"regular", regular},
              {"group_order", gph::polytope_group_order(g)}};
  write_output(cfg, "verify.json", doc.dump(2) + "\n");
  return axioms.ok() && cross_checks ? kOk : kClaimFailed;
}

int cmd_classify(const RunConfig& cfg, int q_max) {
  require_format(cfg, {"json", "csv"});
  const gph::CensusReport report = gph::subgraph_transitivity_census(q_max);
  std::vector<std::size_t> per_q(static_cast<std::size_t>(q_max + 1), 0);
  std::vector<std::string> middle, fully;
  for (const auto& e : report.entries) {
    const int q = e.graph.q();
    ++per_q[static_cast<std::size_t>(q)];
    if (std::all_of(e.transitive.begin(), e.transitive.end(), [](bool b) { return b; })) fully.push_back(e.canonical);
    bool any = false;
    for (int j = 2; j <= q - 2; ++j) any = any || e.transitive[static_cast<std::size_t>(j)];
    if (any) middle.push_back(e.canonical);
  }
  for (int q = 1; q <= q_max; ++q) std::cout << "q = " << q << ": " << per_q[static_cast<std::size_t>(q)] << " connected graphs\n";
  std::cout << "transitive at every j:";
  for (const auto& f : fully) std::cout << " [" << f << ']';
  std::cout << '\n';
  std::cout << "j-subgraph transitive for some 2 <= j <= q-2: " << middle.size() << " graphs, all stars: "
            << pass(report.ok()) << '\n';
  for (const auto& v : report.violations) std::cout << "  " << v << '\n';
  if (cfg.format == "json") {
    write_output(cfg, "census.json", gph::to_json(report).dump(2) + "\n");
  } else {
    write_output(cfg, "census.csv", gph::to_csv(report));
  }
  return report.ok() ? kOk : kClaimFailed;
}

int cmd_present(const RunConfig& cfg, const std::string& which, int q) {
  require_format(cfg, {"json"});
  json doc = {{"which", which}, {"q", q}};
  bool ok = true;
  if (which == "star" || which == "cycle") {
    const gph::GroupPresentation pres = which == "star" ? gph::star_presentation(q) : gph::cycle_presentation(q);
    const std::uint64_t expected = gph::detail::factorial(which == "star" ? q + 1 : q);
    const gph::EnumerationResult res = gph::todd_coxeter(pres, {}, cfg.cap_cosets);
    doc["presentation"] = gph::to_json(pres);
    doc["complete"] = res.complete;
    doc["cosets_defined"] = res.cosets_defined;
    if (!res.complete) {
      doc["verdict"] = "inconclusive";
      write_output(cfg, "present.json", doc.dump(2) + "\n");
      std::cout << "enumeration inconclusive after " << res.cosets_defined << " cosets\n";
      return kCap;
    }
    ok = res.index == expected && gph::verify_coset_table(pres, res);
    doc["order"] = res.index;
    doc["expected"] = expected;
    doc["verdict"] = pass(ok);
    std::cout << "order " << res.index << " (expected " << expected << ") " << pass(ok) << '\n';
  } else if (which == "twisted") {
    const auto t = gph::twisted_generators(q);
    const std::size_t order = gph::closure(2 * q + 1, t.sigma, cfg.cap_closure).size();
    const auto cgroup = gph::verify_string_cgroup(t.sigma, cfg.cap_closure);
    const auto product = gph::direct_product_check(q, cfg.cap_closure);
    ok = cgroup.ok() && product.ok();
    doc["order"] = order;
    doc["string_c_group"] = cgroup.ok();
    doc["direct_product"] = product.ok();
    std::vector<std::string> failures = cgroup.failures;
    failures.insert(failures.end(), product.failures.begin(), product.failures.end());
    doc["failures"] = failures;
    std::cout << "order " << order << "; string C-group " << pass(cgroup.ok()) << "; direct product "
              << pass(product.ok()) << '\n';
  } else {
    throw gph::InvalidArgument("unknown presentation '" + which + "'");
  }
  write_output(cfg, "present.json", doc.dump(2) + "\n");
  return ok ? kOk : kClaimFailed;
}

int cmd_realize(const RunConfig& cfg, int q) {
  require_format(cfg, {"json", "off"});
  const gph::TorusTessellation torus = gph::build_torus_tessellation(q, cfg.cap_faces);
  const gph::TessellationChecks checks = gph::check_tessellation(torus);
  const gph::FaceLattice lat = gph::build_graphicahedron(gph::cycle_graph(q), cfg.cap_faces);
  const gph::IsomorphismResult iso = gph::torus_isomorphism(torus, lat, q <= 4);
  const bool ok = iso.ok() && checks.face_to_face && checks.vertex_in_q_tiles && checks.tiles_are_permutahedra;

  std::cout << "tiles=" << checks.tiles << " vertices=" << checks.vertices << " flags=" << checks.flags
            << "; torus isomorphism: " << pass(ok) << '\n';
  const json geometry = gph::to_json(gph::torus_geometry(torus));
  if (cfg.format == "off") {
    write_output(cfg, "torus.off", gph::export_off(torus));
  }
  write_output(cfg, "torus.json", geometry.dump(2) + "\n");
  return ok ? kOk : kClaimFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graphicahedra: construction, symmetry, presentations and torus realization"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--cap-faces", cfg.cap_faces, "maximum number of faces")->envname("GPH_CAP_FACES")->check(CLI::PositiveNumber);
  app.add_option("--cap-closure", cfg.cap_closure, "maximum group closure size")->envname("GPH_CAP_CLOSURE")->check(CLI::PositiveNumber);
  app.add_option("--cap-cosets", cfg.cap_cosets, "maximum coset table rows")->envname("GPH_CAP_COSETS")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "directory for report files")->envname("GPH_OUT");
  app.add_option("--format", cfg.format, "report format")
      ->envname("GPH_FORMAT")
      ->check(CLI::IsMember({"json", "dot", "off", "csv"}));

  std::string graph_source;
  int q = 0, q_max = 5;
  std::string which;

  auto* build = app.add_subcommand("build", "build the face lattice of P_G");
  build->add_option("graph", graph_source, "file, family (star:3, cycle:4, path:4, complete:4) or edge list")->required();
  auto* verify = app.add_subcommand("verify", "polytope axioms, face transitivity and regularity");
  verify->add_option("graph", graph_source, "file, family or edge list")->required();
  auto* classify = app.add_subcommand("classify", "j-subgraph transitivity census of connected graphs");
  classify->add_option("--q-max", q_max, "largest edge count")->check(CLI::PositiveNumber);
  auto* present = app.add_subcommand("present", "coset enumeration and group checks");
  present->add_option("which", which, "star, cycle or twisted")->required()->check(CLI::IsMember({"star", "cycle", "twisted"}));
  present->add_option("q", q, "number of edges")->required();
  auto* realize = app.add_subcommand("realize", "permutahedral torus tessellation for C_q");
  realize->add_option("q", q, "cycle length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (build->parsed()) return cmd_build(cfg, graph_source);
    if (verify->parsed()) return cmd_verify(cfg, graph_source);
    if (classify->parsed()) return cmd_classify(cfg, q_max);
    if (present->parsed()) return cmd_present(cfg, which, q);
    if (realize->parsed()) return cmd_realize(cfg, q);
  } catch (const gph::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const gph::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const gph::InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const gph::InternalInconsistency& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kClaimFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kClaimFailed;
  }
  return kUsage;
}
