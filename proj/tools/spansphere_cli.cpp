#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "spansphere/spansphere.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Failure {
  sps_status status;
  std::string message;
};

void check(sps_status s) {
  if (s != SPS_OK) throw Failure{s, sps_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  sps_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};
using HypergraphH = Handle<sps_hypergraph, sps_hypergraph_free>;
using ComplexH = Handle<sps_complex, sps_complex_free>;
using BlowupH = Handle<sps_blowup, sps_blowup_free>;
using ChainH = Handle<sps_chain, sps_chain_free>;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{SPS_IO_ERROR, "IoError: cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

struct Globals {
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::uint64_t budget = 0;
  std::string out;
};

class Run {
 public:
  Run(std::string command, const Globals& g) : command_(std::move(command)), g_(g) {}

  void input(const std::string& path) { inputs_.emplace_back(path, fnv1a(read_text(path))); }
  void param(const std::string& line) { params_.push_back(line); }
  void body(const std::string& text) { body_ += text; }
  void check(const std::string& name, bool ok) {
    checks_.emplace_back(name, ok);
    passed_ = passed_ && ok;
  }
  void artifact(const std::string& name, const std::string& content) {
    if (g_.out.empty()) return;
    write(fs::path(g_.out) / name, content);
    artifacts_.push_back(name);
  }
  fs::path artifact_path(const std::string& name) {
    fs::create_directories(g_.out);
    artifacts_.push_back(name);
    return fs::path(g_.out) / name;
  }
  bool wants_files() const { return !g_.out.empty(); }

  int finish() {
    std::string text = report();
    std::cout << text;
    if (!g_.out.empty()) write(fs::path(g_.out) / "report.txt", text);
    return passed_ ? kExitPass : kExitFail;
  }

 private:
  static void write(const fs::path& p, const std::string& content) {
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure{SPS_IO_ERROR, "IoError: cannot write " + p.string()};
    out << content;
  }

  std::string report() const {
    std::ostringstream out;
    out << "command: " << command_ << '\n';
    for (const auto& [path, hash] : inputs_) out << "input: " << path << " fnv1a64=" << hash << '\n';
    out << "seed: " << g_.seed << '\n';
    for (const auto& p : params_) out << "param: " << p << '\n';
    out << body_;
    for (const auto& a : artifacts_) out << "artifact: " << a << '\n';
    for (const auto& [name, ok] : checks_) out << "check " << name << ": " << (ok ? "pass" : "FAIL") << '\n';
    out << "outcome: " << (passed_ ? "PASS" : "FAIL") << '\n';
    return out.str();
  }

  std::string command_;
  const Globals& g_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<std::string> params_;
  std::string body_;
  std::vector<std::pair<std::string, bool>> checks_;
  std::vector<std::string> artifacts_;
  bool passed_ = true;
};

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

std::string parts_of_vertices(const std::vector<std::uint32_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  return out.str();
}

void add_certificate_checks(Run& run, const std::string& report) {
  run.check("certified", has_line(report, "certified: yes"));
}

int cmd_stats(const Globals& g, const std::string& path) {
  Run run("stats", g);
  run.input(path);
  HypergraphH h;
  check(sps_hypergraph_load(path.c_str(), h.out()));
  char* report = nullptr;
  check(sps_hypergraph_stats(h.get(), &report));
  run.body(take(report));
  return run.finish();
}

int cmd_verify_sphere(const Globals& g, const std::string& sc, const std::string& host) {
  Run run("verify-sphere", g);
  run.input(sc);
  ComplexH c;
  check(sps_complex_load(sc.c_str(), c.out()));
  int dim = 0;
  size_t facets = 0, vertices = 0;
  check(sps_complex_info(c.get(), &dim, &facets, &vertices));
  run.body("dim: " + std::to_string(dim) + "\nfacets: " + std::to_string(facets) + "\nvertices: " +
           std::to_string(vertices) + "\n");
  char* report = nullptr;
  int certified = 0;
  check(sps_complex_verify(c.get(), g.budget, &report, &certified));
  std::string cert = take(report);
  run.body(cert);
  add_certificate_checks(run, cert);
  if (!host.empty()) {
    run.input(host);
    HypergraphH h;
    check(sps_hypergraph_load(host.c_str(), h.out()));
    int spanning = 0;
    check(sps_complex_is_spanning(c.get(), h.get(), &spanning));
    run.body(std::string("spanning: ") + (spanning ? "yes" : "no") + "\n");
    run.check("spanning", spanning != 0);
  }
  return run.finish();
}

std::string complex_text(const ComplexH& c, const std::string& comment) {
  char* text = nullptr;
  check(sps_complex_format(c.get(), comment.c_str(), &text));
  return take(text);
}

int cmd_sphere_partite(const Globals& g, int k, int ell, char variant) {
  Run run("sphere partite", g);
  run.param("k=" + std::to_string(k) + " ell=" + std::to_string(ell) + " variant=" + variant);
  ComplexH c;
  char* info = nullptr;
  check(sps_sphere_partite(k, ell, variant, c.out(), &info));
  std::string parts = take(info);
  run.body(parts);
  char* report = nullptr;
  int certified = 0;
  check(sps_complex_verify(c.get(), g.budget, &report, &certified));
  std::string cert = take(report);
  run.body(cert);
  add_certificate_checks(run, cert);
  run.artifact("sphere.sc", complex_text(c, ""));
  run.artifact("parts.txt", parts);
  return run.finish();
}

int cmd_sphere_path(const Globals& g, const std::string& kind, int k, int ell) {
  Run run("sphere path", g);
  run.param("kind=" + kind + " k=" + std::to_string(k) + " ell=" + std::to_string(ell));
  ComplexH c;
  char* manifest = nullptr;
  check(sps_sphere_path(kind.c_str(), k, ell, c.out(), &manifest));
  std::string m = take(manifest);
  char* report = nullptr;
  int certified = 0;
  check(sps_complex_verify(c.get(), g.budget, &report, &certified));
  std::string cert = take(report);
  run.body(cert);
  add_certificate_checks(run, cert);
  run.artifact("sphere.sc", complex_text(c, ""));
  run.artifact("manifest.txt", m);
  return run.finish();
}

int cmd_allocate(const Globals& g, const std::string& base, const std::string& parts,
                 const std::vector<std::uint32_t>& f1, const std::vector<std::uint32_t>& f2, bool overlap) {
  Run run("allocate", g);
  run.input(base);
  run.input(parts);
  run.param("f1=" + parts_of_vertices(f1) + " f2=" + parts_of_vertices(f2) + (overlap ? " allow_overlap" : ""));
  HypergraphH r;
  check(sps_hypergraph_load(base.c_str(), r.out()));
  int k = 0;
  check(sps_hypergraph_info(r.get(), &k, nullptr, nullptr));
  if (f1.size() != static_cast<std::size_t>(k) || f2.size() != static_cast<std::size_t>(k))
    throw Failure{SPS_INVALID_ARGUMENT, "InvalidArgument: --f1 and --f2 need k vertices each"};
  BlowupH b;
  check(sps_blowup_create(r.get(), read_text(parts).c_str(), b.out()));
  size_t minimum = 0;
  check(sps_blowup_minimum_part_size(b.get(), &minimum));
  run.body("minimum_part_size: " + std::to_string(minimum) + "\n");
  ComplexH c;
  char* report = nullptr;
  check(sps_allocate(b.get(), f1.data(), f2.data(), overlap ? 1 : 0, g.budget, c.out(), &report));
  std::string text = take(report);
  run.body(text);
  run.check("spanning", has_line(text, "spanning: yes"));
  run.check("f1_facet", has_line(text, "f1_facet: yes"));
  run.check("f2_facet", has_line(text, "f2_facet: yes"));
  run.check("allocation", has_line(text, "result: PASS"));
  run.artifact("sphere.sc", complex_text(c, ""));
  return run.finish();
}

std::string chain_text(const ChainH& c) {
  char* text = nullptr;
  check(sps_chain_format(c.get(), &text));
  return take(text);
}

void maybe_write_host(Run& run, const ChainH& c, std::uint64_t limit) {
  std::uint64_t edges = 0;
  check(sps_chain_host_edge_count(c.get(), &edges));
  run.body("host_edges: " + std::to_string(edges) + "\n");
  if (!run.wants_files() || edges > limit) return;
  HypergraphH h;
  check(sps_chain_host(c.get(), limit, h.out()));
  char* text = nullptr;
  check(sps_hypergraph_format(h.get(), "union of the chain links", &text));
  run.artifact("host.hg", take(text));
}

struct GenParams {
  int k = 3;
  std::uint32_t s = 6;
  std::size_t links = 3;
  std::size_t part_size = 40;
  bool singletons = false;
  std::uint64_t host_limit = 2'000'000;
};

void generate(const Globals& g, const GenParams& p, ChainH& c, Run& run) {
  run.param("k=" + std::to_string(p.k) + " s=" + std::to_string(p.s) + " links=" + std::to_string(p.links) +
            " part_size=" + std::to_string(p.part_size) + " singletons=" + (p.singletons ? "1" : "0"));
  check(sps_chain_generate(p.k, p.s, p.links, p.part_size, g.seed, p.singletons ? 1 : 0, c.out()));
  run.artifact("chain.chain", chain_text(c));
  maybe_write_host(run, c, p.host_limit);
}

int cmd_chain_gen(const Globals& g, const GenParams& p) {
  Run run("chain gen", g);
  ChainH c;
  generate(g, p, c, run);
  char* report = nullptr;
  int passed = 0;
  check(sps_chain_verify(c.get(), nullptr, &report, &passed));
  run.body(take(report));
  run.check("chain", passed != 0);
  return run.finish();
}

int cmd_chain_verify(const Globals& g, const std::string& path, const std::string& host) {
  Run run("chain verify", g);
  run.input(path);
  ChainH c;
  check(sps_chain_load(path.c_str(), c.out()));
  HypergraphH h;
  if (!host.empty()) {
    run.input(host);
    check(sps_hypergraph_load(host.c_str(), h.out()));
  }
  char* report = nullptr;
  int passed = 0;
  check(sps_chain_verify(c.get(), h.get(), &report, &passed));
  run.body(take(report));
  run.check("chain", passed != 0);
  return run.finish();
}

void solve(const Globals& g, const ChainH& c, Run& run) {
  ComplexH sphere;
  char* report = nullptr;
  int passed = 0;
  check(sps_chain_solve(c.get(), g.jobs, g.budget, sphere.out(), &report, &passed));
  std::string text = take(report);
  run.body(text);
  run.check("spanning", has_line(text, "spanning: yes"));
  run.check("certified", has_line(text, "certified: yes"));
  run.artifact("sphere.sc", complex_text(sphere, ""));
}

int cmd_chain_solve(const Globals& g, const std::string& path) {
  Run run("chain solve", g);
  run.input(path);
  ChainH c;
  check(sps_chain_load(path.c_str(), c.out()));
  solve(g, c, run);
  return run.finish();
}

int cmd_pipeline(const Globals& g, const std::string& path, const GenParams& p) {
  Run run("pipeline", g);
  ChainH c;
  if (!path.empty()) {
    run.input(path);
    check(sps_chain_load(path.c_str(), c.out()));
  } else {
    generate(g, p, c, run);
  }
  char* report = nullptr;
  int passed = 0;
  check(sps_chain_verify(c.get(), nullptr, &report, &passed));
  run.body(take(report));
  run.check("chain", passed != 0);
  if (passed) solve(g, c, run);
  return run.finish();
}

int cmd_gen(const Globals& g, const std::string& which, int k, std::uint32_t n) {
  Run run("gen " + which, g);
  run.param("k=" + std::to_string(k) + " n=" + std::to_string(n));
  HypergraphH h;
  char* blocks = nullptr;
  if (which == "codegree")
    check(sps_lower_bound_codegree(k, n, h.out(), &blocks));
  else if (which == "tight-cycle")
    check(sps_lower_bound_tight_cycle(k, n, h.out(), &blocks));
  else
    check(sps_lower_bound_vertex_degree(n, h.out(), &blocks));
  std::string b = take(blocks);
  run.body(b);
  char* stats = nullptr;
  check(sps_hypergraph_stats(h.get(), &stats));
  run.body(take(stats));
  char* text = nullptr;
  check(sps_hypergraph_format(h.get(), ("gen " + which + "\n" + b.substr(0, b.empty() ? 0 : b.size() - 1)).c_str(), &text));
  run.artifact("host.hg", take(text));
  return run.finish();
}

int cmd_extremal_pg(const Globals& g, const std::string& path, const std::string& eps, int s, std::uint64_t trials) {
  Run run("extremal pg", g);
  run.input(path);
  run.param("eps=" + eps + " s=" + std::to_string(s));
  HypergraphH h;
  check(sps_hypergraph_load(path.c_str(), h.out()));
  HypergraphH pg;
  check(sps_property_graph(h.get(), eps.c_str(), s, g.budget, pg.out()));
  size_t edges = 0;
  check(sps_hypergraph_info(pg.get(), nullptr, nullptr, &edges));
  run.body("property_graph_edges: " + std::to_string(edges) + "\n");
  if (trials > 0) {
    char* report = nullptr;
    check(sps_sample_property_rate(h.get(), eps.c_str(), s, trials, g.seed, &report));
    run.body(take(report));
  }
  char* text = nullptr;
  check(sps_hypergraph_format(pg.get(), "property graph", &text));
  run.artifact("property_graph.hg", take(text));
  return run.finish();
}

int cmd_extremal_turan(const Globals& g, const std::string& path, std::size_t b) {
  Run run("extremal turan", g);
  run.input(path);
  run.param("b=" + std::to_string(b));
  HypergraphH h;
  check(sps_hypergraph_load(path.c_str(), h.out()));
  char* parts = nullptr;
  int found = 0;
  check(sps_find_partite_blowup(h.get(), b, g.budget, &parts, &found));
  std::string text = take(parts);
  run.body(std::string("found: ") + (found ? "yes" : "no") + "\n" + text);
  if (found) run.artifact("parts.txt", text);
  return run.finish();
}

int cmd_extremal_pigeonhole(const Globals& g, const std::string& host, const std::string& parts,
                            const std::vector<std::string>& family, std::size_t b) {
  Run run("extremal pigeonhole", g);
  run.input(host);
  run.input(parts);
  for (const auto& f : family) run.input(f);
  run.param("b=" + std::to_string(b));
  HypergraphH h;
  check(sps_hypergraph_load(host.c_str(), h.out()));
  std::vector<std::unique_ptr<HypergraphH>> members;
  std::vector<const sps_hypergraph*> raw;
  for (const auto& f : family) {
    members.push_back(std::make_unique<HypergraphH>());
    check(sps_hypergraph_load(f.c_str(), members.back()->out()));
    raw.push_back(members.back()->get());
  }
  char* report = nullptr;
  int found = 0;
  check(sps_pigeonhole_blowup(h.get(), read_text(parts).c_str(), raw.data(), raw.size(), b, g.budget, &report,
                              &found));
  std::string text = take(report);
  run.body(text);
  run.artifact("pigeonhole.txt", text);
  return run.finish();
}

int exit_code_for(sps_status s) {
  switch (s) {
    case SPS_PARSE_ERROR:
    case SPS_IO_ERROR:
    case SPS_INVALID_ARGUMENT:
    case SPS_BAD_PARAMS:
    case SPS_PRECONDITION_FAILED:
    case SPS_INVALID_VERTEX:
    case SPS_BAD_ARITY:
    case SPS_WRONG_DIM:
    case SPS_DIM_MISMATCH:
    case SPS_BUDGET_EXCEEDED:
    case SPS_HYPOTHESIS_FAILED:
      return kExitError;
    default:
      return kExitFail;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning spheres in k-uniform hypergraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->default_val(0);
  app.add_option("--jobs", g.jobs, "Worker threads for per-link allocation")->default_val(1);
  app.add_option("--budget", g.budget, "Search budget (0 keeps the library default)")->default_val(0);
  app.add_option("--out", g.out, "Directory for output files");

  std::function<int()> action;

  auto* stats = app.add_subcommand("stats", "Degree and connectivity statistics of a .hg file");
  std::string stats_path;
  stats->add_option("path", stats_path)->required();
  stats->callback([&] { action = [&] { return cmd_stats(g, stats_path); }; });

  auto* vs = app.add_subcommand("verify-sphere", "Certify a .sc complex, optionally as spanning in a host");
  std::string vs_path, vs_host;
  vs->add_option("path", vs_path)->required();
  vs->add_option("--host", vs_host);
  vs->callback([&] { action = [&] { return cmd_verify_sphere(g, vs_path, vs_host); }; });

  auto* sphere = app.add_subcommand("sphere", "Explicit sphere constructions");
  sphere->require_subcommand(1);
  auto* partite = sphere->add_subcommand("partite", "Spanning sphere of a complete partite graph");
  int pk = 3, pl = 2;
  std::string variant = "a";
  partite->add_option("--k", pk)->required();
  partite->add_option("--ell", pl)->required();
  partite->add_option("--variant", variant)->check(CLI::IsMember({"a", "b"}))->default_val("a");
  partite->callback([&] { action = [&] { return cmd_sphere_partite(g, pk, pl, variant[0]); }; });
  auto* path = sphere->add_subcommand("path", "Doubly edge-covering sphere of a tight path blow-up");
  int tk = 3, tl = 0;
  std::string kind = "blowup";
  path->add_option("--k", tk)->required();
  path->add_option("--ell", tl);
  path->add_option("--kind", kind)->check(CLI::IsMember({"thin", "blowup"}))->default_val("blowup");
  path->callback([&] { action = [&] { return cmd_sphere_path(g, kind, tk, tl); }; });

  auto* alloc = app.add_subcommand("allocate", "Spanning sphere of a blow-up with two prescribed facets");
  std::string a_base, a_parts;
  std::vector<std::uint32_t> a_f1, a_f2;
  bool a_overlap = false;
  alloc->add_option("--base", a_base)->required();
  alloc->add_option("--parts", a_parts)->required();
  alloc->add_option("--f1", a_f1)->required();
  alloc->add_option("--f2", a_f2)->required();
  alloc->add_flag("--allow-overlap", a_overlap);
  alloc->callback([&] { action = [&] { return cmd_allocate(g, a_base, a_parts, a_f1, a_f2, a_overlap); }; });

  GenParams gp;
  auto add_gen = [&](CLI::App* sub) {
    sub->add_option("--k", gp.k)->default_val(3);
    sub->add_option("--s", gp.s)->default_val(6);
    sub->add_option("--links", gp.links)->default_val(3);
    sub->add_option("--part-size", gp.part_size)->default_val(40);
    sub->add_flag("--singletons", gp.singletons);
    sub->add_option("--max-host-edges", gp.host_limit)->default_val(2'000'000);
  };
  auto* chain = app.add_subcommand("chain", "Blow-up chain certificates");
  chain->require_subcommand(1);
  auto* cgen = chain->add_subcommand("gen", "Generate a synthetic chain host");
  add_gen(cgen);
  cgen->callback([&] { action = [&] { return cmd_chain_gen(g, gp); }; });
  auto* cver = chain->add_subcommand("verify", "Check chain properties (1)-(5)");
  std::string c_path, c_host;
  cver->add_option("path", c_path)->required();
  cver->add_option("--host", c_host);
  cver->callback([&] { action = [&] { return cmd_chain_verify(g, c_path, c_host); }; });
  auto* csol = chain->add_subcommand("solve", "Assemble the spanning sphere of a chain host");
  csol->add_option("path", c_path)->required();
  csol->callback([&] { action = [&] { return cmd_chain_solve(g, c_path); }; });

  auto* pipe = app.add_subcommand("pipeline", "Generate or load a chain, verify, solve and certify");
  std::string p_path;
  pipe->add_option("path", p_path);
  add_gen(pipe);
  pipe->callback([&] { action = [&] { return cmd_pipeline(g, p_path, gp); }; });

  auto* gen = app.add_subcommand("gen", "Lower-bound constructions");
  gen->require_subcommand(1);
  int gk = 3;
  std::uint32_t gn = 12;
  std::string which;
  for (const char* name : {"codegree", "tight-cycle", "vertex-degree"}) {
    auto* sub = gen->add_subcommand(name, std::string("Construction ") + name);
    if (std::string(name) != "vertex-degree") sub->add_option("--k", gk)->default_val(3);
    sub->add_option("--n", gn)->required();
    sub->callback([&, name] {
      which = name;
      action = [&] { return cmd_gen(g, which, which == "vertex-degree" ? 3 : gk, gn); };
    });
  }

  auto* ext = app.add_subcommand("extremal", "Toy-scale density tools");
  ext->require_subcommand(1);
  auto* pg = ext->add_subcommand("pg", "Property graph of a .hg file");
  std::string e_path, e_eps = "0";
  int e_s = 0;
  std::uint64_t e_trials = 0;
  pg->add_option("path", e_path)->required();
  pg->add_option("--eps", e_eps)->default_val("0");
  pg->add_option("--s", e_s)->required();
  pg->add_option("--trials", e_trials, "Also estimate the sampling rate")->default_val(0);
  pg->callback([&] { action = [&] { return cmd_extremal_pg(g, e_path, e_eps, e_s, e_trials); }; });
  auto* turan = ext->add_subcommand("turan", "Find K(b,...,b) in an s-graph");
  std::size_t e_b = 2;
  turan->add_option("path", e_path)->required();
  turan->add_option("--b", e_b)->default_val(2);
  turan->callback([&] { action = [&] { return cmd_extremal_turan(g, e_path, e_b); }; });
  auto* pig = ext->add_subcommand("pigeonhole", "Consistent blow-up of a family member");
  std::string e_parts;
  std::vector<std::string> e_family;
  pig->add_option("path", e_path)->required();
  pig->add_option("--parts", e_parts)->required();
  pig->add_option("--family", e_family)->required();
  pig->add_option("--b", e_b)->default_val(2);
  pig->callback([&] { action = [&] { return cmd_extremal_pigeonhole(g, e_path, e_parts, e_family, e_b); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    int code = action();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "wall_time: " << std::fixed << std::setprecision(3) << seconds << "s\n";
    return code;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return exit_code_for(f.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
