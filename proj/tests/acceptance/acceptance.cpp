// Acceptance runner: one PASS/FAIL line per criterion, details indented below it.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "spansphere/allocation.hpp"
#include "spansphere/chain.hpp"
#include "spansphere/error.hpp"
#include "spansphere/extremal.hpp"
#include "spansphere/io.hpp"
#include "spansphere/matching.hpp"
#include "spansphere/spheres.hpp"
#include "spansphere/walk.hpp"

using namespace spansphere;
namespace fs = std::filesystem;

namespace {

// Runtime limits in seconds; 0 means no limit.
constexpr double kLimit[10] = {0, 5, 10, 60, 120, 300, 0, 30, 0, 0};

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass || notes.size() < 12) notes.push_back("failed: " + what);
      pass = false;
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string str(const VertexSet& s) { return format_set(s); }

bool sphere_level_ok(int k, SphereLevel level) {
  if (k == 2) return level == SphereLevel::FullDim1;
  if (k == 3) return level == SphereLevel::FullDim2;
  return level == SphereLevel::Shelled || level == SphereLevel::LinkVerified;
}

bool transversal_spanning(const SimplicialComplex& s, const std::vector<VertexSet>& parts) {
  VertexSet all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  if (make_set(all) != s.vertices()) return false;
  for (std::size_t i = 0; i < s.facet_count(); ++i)
    for (const auto& p : parts)
      if (intersection_size(s.facet(i), p) != 1) return false;
  return true;
}

std::int64_t sphere_euler(int k) { return k % 2 == 1 ? 2 : 0; }

// 1. Partite spheres.
Outcome criterion1() {
  Outcome o;
  std::size_t count = 0;
  for (int k = 2; k <= 6; ++k)
    for (int l = 2; l <= 6; ++l) {
      for (char variant : {'a', 'b'}) {
        if (variant == 'b' && (k < 3 || l < 3)) continue;
        PartiteSphere ps = variant == 'a' ? partite_sphere_a(k, l) : partite_sphere_b(k, l);
        const std::string tag = std::string(1, variant) + " k=" + std::to_string(k) + " l=" + std::to_string(l);
        const std::size_t expected = variant == 'a' ? static_cast<std::size_t>(2 * l) << (k - 2)
                                                    : static_cast<std::size_t>(4 * l + 2) << (k - 3);
        o.require(ps.sphere.facet_count() == expected, tag + " facet count");
        o.require(transversal_spanning(ps.sphere, ps.parts), tag + " spanning");
        o.require(euler_characteristic(ps.sphere) == sphere_euler(k), tag + " euler");
        auto cert = verify_sphere(ps.sphere);
        o.require(sphere_level_ok(k, cert.level), tag + " level " + sphere_level_name(cert.level));
        if (cert.shelling_order) o.require(!check_shelling(ps.sphere, *cert.shelling_order), tag + " shelling recheck");
        ++count;
      }
    }
  o.note(std::to_string(count) + " partite spheres");
  return o;
}

// 2. Doubly edge-covering spheres.
Outcome criterion2() {
  Outcome o;
  std::size_t count = 0;
  for (int k = 2; k <= 5; ++k) {
    auto thin = thin_path_sphere(k);
    auto v = check_doubly_covering(thin);
    o.require(v.empty(), "thin k=" + std::to_string(k) + (v.empty() ? "" : ": " + v.front()));
    ++count;
    for (std::size_t l = static_cast<std::size_t>(k) + 1; l <= 10; ++l) {
      auto s = tight_path_blowup_sphere(k, l);
      auto w = check_doubly_covering(s);
      o.require(w.empty(), "path k=" + std::to_string(k) + " l=" + std::to_string(l) + (w.empty() ? "" : ": " + w.front()));
      ++count;
    }
  }
  o.note(std::to_string(count) + " doubly covering spheres");
  return o;
}

struct FillCheck {
  bool ok = true;
  std::string reason;
  bool parity_e_star = false;
};

FillCheck run_fill(const Blowup& b, std::uint64_t seed) {
  FillCheck out;
  std::mt19937_64 rng(seed);
  auto entry = fixture::random_entries(b, rng);
  FillResult r;
  try {
    r = fill_blowup(b, entry);
  } catch (const Error& e) {
    out.ok = false;
    out.reason = e.what();
    return out;
  }
  auto fail = [&](const std::string& why) {
    if (out.ok) out.reason = why;
    out.ok = false;
  };
  std::vector<int> seen(b.host_order(), 0);
  for (const auto& s : r.spheres)
    for (Vertex v : s.vertices()) ++seen[v];
  for (Vertex v : b.vertices())
    if (seen[v] != 1) fail("vertex " + std::to_string(v) + " covered " + std::to_string(seen[v]) + " times");
  std::size_t covered = 0;
  for (int c : seen) covered += static_cast<std::size_t>(c);
  if (covered != b.vertices().size()) fail("covered vertex count differs");
  const Hypergraph& base = b.base();
  for (std::size_t e = 0; e < base.edge_count(); ++e) {
    const auto& s = r.spheres[e];
    if (!s.has_facet(entry[e])) fail("entry facet " + str(entry[e]) + " missing");
    auto cert = verify_sphere(s);
    if (!sphere_level_ok(base.uniformity(), cert.level)) fail("S_e not certified for edge " + std::to_string(e));
    VertexSet be(base.edge(e).begin(), base.edge(e).end());
    for (std::size_t i = 0; i < s.facet_count(); ++i)
      if (b.project_set(s.facet(i)) != be) fail("facet outside the blow-up of its edge");
    auto shape = classify_partite_shape(r.shapes[e]);
    const bool at_parity = r.parity_edge && *r.parity_edge == e;
    if (!shape) {
      fail("edge " + std::to_string(e) + " has no shape");
      continue;
    }
    std::vector<std::size_t> sorted = r.shapes[e];
    std::sort(sorted.begin(), sorted.end());
    if (r.parity == ParityFix::OutsideImage && at_parity) {
      if (sorted != std::vector<std::size_t>(base.uniformity(), 3)) fail("e* shape is not (3,...,3)");
      out.parity_e_star = true;
    } else if (r.parity == ParityFix::ImageEdge && at_parity) {
      if (*shape != PartiteShape::ThreeEll) fail("parity image edge shape");
    } else if (r.routed_pairs[e] == 0) {
      if (*shape != PartiteShape::AllTwo) fail("unrouted edge is not (2,...,2)");
    } else {
      if (*shape != PartiteShape::TwoEll || sorted.back() != 2 + r.routed_pairs[e]) fail("routed edge shape");
    }
  }
  return out;
}

// 3. Filling.
Outcome criterion3() {
  Outcome o;
  for (Vertex s : {5u, 6u, 7u})
    for (std::size_t m : {20u, 40u}) {
      std::size_t ok = 0;
      std::string first_failure;
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Blowup b = fixture::complete_blowup(3, s, m);
        FillCheck c = run_fill(b, seed * 1000 + s * 10 + m);
        if (c.ok) ++ok;
        else if (first_failure.empty()) first_failure = c.reason;
      }
      const std::string tag = "K_" + std::to_string(s) + "^(3) part size " + std::to_string(m);
      o.note(tag + ": " + std::to_string(ok) + "/20" + (first_failure.empty() ? "" : " (" + first_failure + ")"));
      o.require(ok == 20, tag);
    }
  std::size_t e_star = 0, runs = 0;
  for (Vertex s : {6u, 7u})
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      std::mt19937_64 pick(seed);
      Blowup b = fixture::complete_blowup(3, s, 40, std::nullopt, static_cast<Vertex>(pick() % s));
      FillCheck c = run_fill(b, seed);
      ++runs;
      o.require(c.ok, "parity block s=" + std::to_string(s) + " seed " + std::to_string(seed) + ": " + c.reason);
      e_star += c.parity_e_star;
    }
  o.note("parity block: e* case in " + std::to_string(e_star) + "/" + std::to_string(runs) + " runs");
  o.require(e_star >= 1, "e* parity case exercised");
  return o;
}

// 4. Allocation.
Outcome criterion4() {
  Outcome o;
  std::size_t plain = 0, single = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (bool with_singleton : {false, true}) {
      std::mt19937_64 rng(seed * 7 + with_singleton);
      Blowup b = with_singleton ? fixture::complete_blowup(3, 6, 40, Vertex{5}) : fixture::complete_blowup(3, 6, 40);
      auto f = with_singleton ? fixture::random_overlapping_facets(b, rng, 5) : fixture::random_facets(b, rng);
      AllocateOptions opt;
      opt.allow_overlap = with_singleton;
      const std::string tag = std::string(with_singleton ? "singleton" : "plain") + " seed " + std::to_string(seed);
      try {
        AllocationResult r = allocate(b, f.f1, f.f2, opt);
        bool ok = true;
        ok &= r.sphere.vertices() == b.vertices();
        for (std::size_t i = 0; i < r.sphere.facet_count() && ok; ++i) ok &= b.is_edge(r.sphere.facet(i));
        ok &= r.sphere.has_facet(f.f1) && r.sphere.has_facet(f.f2);
        ok &= r.report.certificate && r.report.certificate->level == SphereLevel::FullDim2;
        ok &= !with_singleton || r.report.singleton.has_value();
        o.require(ok, tag);
        if (ok) ++(with_singleton ? single : plain);
      } catch (const Error& e) {
        o.require(false, tag + ": " + e.what());
      }
    }
  }
  o.note("plain " + std::to_string(plain) + "/20, singleton " + std::to_string(single) + "/20");
  return o;
}

// 5. End-to-end pipeline.
Outcome criterion5() {
  Outcome o;
  struct Row {
    int k;
    Vertex s;
    std::size_t m;
  };
  const std::vector<Row> rows{{2, 6, 13}, {3, 6, 40}, {4, 7, 45}};
  for (const auto& row : rows)
    for (std::size_t links = 1; links <= 4; ++links)
      for (bool singletons : {false, true}) {
        if (singletons && row.k != 3) continue;
        const std::string tag = "k=" + std::to_string(row.k) + " links=" + std::to_string(links) +
                                (singletons ? " singletons" : "");
        try {
          ChainGenOptions gen;
          gen.singletons = singletons;
          const Vertex s = singletons ? row.s + 1 : row.s;
          const std::size_t m = singletons ? minimum_part_size(complete_hypergraph(row.k, s)).minimum : row.m;
          auto inst = generate_chain_host(row.k, s, links, std::max(m, row.m), 100 + links, gen);
          ChainReport rep = verify_chain(*inst.certificate);
          o.require(rep.passed(), tag + " verify_chain");
          SpanningOptions opt;
          opt.jobs = 2;
          SpanningResult r = spanning_sphere(*inst.certificate, opt);
          ChainHost host(*inst.certificate);
          bool spanning = r.sphere.vertices() == host.vertices();
          for (std::size_t i = 0; i < r.sphere.facet_count() && spanning; ++i) spanning &= host.has_edge(r.sphere.facet(i));
          o.require(spanning && r.spanning, tag + " spanning");
          o.require(r.certificate && sphere_level_ok(row.k, r.certificate->level),
                    tag + " level " + (r.certificate ? sphere_level_name(r.certificate->level) : "none"));
          if (row.k == 2) o.require(oracle::is_cycle(r.sphere), tag + " Hamilton cycle");
          if (links == 4)
            o.note(tag + ": " + std::to_string(host.vertices().size()) + " vertices, " +
                   (r.certificate ? sphere_level_name(r.certificate->level) : "none"));
        } catch (const Error& e) {
          o.require(false, tag + ": " + e.what());
        }
      }
  return o;
}

// 6. Degree and connectivity properties.
Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(6);
  std::size_t dirac = 0, walks = 0;
  for (int t = 0; t < 200; ++t) {
    const int k = t % 2 ? 4 : 3;
    std::uniform_int_distribution<Vertex> nd(static_cast<Vertex>(k + 3), 14);
    std::uniform_real_distribution<double> pd(0.3, 1.0);
    const Vertex n = nd(rng);
    Hypergraph h = oracle::random_hypergraph(k, n, pd(rng), rng);
    const std::string tag = "instance " + std::to_string(t) + " (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
    const std::uint64_t ds = min_supported_codegree(h);
    for (int d = 1; d < k - 1; ++d) {
      const std::uint64_t a = min_supported_d_degree(h, d).delta_star_d;
      const std::uint64_t b = min_supported_d_degree(h, d + 1).delta_star_d;
      o.require(a * static_cast<std::uint64_t>(k - d) >= ds * b, tag + " supported degree inequality d=" + std::to_string(d));
    }
    const bool connected = is_tightly_connected(h);
    if (!h.empty() && isolated_vertices(h).empty() && ds >= (n - k + 1) / 2) {
      ++dirac;
      o.require(connected, tag + " tightly connected");
    }
    if (connected) {
      TightWalk w = covering_tight_walk(h);
      ++walks;
      o.require(!validate_walk(h, w), tag + " walk windows");
      o.require(walk_covers(h, w), tag + " walk covers");
      o.require(std::log(static_cast<double>(w.order())) <= 2.0 * k * std::log(static_cast<double>(n)), tag + " walk order");
    }
  }
  o.note(std::to_string(dirac) + " instances above the degree threshold, " + std::to_string(walks) + " covering walks");
  o.note("domain n in [k+3, 14]; at n = k+2 the threshold admits non-connected examples such as {0,1,4},{2,3,4}");
  return o;
}

// 7. Lower bounds.
Outcome criterion7() {
  Outcome o;
  for (Vertex n : {10u, 12u, 14u}) {
    auto inst = lower_bound_codegree(3, n);
    const std::uint64_t d = oracle::delta_star(*inst.host, 2);
    o.require(d == n / 2 - 1, "codegree n=" + std::to_string(n) + " oracle delta* " + std::to_string(d));
    o.require(min_supported_codegree(*inst.host) == d, "codegree n=" + std::to_string(n) + " library delta*");
    Hypergraph cut = remove_edges_containing(*inst.host, inst.blocks.at(0).second);
    o.require(tight_components(cut).components.size() == 2, "codegree n=" + std::to_string(n) + " two components");
    o.require(oracle::tight_component_count(cut) == 2, "codegree n=" + std::to_string(n) + " oracle components");
  }
  auto tc = lower_bound_tight_cycle(3, 9);
  o.require(oracle::delta_star(*tc.host, 2) == 4, "tight cycle delta* = 4");
  o.require(min_supported_codegree(*tc.host) == 4, "tight cycle library delta*");
  o.require(!oracle::has_perfect_matching(*tc.host), "tight cycle has no perfect matching");
  auto vd = lower_bound_vertex_degree(9);
  bool spanning_component = false;
  for (const auto& c : tight_components(*vd.host).components)
    spanning_component |= isolated_vertices(edge_subgraph(*vd.host, c)).empty();
  o.require(!spanning_component, "vertex degree construction has no spanning tight component");
  return o;
}

// 8. Oracle equivalence.
Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const int k = 2 + t % 3;
    const Vertex n = static_cast<Vertex>(k + 2 + rng() % (12 - k - 1));
    std::uniform_real_distribution<double> pd(0.2, 0.9);
    Hypergraph h = oracle::random_hypergraph(k, n, pd(rng), rng);
    const std::string tag = "case " + std::to_string(t);
    VertexSet s;
    for (Vertex v = 0; v < n && s.size() < static_cast<std::size_t>(k); ++v)
      if (rng() % 3 == 0) s.push_back(v);
    o.require(degree(h, s) == oracle::degree(h, s), tag + " degree");
    o.require(min_supported_codegree(h) == oracle::delta_star(h, k - 1), tag + " delta*");
    for (int d = 1; d < k; ++d)
      o.require(min_supported_d_degree(h, d).delta_star_d == oracle::delta_star(h, d), tag + " delta*_" + std::to_string(d));
    Hypergraph g = k == 2 ? h : oracle::random_hypergraph(2, n, pd(rng), rng);
    o.require(maximum_matching(g).size() == oracle::matching_number(g), tag + " matching size");
    if (k == 3 && n >= 6) {
      const int s_size = 6;
      const Rational eps(1, 10);
      o.require(property_graph(h, dense_property(eps, 3), s_size).edge_count() ==
                    oracle::property_edge_count(h, s_size, 1, 10),
                tag + " property graph");
    }
  }
  return o;
}

// 9. CLI determinism.
std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& cmd) {
  const int rc = std::system((cmd + " > /dev/null 2>&1").c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

Outcome criterion9() {
  Outcome o;
  const fs::path work = fs::temp_directory_path() / ("spansphere_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(work);
  fs::create_directories(work / "inputs");
  const std::string cli = SPANSPHERE_CLI_PATH;
  const fs::path in = work / "inputs";

  write_file(in / "k6.hg", format_hypergraph(complete_hypergraph(3, 6)));
  write_file(in / "parts.txt", format_parts(fixture::complete_blowup(3, 6, 30).parts()));
  write_file(in / "k44.hg", "2 8\n0 4\n0 5\n0 6\n0 7\n1 4\n1 5\n1 6\n1 7\n2 4\n2 5\n2 6\n2 7\n3 4\n3 5\n3 6\n3 7\n");
  {
    std::string host = "3 9\n";
    for (Vertex a = 0; a < 3; ++a)
      for (Vertex b = 3; b < 6; ++b)
        for (Vertex c = 6; c < 9; ++c) host += std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) + "\n";
    write_file(in / "partite.hg", host);
    write_file(in / "partite_parts.txt", "0 1 2\n3 4 5\n6 7 8\n");
    write_file(in / "member.hg", "3 3\n0 1 2\n");
  }
  if (run(cli + " --seed 3 --out " + (in / "chain").string() + " chain gen --k 3 --s 6 --links 2 --part-size 30") != 0)
    o.require(false, "preparing chain input");
  if (run(cli + " --out " + (in / "oct").string() + " sphere partite --k 3 --ell 2") != 0)
    o.require(false, "preparing sphere input");

  const std::string chain = (in / "chain" / "chain.chain").string();
  const std::vector<std::pair<std::string, std::string>> commands{
      {"stats", "stats " + (in / "k6.hg").string()},
      {"verify-sphere", "verify-sphere " + (in / "oct" / "sphere.sc").string() + " --host " + (in / "k6.hg").string()},
      {"sphere-partite-a", "sphere partite --k 4 --ell 3"},
      {"sphere-partite-b", "sphere partite --k 3 --ell 4 --variant b"},
      {"sphere-path", "sphere path --k 3 --ell 7"},
      {"sphere-thin", "sphere path --k 4 --kind thin"},
      {"allocate", "allocate --base " + (in / "k6.hg").string() + " --parts " + (in / "parts.txt").string() +
                       " --f1 0 30 60 --f2 91 121 151"},
      {"chain-gen", "chain gen --k 3 --s 7 --links 3 --part-size 36 --singletons"},
      {"chain-verify", "chain verify " + chain},
      {"chain-solve", "chain solve " + chain},
      {"pipeline-file", "pipeline " + chain},
      {"pipeline-gen", "pipeline --k 4 --s 7 --links 2 --part-size 45"},
      {"gen-codegree", "gen codegree --k 3 --n 12"},
      {"gen-tight-cycle", "gen tight-cycle --k 3 --n 9"},
      {"gen-vertex-degree", "gen vertex-degree --n 9"},
      {"extremal-pg", "extremal pg " + (in / "k6.hg").string() + " --s 5 --eps 1/10 --trials 50"},
      {"extremal-turan", "extremal turan " + (in / "k44.hg").string() + " --b 2"},
      {"extremal-pigeonhole", "extremal pigeonhole " + (in / "partite.hg").string() + " --parts " +
                                  (in / "partite_parts.txt").string() + " --family " + (in / "member.hg").string() +
                                  " --b 2"},
  };
  std::size_t files = 0;
  for (const auto& [name, args] : commands) {
    std::vector<std::map<std::string, std::string>> outputs;
    std::vector<int> codes;
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path out = work / (name + "_" + std::to_string(rep));
      codes.push_back(run(cli + " --seed 17 --jobs " + std::to_string(1 + 2 * rep) + " --out " + out.string() + " " + args));
      std::map<std::string, std::string> contents;
      if (fs::exists(out))
        for (const auto& entry : fs::recursive_directory_iterator(out))
          if (entry.is_regular_file()) contents[fs::relative(entry.path(), out).string()] = slurp(entry.path());
      outputs.push_back(contents);
    }
    o.require(codes[0] == 0, name + " exit code " + std::to_string(codes[0]));
    o.require(codes[0] == codes[1], name + " exit codes differ");
    o.require(!outputs[0].empty(), name + " wrote no files");
    o.require(outputs[0] == outputs[1], name + " outputs differ");
    files += outputs[0].size();
  }
  o.note(std::to_string(commands.size()) + " commands, " + std::to_string(files) + " files compared");
  fs::remove_all(work);
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> list{
      {"partite spheres", criterion1},
      {"doubly edge-covering spheres", criterion2},
      {"filling", criterion3},
      {"allocation", criterion4},
      {"end-to-end pipeline", criterion5},
      {"degree and connectivity properties", criterion6},
      {"lower bounds", criterion7},
      {"oracle equivalence", criterion8},
      {"CLI determinism", criterion9},
  };
  return list;
}

bool run_criterion(int n) {
  const auto& [name, fn] = criteria().at(static_cast<std::size_t>(n - 1));
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o.require(false, std::string("uncaught: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (kLimit[n] > 0) o.require(seconds < kLimit[n], "runtime " + std::to_string(seconds) + " s over the limit");
  std::ostringstream line;
  line << "criterion " << n << " (" << name << "): " << (o.pass ? "PASS" : "FAIL") << " [" << std::fixed
       << std::setprecision(2) << seconds << " s";
  if (kLimit[n] > 0) line << ", limit " << kLimit[n] << " s";
  line << "]";
  std::cout << line.str() << '\n';
  for (const auto& note : o.notes) std::cout << "  " << note << '\n';
  std::cout.flush();
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) which.push_back(std::atoi(argv[++i]));
  }
  if (which.empty())
    for (int n = 1; n <= 9; ++n) which.push_back(n);
  bool all = true;
  for (int n : which) {
    if (n < 1 || n > 9) {
      std::cerr << "unknown criterion " << n << '\n';
      return 2;
    }
    all &= run_criterion(n);
  }
  return all ? 0 : 1;
}
