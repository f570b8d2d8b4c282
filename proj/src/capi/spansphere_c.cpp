#include "spansphere/spansphere.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "spansphere/allocation.hpp"
#include "spansphere/chain.hpp"
#include "spansphere/error.hpp"
#include "spansphere/extremal.hpp"
#include "spansphere/io.hpp"
#include "spansphere/spheres.hpp"

using namespace spansphere;

struct sps_hypergraph {
  Hypergraph h;
};
struct sps_complex {
  SimplicialComplex c;
};
struct sps_blowup {
  Blowup b;
};
struct sps_chain {
  ChainCertificate c;
};

namespace {

thread_local std::string last_error;

sps_status to_status(Errc code) { return static_cast<sps_status>(static_cast<int>(code) + 1); }

template <class Fn>
sps_status guard(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return SPS_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SPS_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SPS_INTERNAL_ERROR;
  }
}

sps_status invalid(const char* what) {
  last_error = std::string("InvalidArgument: ") + what;
  return SPS_INVALID_ARGUMENT;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_string(char** target, const std::string& s) {
  if (target) *target = dup(s);
}

std::string certificate_text(const SphereCertificate& cert) {
  std::ostringstream out;
  out << "level: " << sphere_level_name(cert.level) << '\n';
  out << "certified: " << (certifies_sphere(cert.level) ? "yes" : "no") << '\n';
  out << "euler: " << cert.euler << '\n';
  out << "pseudomanifold: " << (cert.pseudomanifold ? "yes" : "no") << '\n';
  out << "strongly_connected: " << (cert.strongly_connected ? "yes" : "no") << '\n';
  out << "shelling: " << (cert.shelling_order ? "found" : "none") << '\n';
  if (cert.failure_reason) out << "failure: " << *cert.failure_reason << '\n';
  return out.str();
}

std::string blocks_text(const HostInstance& h) {
  std::ostringstream out;
  for (const auto& [name, set] : h.blocks) out << name << ": " << format_set(set) << '\n';
  return out.str();
}

SphereCheckOptions check_options(uint64_t budget) {
  SphereCheckOptions o;
  if (budget) o.shelling_budget = budget;
  return o;
}

}  // namespace

extern "C" {

const char* sps_version(void) { return "1.0.0"; }

const char* sps_status_name(sps_status status) {
  if (status == SPS_OK) return "Ok";
  if (status == SPS_INVALID_ARGUMENT) return "InvalidArgument";
  if (status == SPS_INTERNAL_ERROR) return "InternalError";
  if (status > SPS_OK && status < SPS_INVALID_ARGUMENT) return errc_name(static_cast<Errc>(status - 1));
  return "Unknown";
}

const char* sps_last_error(void) { return last_error.c_str(); }

void sps_string_free(char* s) { std::free(s); }

sps_status sps_hypergraph_create(int k, uint32_t n, const uint32_t* flat_edges, size_t edge_count,
                                 sps_hypergraph** out) {
  if (!out || (edge_count && !flat_edges) || k < 1) return invalid("bad hypergraph arguments");
  return guard([&] {
    std::span<const Vertex> flat(flat_edges, edge_count * static_cast<std::size_t>(k));
    *out = new sps_hypergraph{Hypergraph::from_flat(k, n, flat)};
  });
}

sps_status sps_hypergraph_parse(const char* text, sps_hypergraph** out) {
  if (!text || !out) return invalid("null argument");
  return guard([&] { *out = new sps_hypergraph{parse_hypergraph(text)}; });
}

sps_status sps_hypergraph_load(const char* path, sps_hypergraph** out) {
  if (!path || !out) return invalid("null argument");
  return guard([&] { *out = new sps_hypergraph{parse_hypergraph(read_file(path))}; });
}

sps_status sps_hypergraph_save(const sps_hypergraph* h, const char* path, const char* comment) {
  if (!h || !path) return invalid("null argument");
  return guard([&] { write_file(path, format_hypergraph(h->h, comment ? comment : "")); });
}

sps_status sps_hypergraph_format(const sps_hypergraph* h, const char* comment, char** text) {
  if (!h || !text) return invalid("null argument");
  return guard([&] { *text = dup(format_hypergraph(h->h, comment ? comment : "")); });
}

void sps_hypergraph_free(sps_hypergraph* h) { delete h; }

sps_status sps_hypergraph_info(const sps_hypergraph* h, int* k, uint32_t* n, size_t* edge_count) {
  if (!h) return invalid("null hypergraph");
  if (k) *k = h->h.uniformity();
  if (n) *n = h->h.order();
  if (edge_count) *edge_count = h->h.edge_count();
  return SPS_OK;
}

sps_status sps_hypergraph_edge(const sps_hypergraph* h, size_t index, uint32_t* vertices) {
  if (!h || !vertices) return invalid("null argument");
  if (index >= h->h.edge_count()) return invalid("edge index out of range");
  auto e = h->h.edge(index);
  std::copy(e.begin(), e.end(), vertices);
  return SPS_OK;
}

sps_status sps_hypergraph_min_codegree(const sps_hypergraph* h, uint64_t* out) {
  if (!h || !out) return invalid("null argument");
  return guard([&] { *out = min_supported_codegree(h->h); });
}

sps_status sps_hypergraph_min_d_degree(const sps_hypergraph* h, int d, uint64_t* out) {
  if (!h || !out) return invalid("null argument");
  return guard([&] { *out = min_supported_d_degree(h->h, d).delta_star_d; });
}

sps_status sps_hypergraph_tight_component_count(const sps_hypergraph* h, size_t* out) {
  if (!h || !out) return invalid("null argument");
  return guard([&] { *out = tight_components(h->h).components.size(); });
}

sps_status sps_hypergraph_stats(const sps_hypergraph* h, char** report) {
  if (!h || !report) return invalid("null argument");
  return guard([&] {
    const Hypergraph& g = h->h;
    std::ostringstream out;
    out << "k: " << g.uniformity() << '\n';
    out << "n: " << g.order() << '\n';
    out << "edges: " << g.edge_count() << '\n';
    out << "delta_star: " << min_supported_codegree(g) << '\n';
    for (int d = 1; d < g.uniformity(); ++d)
      out << "delta_star_" << d << ": " << min_supported_d_degree(g, d).delta_star_d << '\n';
    auto comps = tight_components(g);
    out << "isolated_vertices: " << comps.isolated.size() << '\n';
    out << "tight_components: " << comps.components.size() << '\n';
    *report = dup(out.str());
  });
}

sps_status sps_lower_bound_codegree(int k, uint32_t n, sps_hypergraph** out, char** blocks) {
  if (!out) return invalid("null argument");
  return guard([&] {
    HostInstance h = lower_bound_codegree(k, n);
    set_string(blocks, blocks_text(h));
    *out = new sps_hypergraph{std::move(*h.host)};
  });
}

sps_status sps_lower_bound_tight_cycle(int k, uint32_t n, sps_hypergraph** out, char** blocks) {
  if (!out) return invalid("null argument");
  return guard([&] {
    HostInstance h = lower_bound_tight_cycle(k, n);
    set_string(blocks, blocks_text(h));
    *out = new sps_hypergraph{std::move(*h.host)};
  });
}

sps_status sps_lower_bound_vertex_degree(uint32_t n, sps_hypergraph** out, char** blocks) {
  if (!out) return invalid("null argument");
  return guard([&] {
    HostInstance h = lower_bound_vertex_degree(n);
    set_string(blocks, blocks_text(h));
    *out = new sps_hypergraph{std::move(*h.host)};
  });
}

sps_status sps_complex_parse(const char* text, sps_complex** out) {
  if (!text || !out) return invalid("null argument");
  return guard([&] { *out = new sps_complex{parse_complex(text)}; });
}

sps_status sps_complex_load(const char* path, sps_complex** out) {
  if (!path || !out) return invalid("null argument");
  return guard([&] { *out = new sps_complex{parse_complex(read_file(path))}; });
}

sps_status sps_complex_save(const sps_complex* c, const char* path, const char* comment) {
  if (!c || !path) return invalid("null argument");
  return guard([&] { write_file(path, format_complex(c->c, comment ? comment : "")); });
}

sps_status sps_complex_format(const sps_complex* c, const char* comment, char** text) {
  if (!c || !text) return invalid("null argument");
  return guard([&] { *text = dup(format_complex(c->c, comment ? comment : "")); });
}

void sps_complex_free(sps_complex* c) { delete c; }

sps_status sps_complex_info(const sps_complex* c, int* dim, size_t* facet_count, size_t* vertex_count) {
  if (!c) return invalid("null complex");
  if (dim) *dim = c->c.dim();
  if (facet_count) *facet_count = c->c.facet_count();
  if (vertex_count) *vertex_count = c->c.vertices().size();
  return SPS_OK;
}

sps_status sps_complex_verify(const sps_complex* c, uint64_t shelling_budget, char** report, int* certified) {
  if (!c) return invalid("null complex");
  return guard([&] {
    SphereCertificate cert = verify_sphere(c->c, check_options(shelling_budget));
    if (certified) *certified = certifies_sphere(cert.level) ? 1 : 0;
    set_string(report, certificate_text(cert));
  });
}

sps_status sps_complex_is_spanning(const sps_complex* c, const sps_hypergraph* host, int* spanning) {
  if (!c || !host || !spanning) return invalid("null argument");
  return guard([&] { *spanning = is_spanning_copy(c->c, host->h) ? 1 : 0; });
}

sps_status sps_sphere_partite(int k, int ell, char variant, sps_complex** out, char** info) {
  if (!out) return invalid("null argument");
  if (variant != 'a' && variant != 'b') return invalid("variant must be 'a' or 'b'");
  return guard([&] {
    PartiteSphere ps = variant == 'a' ? partite_sphere_a(k, ell) : partite_sphere_b(k, ell);
    std::ostringstream text;
    for (std::size_t i = 0; i < ps.parts.size(); ++i) text << "part " << i << ": " << format_set(ps.parts[i]) << '\n';
    text << "tracked: " << format_set(make_set(ps.tracked)) << '\n';
    set_string(info, text.str());
    *out = new sps_complex{std::move(ps.sphere)};
  });
}

sps_status sps_sphere_path(const char* kind, int k, int ell, sps_complex** out, char** manifest) {
  if (!kind || !out) return invalid("null argument");
  const std::string which(kind);
  if (which != "thin" && which != "blowup") return invalid("kind must be 'thin' or 'blowup'");
  return guard([&] {
    DoublyCoveringSphere d =
        which == "thin" ? thin_path_sphere(k) : tight_path_blowup_sphere(k, static_cast<std::size_t>(ell));
    set_string(manifest, family_manifest(d));
    *out = new sps_complex{std::move(d.sphere)};
  });
}

sps_status sps_blowup_create(const sps_hypergraph* base, const char* parts_text, sps_blowup** out) {
  if (!base || !parts_text || !out) return invalid("null argument");
  return guard([&] { *out = new sps_blowup{Blowup(base->h, parse_parts(parts_text))}; });
}

void sps_blowup_free(sps_blowup* b) { delete b; }

sps_status sps_blowup_minimum_part_size(const sps_blowup* b, size_t* out) {
  if (!b || !out) return invalid("null argument");
  return guard([&] { *out = minimum_part_size(b->b.base()).minimum; });
}

sps_status sps_allocate(const sps_blowup* b, const uint32_t* f1, const uint32_t* f2, int allow_overlap,
                        uint64_t shelling_budget, sps_complex** out, char** report) {
  if (!b || !f1 || !f2 || !out) return invalid("null argument");
  return guard([&] {
    const std::size_t k = static_cast<std::size_t>(b->b.uniformity());
    AllocateOptions o;
    o.allow_overlap = allow_overlap != 0;
    o.sphere = check_options(shelling_budget);
    AllocationResult r = allocate(b->b, std::span<const Vertex>(f1, k), std::span<const Vertex>(f2, k), o);
    const bool ok = r.report.spanning && r.report.f1_facet && r.report.f2_facet && r.report.certificate &&
                    certifies_sphere(r.report.certificate->level);
    set_string(report, r.report.to_text() + "result: " + (ok ? "PASS" : "FAIL") + "\n");
    *out = new sps_complex{std::move(r.sphere)};
  });
}

sps_status sps_chain_generate(int k, uint32_t s, size_t links, size_t part_size, uint64_t seed, int singletons,
                              sps_chain** out) {
  if (!out) return invalid("null argument");
  return guard([&] {
    ChainGenOptions o;
    o.singletons = singletons != 0;
    HostInstance h = generate_chain_host(k, s, links, part_size, seed, o);
    *out = new sps_chain{std::move(*h.certificate)};
  });
}

sps_status sps_chain_parse(const char* text, sps_chain** out) {
  if (!text || !out) return invalid("null argument");
  return guard([&] { *out = new sps_chain{parse_chain(text)}; });
}

sps_status sps_chain_load(const char* path, sps_chain** out) {
  if (!path || !out) return invalid("null argument");
  return guard([&] { *out = new sps_chain{parse_chain(read_file(path))}; });
}

sps_status sps_chain_save(const sps_chain* c, const char* path) {
  if (!c || !path) return invalid("null argument");
  return guard([&] { write_file(path, format_chain(c->c)); });
}

sps_status sps_chain_format(const sps_chain* c, char** text) {
  if (!c || !text) return invalid("null argument");
  return guard([&] { *text = dup(format_chain(c->c)); });
}

void sps_chain_free(sps_chain* c) { delete c; }

sps_status sps_chain_verify(const sps_chain* c, const sps_hypergraph* host, char** report, int* passed) {
  if (!c) return invalid("null chain");
  return guard([&] {
    ChainReport r = host ? verify_chain(host->h, c->c) : verify_chain(c->c);
    if (passed) *passed = r.passed() ? 1 : 0;
    set_string(report, r.to_text());
  });
}

sps_status sps_chain_host(const sps_chain* c, uint64_t max_edges, sps_hypergraph** out) {
  if (!c || !out) return invalid("null argument");
  return guard([&] { *out = new sps_hypergraph{ChainHost(c->c).materialize(max_edges)}; });
}

sps_status sps_chain_host_edge_count(const sps_chain* c, uint64_t* out) {
  if (!c || !out) return invalid("null argument");
  return guard([&] { *out = ChainHost(c->c).edge_count(); });
}

sps_status sps_chain_solve(const sps_chain* c, unsigned jobs, uint64_t shelling_budget, sps_complex** out,
                           char** report, int* passed) {
  if (!c || !out) return invalid("null argument");
  return guard([&] {
    SpanningOptions o;
    o.jobs = jobs;
    o.sphere = check_options(shelling_budget);
    SpanningResult r = spanning_sphere(c->c, o);
    std::ostringstream text;
    text << "links: " << r.links.size() << '\n';
    for (std::size_t i = 0; i < r.links.size(); ++i) {
      const auto& l = r.links[i];
      text << "link " << i << ": f1 " << format_set(l.f1) << " f2 " << format_set(l.f2)
           << " overlap " << (l.overlap ? "yes" : "no") << " singleton "
           << (l.report.singleton ? std::to_string(*l.report.singleton) : std::string("none")) << " walk "
           << l.report.walk_kind << ' ' << l.report.walk_order << " parity " << parity_fix_name(l.report.parity)
           << " vertices " << l.report.vertices << " facets " << l.report.facets << '\n';
    }
    text << "sphere_vertices: " << r.sphere.vertices().size() << '\n';
    text << "sphere_facets: " << r.sphere.facet_count() << '\n';
    text << "spanning: " << (r.spanning ? "yes" : "no") << '\n';
    const bool certified = r.certificate && certifies_sphere(r.certificate->level);
    if (r.certificate) text << certificate_text(*r.certificate);
    const bool ok = r.spanning && certified;
    text << "result: " << (ok ? "PASS" : "FAIL") << '\n';
    if (passed) *passed = ok ? 1 : 0;
    set_string(report, text.str());
    *out = new sps_complex{std::move(r.sphere)};
  });
}

sps_status sps_property_graph(const sps_hypergraph* h, const char* epsilon, int s, uint64_t budget,
                              sps_hypergraph** out) {
  if (!h || !epsilon || !out) return invalid("null argument");
  return guard([&] {
    PropertyPredicate p = dense_property(parse_rational(epsilon), h->h.uniformity());
    *out = new sps_hypergraph{property_graph(h->h, p, s, budget ? budget : kDefaultEnumerationBudget)};
  });
}

sps_status sps_sample_property_rate(const sps_hypergraph* h, const char* epsilon, int s, uint64_t trials,
                                    uint64_t seed, char** report) {
  if (!h || !epsilon || !report) return invalid("null argument");
  return guard([&] {
    RateEstimate r = sample_property_rate(h->h, parse_rational(epsilon), s, trials, seed);
    std::ostringstream text;
    text.precision(6);
    text << std::fixed;
    text << "trials: " << r.trials << '\n';
    text << "hits: " << r.hits << '\n';
    text << "rate: " << format_rational(r.rate) << '\n';
    text << "wilson95: " << r.lower << ' ' << r.upper << '\n';
    *report = dup(text.str());
  });
}

sps_status sps_find_partite_blowup(const sps_hypergraph* p, size_t b, uint64_t budget, char** parts_text,
                                   int* found) {
  if (!p || !parts_text || !found) return invalid("null argument");
  return guard([&] {
    auto r = find_partite_blowup(p->h, b, budget ? budget : kDefaultEnumerationBudget);
    *found = r ? 1 : 0;
    *parts_text = r ? dup(format_parts(*r)) : nullptr;
  });
}

sps_status sps_pigeonhole_blowup(const sps_hypergraph* host, const char* parts_text,
                                 const sps_hypergraph* const* family, size_t family_count, size_t b, uint64_t budget,
                                 char** report, int* found) {
  if (!host || !parts_text || (family_count && !family) || !report || !found) return invalid("null argument");
  return guard([&] {
    std::vector<Hypergraph> members;
    for (std::size_t i = 0; i < family_count; ++i) members.push_back(family[i]->h);
    auto r = pigeonhole_blowup(host->h, parse_parts(parts_text), members, b,
                               budget ? budget : kDefaultEnumerationBudget);
    *found = r ? 1 : 0;
    std::ostringstream text;
    if (r) {
      text << "member: " << r->member << '\n';
      text << "labeling:";
      for (Vertex v : r->labeling) text << ' ' << v;
      text << '\n';
      text << "colours: " << r->colours << '\n';
      text << "colour_class: " << r->colour_class << '\n';
      for (std::size_t i = 0; i < r->parts.size(); ++i) text << "part " << i << ": " << format_set(r->parts[i]) << '\n';
    } else {
      text << "member: none\n";
    }
    *report = dup(text.str());
  });
}

}  // extern "C"
