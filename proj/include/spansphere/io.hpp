#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "spansphere/chain.hpp"
#include "spansphere/complex.hpp"
#include "spansphere/hypergraph.hpp"

namespace spansphere {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// .hg: header "k n", one edge per line, '#' comments, trailing newline required.
Hypergraph parse_hypergraph(std::string_view text);
std::string format_hypergraph(const Hypergraph& h, std::string_view comment = {});

// .sc: header "d n", one facet of d+1 vertices per line.
SimplicialComplex parse_complex(std::string_view text);
std::string format_complex(const SimplicialComplex& k, std::string_view comment = {});

// One line per base vertex with its host vertices.
std::vector<VertexSet> parse_parts(std::string_view text);
std::string format_parts(const std::vector<VertexSet>& parts);

// .chain: PARAMS, LINKS, then BASE / PARTS per link, then SHARED.
ChainCertificate parse_chain(std::string_view text);
std::string format_chain(const ChainCertificate& c);

}  // namespace spansphere
