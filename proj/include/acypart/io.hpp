// io.hpp - hypergraph file formats
#pragma once

#include <stdexcept>
#include <string>

#include "acypart/hypergraph.hpp"

namespace acypart {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structured format: {"n":6,"r":3,"edges":[[1,2,6],[1,3,5],[2,3,4]]}
// Plain text: first line "n r", then one edge per line, space-separated.
// parse_hypergraph sniffs the format from the first non-space byte.
Hypergraph parse_hypergraph(const std::string& text);
Hypergraph parse_hypergraph_json(const std::string& text);
Hypergraph parse_hypergraph_txt(const std::string& text);

// Byte-stable serializers: edges in lexicographic order, fixed formatting.
std::string serialize_json(const Hypergraph& h);
std::string serialize_txt(const Hypergraph& h);

}  // namespace acypart
