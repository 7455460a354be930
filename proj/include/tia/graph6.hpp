#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tia/graph.hpp"

// graph6 / sparse6 codecs (bit-compatible with the published format
// description) and a plain edge-list text fallback.

namespace tia {

std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& line);  // accepts optional >>graph6<< header

std::string sparse6_encode(const Graph& g);
Graph sparse6_decode(const std::string& line);

// decodes either codec by sniffing the leading ':'
Graph decode_graph_line(const std::string& line);

// Edge-list text: '#' comments, optional "n <count>" line, then "u v" lines
// (0-indexed). Whole text describes one graph.
Graph edge_list_decode(const std::string& text);
std::string edge_list_encode(const Graph& g);

// Reads a whole stream: edge-list files yield one graph; otherwise one
// graph6/sparse6 line per graph. Throws FormatError with the line number.
std::vector<Graph> read_graphs(std::istream& in);
std::vector<Graph> read_graphs_file(const std::string& path);

}  // namespace tia
