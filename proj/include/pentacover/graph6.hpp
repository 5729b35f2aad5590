#pragma once

// graph6 / sparse6 codecs, bit-exact per the nauty format definition:
// 6-bit big-endian groups offset by 63 into printable bytes, N(n) size
// header, ':' prefix for sparse6.  Reader and writer round-trip.

#include <string>

#include "pentacover/graph.hpp"

namespace pentacover {

struct format_error : graph_error {
    explicit format_error(const std::string& what) : graph_error(what) {}
};

std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

std::string to_sparse6(const Graph& g);
Graph from_sparse6(const std::string& s);

/// Dispatch on the leading byte (':' for sparse6); tolerates the
/// optional ">>graph6<<" / ">>sparse6<<" marker and trailing newline.
Graph read_graph_string(const std::string& s);
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g, const std::string& format);

} // namespace pentacover
