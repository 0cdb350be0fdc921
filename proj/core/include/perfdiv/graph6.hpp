#ifndef PERFDIV_GRAPH6_HPP
#define PERFDIV_GRAPH6_HPP

#include <string>
#include <string_view>

#include "perfdiv/graph.hpp"

namespace perfdiv {

/// Parses one short-form graph6 line (n <= 62). Strict: rejects long-form
/// headers, out-of-range characters, truncated or over-long bit fields and
/// non-zero padding, so write(parse(line)) == line on every accepted input.
Graph parse_graph6(std::string_view line);

/// Short-form graph6 encoding of g, without a trailing newline.
std::string write_graph6(const Graph& g);

}  // namespace perfdiv

#endif
