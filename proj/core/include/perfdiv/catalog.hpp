#ifndef PERFDIV_CATALOG_HPP
#define PERFDIV_CATALOG_HPP

#include <string>
#include <vector>

#include "perfdiv/graph.hpp"

namespace perfdiv {

/// Canonical construction for a catalog key, with fixed vertex numbering
/// (documented per constructor in catalog.cpp). Fixed keys: p5, c5, k23,
/// fourK1, bull, fork, banner, dart, figure1, grotzsch, petersen.
/// Parametric keys: complete(k), path(k), cycle(k).
/// Throws std::invalid_argument on unknown keys.
Graph named(const std::string& key);

/// The fixed (non-parametric) catalog keys, in catalog order.
const std::vector<std::string>& catalog_keys();

}  // namespace perfdiv

#endif
