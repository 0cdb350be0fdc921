#ifndef PERFDIV_PERFECTION_HPP
#define PERFDIV_PERFECTION_HPP

#include <optional>

#include "perfdiv/patterns.hpp"

namespace perfdiv {

enum class WitnessKind { none, odd_hole, odd_antihole };

struct PerfectionVerdict {
  bool perfect = true;
  WitnessKind kind = WitnessKind::none;
  std::optional<HoleCertificate> witness;  // validates in g (odd_hole) or in
                                           // complement(g) (odd_antihole)
};

/// Decides perfection by searching for an odd hole, then an odd antihole
/// (shortest first; hole preferred). The returned witness is re-verified.
PerfectionVerdict is_perfect(const Graph& g, int cap = kDecisionCap);

/// Independent route: true iff every induced subgraph H has chi(H) =
/// omega(H), evaluated over all 2^n subsets. Requires n <= 9.
bool is_perfect_oracle(const Graph& g);

}  // namespace perfdiv

#endif
