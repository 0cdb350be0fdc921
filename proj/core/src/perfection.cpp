#include "perfdiv/perfection.hpp"

#include <stdexcept>

#include "subset_dp.hpp"

namespace perfdiv {

PerfectionVerdict is_perfect(const Graph& g, int cap) {
  if (g.size() > cap) throw CapExceeded("is_perfect", g.size(), cap);
  if (auto hole = find_hole(g, Parity::odd, 5)) {
    if (!hole->valid_for(g)) throw std::logic_error("odd hole failed re-check");
    return {false, WitnessKind::odd_hole, std::move(hole)};
  }
  if (auto anti = find_odd_antihole(g, 5)) {
    if (!anti->valid_for(complement(g)))
      throw std::logic_error("odd antihole failed re-check");
    return {false, WitnessKind::odd_antihole, std::move(anti)};
  }
  return {};
}

bool is_perfect_oracle(const Graph& g) {
  if (g.size() > 9) throw std::invalid_argument("is_perfect_oracle: needs n <= 9");
  auto t = detail::SubsetTables::base(g);
  t.build_coloring();
  for (std::uint32_t s = 0; s <= t.full; ++s) {
    if (t.chi[s] != t.omega[s]) return false;
    if (s == t.full) break;
  }
  return true;
}

}  // namespace perfdiv
