#ifndef PERFDIV_ERRORS_HPP
#define PERFDIV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace perfdiv {

// Hard limits. Graphs are capped at 62 vertices by the graph6 short form;
// decision procedures with exponential cost refuse inputs beyond a cap
// instead of running unbounded.
inline constexpr int kMaxVertices = 62;

// Default cap for exponential decisions (perfection, chromatic number,
// perfect/k-divisibility, MNPD).
inline constexpr int kDecisionCap = 16;

// A single good-partition search is allowed a little more room.
inline constexpr int kPartitionSearchCap = 22;

class CapExceeded : public std::runtime_error {
public:
  CapExceeded(const std::string& op, int n, int cap)
      : std::runtime_error(op + ": graph has " + std::to_string(n) +
                           " vertices, cap is " + std::to_string(cap)),
        n(n), cap(cap) {}
  int n;
  int cap;
};

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace perfdiv

#endif
