#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rcn/tables.hpp"

namespace rcn {

/// A block of the 5- or 7-limit pitch-class lattice: one node per
/// (fifth, third, seventh) exponent tuple, edges along the three prime axes.
struct LatticeSpec {
  int prime_limit = 5;  // 5 or 7
  int fifth_lo = -3, fifth_hi = 3;
  int third_lo = -2, third_hi = 2;
  int seventh_lo = 0, seventh_hi = 0;  // must stay {0} in the 5-limit
  Algorithm algo = Algorithm::DR;
};

struct LatticeNode {
  int fifth, third, seventh;
  std::string label;
};

struct LatticeEdge {
  std::size_t from, to;
  int axis;  // 3, 5 or 7
};

struct Lattice {
  LatticeSpec spec;
  std::vector<LatticeNode> nodes;
  std::vector<LatticeEdge> edges;
};

Lattice build_lattice(const LatticeSpec& spec);

/// Pitch-class label with 5-powers as '/"/. marks and any leftover integer
/// comma as ~n; other commas stay bracketed. Round-trips through the parser.
std::string lattice_label(const RcnPitch& pitch_class);

std::string render_lattice(const Lattice& lattice, TableFormat format);
std::string lattice_dot(const Lattice& lattice);

}  // namespace rcn
