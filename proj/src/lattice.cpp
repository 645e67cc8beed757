#include "rcn/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace rcn {

namespace {

void validate(const LatticeSpec& spec) {
  if (spec.prime_limit != 5 && spec.prime_limit != 7)
    throw std::invalid_argument("lattice: prime limit must be 5 or 7");
  if (spec.fifth_lo > spec.fifth_hi || spec.third_lo > spec.third_hi ||
      spec.seventh_lo > spec.seventh_hi)
    throw std::invalid_argument("lattice: empty axis range");
  if (spec.prime_limit == 5 && (spec.seventh_lo != 0 || spec.seventh_hi != 0))
    throw std::invalid_argument("lattice: seventh axis requires prime limit 7");
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string lattice_label(const RcnPitch& pitch_class) {
  std::string out = label_string(pitch_class.label);
  BigInt u = pitch_class.comma_num, v = pitch_class.comma_den;
  int up = 0, down = 0;
  while (mpz_divisible_ui_p(u.get_mpz_t(), 5)) {
    mpz_divexact_ui(u.get_mpz_t(), u.get_mpz_t(), 5);
    ++up;
  }
  while (mpz_divisible_ui_p(v.get_mpz_t(), 5)) {
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 5);
    ++down;
  }
  if (up > 0)
    out += std::string(static_cast<std::size_t>(up / 2), '"') +
           std::string(static_cast<std::size_t>(up % 2), '\'');
  if (down > 0) out += std::string(static_cast<std::size_t>(down), '.');
  if (v != 1) {
    out += "[" + u.get_str() + "/" + v.get_str() + "]";
  } else if (u != 1) {
    out += "~" + u.get_str();
  }
  return out;
}

Lattice build_lattice(const LatticeSpec& spec) {
  validate(spec);
  Lattice lat;
  lat.spec = spec;

  const int nf = spec.fifth_hi - spec.fifth_lo + 1;
  const int nt = spec.third_hi - spec.third_lo + 1;
  auto index = [&](int f, int t, int s) {
    return static_cast<std::size_t>(((s - spec.seventh_lo) * nt + (t - spec.third_lo)) * nf +
                                    (f - spec.fifth_lo));
  };

  for (int s = spec.seventh_lo; s <= spec.seventh_hi; ++s)
    for (int t = spec.third_lo; t <= spec.third_hi; ++t)
      for (int f = spec.fifth_lo; f <= spec.fifth_hi; ++f) {
        Monzo pc = Monzo::prime_power(3, f) * Monzo::prime_power(5, t) *
                   Monzo::prime_power(7, s);
        lat.nodes.push_back({f, t, s, lattice_label(notate_pitch_class(pc, spec.algo))});
      }

  for (int s = spec.seventh_lo; s <= spec.seventh_hi; ++s)
    for (int t = spec.third_lo; t <= spec.third_hi; ++t)
      for (int f = spec.fifth_lo; f <= spec.fifth_hi; ++f) {
        if (f < spec.fifth_hi) lat.edges.push_back({index(f, t, s), index(f + 1, t, s), 3});
        if (t < spec.third_hi) lat.edges.push_back({index(f, t, s), index(f, t + 1, s), 5});
        if (s < spec.seventh_hi) lat.edges.push_back({index(f, t, s), index(f, t, s + 1), 7});
      }
  return lat;
}

std::string render_lattice(const Lattice& lattice, TableFormat format) {
  TableDoc t;
  t.columns = {{"fifth", true}, {"third", true}, {"seventh", true}, {"label", false}};
  for (const LatticeNode& n : lattice.nodes)
    t.rows.push_back({std::to_string(n.fifth), std::to_string(n.third),
                      std::to_string(n.seventh), n.label});
  return render_table(t, format);
}

std::string lattice_dot(const Lattice& lattice) {
  std::ostringstream os;
  os << "graph lattice {\n";
  os << "  layout=neato;\n";
  os << "  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    const LatticeNode& n = lattice.nodes[i];
    // thirds run up-right, sevenths offset the layer diagonally
    const double x = n.fifth + 0.5 * n.third + 0.3 * n.seventh;
    const double y = n.third + 0.3 * n.seventh;
    os << "  n" << i << " [label=\"" << dot_escape(n.label) << "\", pos=\""
       << fixed_decimals(x, 3) << "," << fixed_decimals(y, 3) << "!\"];\n";
  }
  for (const LatticeEdge& e : lattice.edges) {
    os << "  n" << e.from << " -- n" << e.to;
    if (e.axis == 5)
      os << " [style=dashed]";
    else if (e.axis == 7)
      os << " [style=dotted]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace rcn
