// rcn: command-line front end for Rational Comma Notation.
// Data goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 2 parse/validation error, 1 internal error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "rcn/lattice.hpp"
#include "rcn/tables.hpp"

namespace {

struct RangeArg {
  int lo = 0, hi = 0;
};

RangeArg parse_range(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos)
    throw std::invalid_argument("expected a range LO..HI, got '" + text + "'");
  RangeArg r;
  r.lo = std::stoi(text.substr(0, sep));
  r.hi = std::stoi(text.substr(sep + 2));
  return r;
}

rcn::PrintStyle parse_style(const std::string& text) {
  if (text == "canonical") return rcn::PrintStyle::Canonical;
  if (text == "shorthand5") return rcn::PrintStyle::Shorthand5;
  if (text == "tilde") return rcn::PrintStyle::Tilde;
  throw std::invalid_argument("unknown style '" + text + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational Comma Notation for free Just Intonation"};
  app.require_subcommand(1);

  std::string algo_text = "dr", from_text = "dr", to_text = "dr";
  std::string format_text = "csv", style_text = "canonical", which;
  std::string ratio_text, notation_text;
  std::string fifths_text, thirds_text, sevenths_text;
  std::uint64_t prime = 0, max_p = 0, p_low = 0, p_high = 0, limit = 0;
  int count = 9, b_min = 0, b_max = 0, prime_limit = 5;
  std::uint64_t scan_p = 1;

  auto* c_comma = app.add_subcommand("comma", "Show the prime comma assigned to a prime");
  c_comma->add_option("prime", prime, "prime number >= 5")->required();
  c_comma->add_option("--algo", algo_text, "dr, sag or kg2");

  auto* c_notate = app.add_subcommand("notate", "Notation for a positive rational frequency");
  c_notate->add_option("ratio", ratio_text, "frequency as NUM/DEN")->required();
  c_notate->add_option("--algo", algo_text, "dr, sag or kg2");
  c_notate->add_option("--style", style_text, "canonical, shorthand5 or tilde");

  auto* c_freq = app.add_subcommand("freq", "Frequency of a notation");
  c_freq->add_option("notation", notation_text, "e.g. B[5/7]_3")->required();
  c_freq->add_option("--algo", algo_text, "dr, sag or kg2");

  auto* c_translate = app.add_subcommand("translate", "Re-notate under another algorithm");
  c_translate->add_option("notation", notation_text, "e.g. F[11]_4")->required();
  c_translate->add_option("--from", from_text, "source algorithm")->required();
  c_translate->add_option("--to", to_text, "target algorithm")->required();
  c_translate->add_option("--style", style_text, "canonical, shorthand5 or tilde");

  auto* c_table = app.add_subcommand("table", "Reference tables");
  c_table->add_option("which", which, "commas, b, firstlast, largest or pyth")
      ->required()
      ->check(CLI::IsMember({"commas", "b", "firstlast", "largest", "pyth"}));
  c_table->add_option("--max-p", max_p, "largest prime to include");
  c_table->add_option("--count", count, "rows for 'largest' (default 9)");
  c_table->add_option("--algo", algo_text, "dr, sag or kg2");
  c_table->add_option("--format", format_text, "csv, json or markdown");

  auto* c_dist = app.add_subcommand("dist", "ln(p)/p-weighted distribution of b over a prime range");
  c_dist->add_option("--from", p_low, "lower prime bound")->required();
  c_dist->add_option("--to", p_high, "upper prime bound")->required();
  c_dist->add_option("--algo", algo_text, "dr, sag or kg2");
  c_dist->add_option("--format", format_text, "csv, json or markdown");

  auto* c_scan = app.add_subcommand("scan", "Candidate commas of one prime across a b range");
  c_scan->add_option("--p", scan_p, "prime >= 5, or 1 for the dummy series")->required();
  c_scan->add_option("--b-min", b_min, "lowest 3-exponent")->required();
  c_scan->add_option("--b-max", b_max, "highest 3-exponent")->required();
  c_scan->add_option("--format", format_text, "csv, json or markdown");

  auto* c_findpb = app.add_subcommand("find-pb", "Smallest prime with 13+ primary-range candidates");
  c_findpb->add_option("--limit", limit, "search primes up to this bound")->required();

  auto* c_lattice = app.add_subcommand("lattice", "Pitch-class lattice export");
  c_lattice->add_option("--limit", prime_limit, "5 or 7");
  c_lattice->add_option("--fifths", fifths_text, "3-exponent range LO..HI")->required();
  c_lattice->add_option("--thirds", thirds_text, "5-exponent range LO..HI")->required();
  c_lattice->add_option("--sevenths", sevenths_text, "7-exponent range LO..HI (7-limit only)");
  c_lattice->add_option("--algo", algo_text, "dr, sag or kg2");
  c_lattice->add_option("--format", format_text, "csv, json, markdown or dot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_comma) {
      const rcn::PrimeComma c = rcn::prime_comma(prime, rcn::parse_algorithm(algo_text));
      std::cout << "[" << c.p << "] = " << c.value.str() << " (" << rcn::fixed_decimals(c.cents, 2)
                << " cents)  a=" << c.a << " b=" << c.b << "  label=" << rcn::label_string(c.label)
                << "[" << c.p << "]"
                << "  AO=" << rcn::fixed_decimals(c.ao, 3)
                << " LCY=" << rcn::fixed_decimals(c.lcy, 3)
                << " CM=" << rcn::fixed_decimals(c.cm, 3)
                << "  algo=" << rcn::algorithm_name(c.algorithm) << "\n";
    } else if (*c_notate) {
      const rcn::RcnPitch p = rcn::notate(rcn::Rational::parse(ratio_text),
                                          rcn::parse_algorithm(algo_text));
      std::cout << rcn::print(p, parse_style(style_text)) << "\n";
    } else if (*c_freq) {
      const rcn::RcnPitch p = rcn::parse(notation_text);
      std::cout << rcn::frequency(p, rcn::parse_algorithm(algo_text)).str() << "\n";
    } else if (*c_translate) {
      const rcn::RcnPitch p = rcn::translate(rcn::parse(notation_text),
                                             rcn::parse_algorithm(from_text),
                                             rcn::parse_algorithm(to_text));
      std::cout << rcn::print(p, parse_style(style_text)) << "\n";
    } else if (*c_table) {
      const rcn::Algorithm algo = rcn::parse_algorithm(algo_text);
      const rcn::TableFormat format = rcn::parse_table_format(format_text);
      if (which == "pyth") {
        const rcn::PythTables t = rcn::pyth_tables();
        if (format == rcn::TableFormat::JSON) {
          std::cout << "{\n\"octave4\": " << rcn::render_table(t.octave4, format)
                    << ",\n\"in_octave\": " << rcn::render_table(t.in_octave, format)
                    << ",\n\"alt_names\": " << rcn::render_table(t.alt_names, format)
                    << ",\n\"powers_of_three\": " << rcn::render_table(t.powers_of_three, format)
                    << "}\n";
        } else {
          std::cout << "# octave4\n" << rcn::render_table(t.octave4, format) << "\n"
                    << "# in_octave\n" << rcn::render_table(t.in_octave, format) << "\n"
                    << "# alt_names\n" << rcn::render_table(t.alt_names, format) << "\n"
                    << "# powers_of_three\n" << rcn::render_table(t.powers_of_three, format);
        }
      } else {
        if (max_p == 0)
          throw std::invalid_argument("--max-p is required for this table");
        rcn::TableDoc doc;
        if (which == "commas") doc = rcn::prime_comma_table(max_p, algo);
        else if (which == "b") doc = rcn::b_table(max_p, algo);
        else if (which == "firstlast") doc = rcn::first_last_prime_table(max_p, algo);
        else doc = rcn::largest_comma_table(max_p, count, algo);
        std::cout << rcn::render_table(doc, format);
      }
    } else if (*c_dist) {
      std::cout << rcn::render_table(
          rcn::b_distribution_table(p_low, p_high, rcn::parse_algorithm(algo_text)),
          rcn::parse_table_format(format_text));
    } else if (*c_scan) {
      std::cout << rcn::render_table(rcn::candidate_scan_table(scan_p, b_min, b_max),
                                     rcn::parse_table_format(format_text));
    } else if (*c_findpb) {
      if (auto p = rcn::find_pb(limit))
        std::cout << *p << "\n";
      else
        std::cout << "not found below " << limit << "\n";
    } else if (*c_lattice) {
      rcn::LatticeSpec spec;
      spec.prime_limit = prime_limit;
      spec.algo = rcn::parse_algorithm(algo_text);
      const RangeArg f = parse_range(fifths_text), t = parse_range(thirds_text);
      spec.fifth_lo = f.lo;
      spec.fifth_hi = f.hi;
      spec.third_lo = t.lo;
      spec.third_hi = t.hi;
      if (!sevenths_text.empty()) {
        const RangeArg s = parse_range(sevenths_text);
        spec.seventh_lo = s.lo;
        spec.seventh_hi = s.hi;
      }
      const rcn::Lattice lat = rcn::build_lattice(spec);
      if (format_text == "dot")
        std::cout << rcn::lattice_dot(lat);
      else
        std::cout << rcn::render_lattice(lat, rcn::parse_table_format(format_text));
    }
    return 0;
  } catch (const rcn::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
