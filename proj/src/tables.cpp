#include "rcn/tables.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "rcn/primes.hpp"

namespace rcn {

TableFormat parse_table_format(std::string_view text) {
  std::string t;
  for (char ch : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (t == "csv") return TableFormat::CSV;
  if (t == "json") return TableFormat::JSON;
  if (t == "md" || t == "markdown") return TableFormat::Markdown;
  throw std::invalid_argument("unknown table format '" + std::string(text) + "'");
}

std::string fixed_decimals(double x, int places) {
  static constexpr long long kPow10[] = {1,        10,        100,        1000,
                                         10000,    100000,    1000000,    10000000,
                                         100000000, 1000000000, 10000000000LL, 100000000000LL,
                                         1000000000000LL};
  if (places < 0 || places > 12) throw std::invalid_argument("fixed_decimals: places out of range");
  const long long scale = kPow10[places];
  const long long r = std::llround(x * static_cast<double>(scale));
  const std::string sign = r < 0 ? "-" : "";
  const unsigned long long mag =
      r < 0 ? -static_cast<unsigned long long>(r) : static_cast<unsigned long long>(r);
  const unsigned long long whole = mag / static_cast<unsigned long long>(scale);
  if (places == 0) return sign + std::to_string(whole);
  std::string frac = std::to_string(mag % static_cast<unsigned long long>(scale));
  frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  return sign + std::to_string(whole) + "." + frac;
}

namespace {

nlohmann::ordered_json json_cell(const std::string& cell, bool numeric) {
  if (numeric && !cell.empty()) {
    errno = 0;
    char* end = nullptr;
    const double d = std::strtod(cell.c_str(), &end);
    if (end && *end == '\0' && errno == 0) {
      if (cell.find('.') == std::string::npos &&
          d >= -9007199254740992.0 && d <= 9007199254740992.0)
        return static_cast<long long>(d);
      return d;
    }
  }
  return cell;
}

std::string render_csv(const TableDoc& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    os << (i ? "," : "") << t.columns[i].name;
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << "\n";
  }
  return os.str();
}

std::string render_markdown(const TableDoc& t) {
  std::ostringstream os;
  os << "|";
  for (const auto& c : t.columns) os << " " << c.name << " |";
  os << "\n|";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << " --- |";
  os << "\n";
  for (const auto& row : t.rows) {
    os << "|";
    for (const auto& cell : row) os << " " << cell << " |";
    os << "\n";
  }
  return os.str();
}

std::string render_json(const TableDoc& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      obj[t.columns[i].name] = json_cell(row[i], t.columns[i].numeric);
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::vector<std::uint64_t> comma_primes(std::uint64_t max_p) {
  std::vector<std::uint64_t> ps = primes_up_to(max_p);
  std::erase_if(ps, [](std::uint64_t p) { return p < 5; });
  return ps;
}

std::string pyth_note_string(const PythNote& n) {
  return label_string(n.label) + "_" + std::to_string(n.octave);
}

}  // namespace

std::string render_table(const TableDoc& table, TableFormat format) {
  switch (format) {
    case TableFormat::CSV: return render_csv(table);
    case TableFormat::JSON: return render_json(table);
    case TableFormat::Markdown: return render_markdown(table);
  }
  throw std::logic_error("render_table: bad format");
}

TableDoc prime_comma_table(std::uint64_t max_p, Algorithm algo) {
  TableDoc t;
  t.columns = {{"p", true},   {"fraction", false}, {"cents", true}, {"decimal", true},
               {"LCY", true}, {"AO", true},        {"CM", true},    {"a", true},
               {"b", true},   {"label", false}};
  for (std::uint64_t p : comma_primes(max_p)) {
    const PrimeComma c = prime_comma(p, algo);
    t.rows.push_back({std::to_string(p), c.value.str(), fixed_decimals(c.cents, 2),
                      fixed_decimals(c.value.to_double(), 4), fixed_decimals(c.lcy, 3),
                      fixed_decimals(c.ao, 3), fixed_decimals(c.cm, 3), std::to_string(c.a),
                      std::to_string(c.b), label_string(c.label) + "[" + std::to_string(p) + "]"});
  }
  return t;
}

TableDoc b_table(std::uint64_t max_p, Algorithm algo) {
  TableDoc t;
  t.columns = {{"p", true}, {"b", true}};
  for (std::uint64_t p : comma_primes(max_p)) {
    const PrimeComma c = prime_comma(p, algo);
    t.rows.push_back({std::to_string(p), std::to_string(c.b)});
  }
  return t;
}

std::vector<BExtreme> first_last_prime_per_b(std::uint64_t max_p, Algorithm algo) {
  std::map<int, BExtreme> acc;
  for (std::uint64_t p : comma_primes(max_p)) {
    const int b = prime_comma(p, algo).b;
    auto [it, inserted] = acc.try_emplace(b, BExtreme{b, p, p, false});
    if (!inserted) it->second.p_max = p;
  }
  std::vector<BExtreme> out;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
    BExtreme e = it->second;
    e.open = e.p_max * 2 > max_p;  // still attained in the top octave of the scan
    out.push_back(e);
  }
  return out;
}

TableDoc first_last_prime_table(std::uint64_t max_p, Algorithm algo) {
  TableDoc t;
  t.columns = {{"b", true}, {"label", false}, {"p_min", true}, {"p_max_or_open", false}};
  for (const BExtreme& e : first_last_prime_per_b(max_p, algo)) {
    const NoteLabel plain = label_of_fifth_index(-e.b);
    const NoteLabel alt = normalize_pyth_commas(plain);
    std::string label = label_string(plain);
    if (alt != plain) label += " " + label_string(alt);
    t.rows.push_back({std::to_string(e.b), label, std::to_string(e.p_min),
                      e.open ? "open" : std::to_string(e.p_max)});
  }
  return t;
}

std::vector<PrimeComma> largest_commas(std::uint64_t max_p, int count, Algorithm algo) {
  if (count < 1) throw std::invalid_argument("largest_commas: count must be >= 1");
  std::vector<PrimeComma> all;
  for (std::uint64_t p : comma_primes(max_p)) all.push_back(prime_comma(p, algo));
  std::sort(all.begin(), all.end(), [](const PrimeComma& x, const PrimeComma& y) {
    if (std::fabs(x.cents) != std::fabs(y.cents)) return std::fabs(x.cents) > std::fabs(y.cents);
    return x.p < y.p;
  });
  if (all.size() > static_cast<std::size_t>(count)) all.resize(static_cast<std::size_t>(count));
  return all;
}

TableDoc largest_comma_table(std::uint64_t max_p, int count, Algorithm algo) {
  TableDoc t;
  t.columns = {{"p", true}, {"fraction", false}, {"cents", true}};
  for (const PrimeComma& c : largest_commas(max_p, count, algo))
    t.rows.push_back({std::to_string(c.p), c.value.str(), fixed_decimals(c.cents, 2)});
  return t;
}

std::map<int, double> b_weights(std::uint64_t p_low, std::uint64_t p_high, Algorithm algo) {
  if (p_low < 5 || p_low >= p_high)
    throw std::invalid_argument("b_weights: need 5 <= p_low < p_high");
  std::map<int, double> w;
  for (std::uint64_t p : primes_up_to(p_high)) {
    if (p < p_low) continue;
    const double pd = static_cast<double>(p);
    w[prime_comma(p, algo).b] += std::log(pd) / pd;
  }
  return w;
}

TableDoc b_distribution_table(std::uint64_t p_low, std::uint64_t p_high, Algorithm algo) {
  TableDoc t;
  t.columns = {{"b", true}, {"relative_weight", true}};
  for (const auto& [b, w] : b_weights(p_low, p_high, algo))
    t.rows.push_back({std::to_string(b), fixed_decimals(w, 12)});
  return t;
}

std::vector<CandidateComma> candidate_scan(std::uint64_t p, int b_lo, int b_hi) {
  if (b_lo > b_hi) throw std::invalid_argument("candidate_scan: b_lo must be <= b_hi");
  std::vector<CandidateComma> out;
  for (int b = b_lo; b <= b_hi; ++b) out.push_back(candidate_comma(p, b));
  return out;
}

TableDoc candidate_scan_table(std::uint64_t p, int b_lo, int b_hi) {
  TableDoc t;
  t.columns = {{"b", true}, {"a", true}, {"LCY", true}, {"AO", true}, {"CM", true}};
  for (const CandidateComma& c : candidate_scan(p, b_lo, b_hi))
    t.rows.push_back({std::to_string(c.b), std::to_string(c.a), fixed_decimals(c.lcy, 3),
                      fixed_decimals(c.ao, 3), fixed_decimals(c.cm, 3)});
  return t;
}

std::optional<std::uint64_t> find_pb(std::uint64_t search_limit) {
  for (std::uint64_t p : comma_primes(search_limit)) {
    // |PR| = 1 - pr_min; the first prime reaching 13 candidates is the boundary
    if (1 - dr_range(p).pr_min >= 13) return p;
  }
  return std::nullopt;
}

PythTables pyth_tables() {
  const double log2_3 = std::log2(3.0);
  PythTables out;

  out.octave4.columns = {{"note", false}, {"fraction", false}, {"decimal", true}, {"cents", true}};
  struct Entry {
    PythNote note;
    Rational freq;
  };
  std::vector<Entry> in_octave;
  for (int k = -8; k <= 12; ++k) {
    const NoteLabel label = label_of_fifth_index(k);
    const Rational oct4 = octave4_frequency(label);
    out.octave4.rows.push_back({pyth_note_string({label, 4}), oct4.str(),
                                fixed_decimals(oct4.to_double(), 4),
                                fixed_decimals(cents(oct4), 2)});
    // place the pitch class inside [1/1, 2/1)
    const int a_rep = octave4_two_exponent(label);
    const int z = 4 - static_cast<int>(std::floor(a_rep + k * log2_3));
    const PythNote placed{label, z};
    in_octave.push_back({placed, rational_from_pyth_note(placed)});
  }
  std::sort(in_octave.begin(), in_octave.end(),
            [](const Entry& x, const Entry& y) { return x.freq < y.freq; });
  in_octave.push_back({PythNote{label_of_fifth_index(0), 5}, Rational(2, 1)});

  out.in_octave.columns = {{"note", false}, {"fraction", false}, {"cents", true}};
  out.alt_names.columns = {{"note", false}, {"alt", false}, {"cents", true}};
  for (std::size_t i = 0; i < in_octave.size(); ++i) {
    const Entry& e = in_octave[i];
    const std::string cents_str = fixed_decimals(cents(e.freq), 1);
    out.in_octave.rows.push_back({pyth_note_string(e.note), e.freq.str(), cents_str});

    // Pythagorean-comma pair partner: +12 fifths with a 'd', or -12 with a 'p'.
    std::string alt;
    const bool appended_octave_row = i + 1 == in_octave.size();
    if (!appended_octave_row) {
      const int k = fifth_index(e.note.label);
      int partner = 0;
      bool has_partner = false;
      if (k <= 0) {
        partner = k + 12;
        has_partner = true;
      } else if (k >= 4) {
        partner = k - 12;
        has_partner = true;
      }
      if (has_partner) {
        NoteLabel alt_label = label_of_fifth_index(partner);
        alt_label.pyth_commas = (k - partner) / 12;
        const int a_freq = octave4_two_exponent(e.note.label) + (e.note.octave - 4);
        const int alt_octave = 4 + (a_freq - octave4_two_exponent(alt_label));
        alt = pyth_note_string({alt_label, alt_octave});
      }
    }
    out.alt_names.rows.push_back({pyth_note_string(e.note), alt, cents_str});
  }

  out.powers_of_three.columns = {
      {"exponent", true}, {"integer", true}, {"label", false}, {"alt", false}};
  BigInt power = 1;
  for (int k = 0; k <= 24; ++k) {
    const NoteLabel label = label_of_fifth_index(k);
    const NoteLabel folded = simplify_remote_label(label);
    out.powers_of_three.rows.push_back({std::to_string(k), power.get_str(), label_string(label),
                                        folded == label ? "" : label_string(folded)});
    power *= 3;
  }
  return out;
}

}  // namespace rcn
