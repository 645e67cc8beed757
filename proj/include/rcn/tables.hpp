#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rcn/notation.hpp"

namespace rcn {

enum class TableFormat { CSV, JSON, Markdown };
TableFormat parse_table_format(std::string_view text);

struct TableColumn {
  std::string name;
  bool numeric = false;
};

/// A rendered table: cells are already formatted with the pinned numeric
/// rendering (fractions num/den, cents 2 decimals, metrics 3, decimals 4),
/// so every output format is byte-deterministic.
struct TableDoc {
  std::vector<TableColumn> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string render_table(const TableDoc& table, TableFormat format);

/// Fixed-point formatting with half-away-from-zero ties, locale-free.
std::string fixed_decimals(double x, int places);

// --- typed generator cores ---

struct BExtreme {
  int b;
  std::uint64_t p_min;
  std::uint64_t p_max;
  bool open;  // attained in the top octave of the scan, so no last prime is claimed
};
std::vector<BExtreme> first_last_prime_per_b(std::uint64_t max_p, Algorithm algo);

std::vector<PrimeComma> largest_commas(std::uint64_t max_p, int count, Algorithm algo);

/// Raw ln(p)/p weights per b over primes in [p_low, p_high]; caller normalizes.
std::map<int, double> b_weights(std::uint64_t p_low, std::uint64_t p_high, Algorithm algo);

std::vector<CandidateComma> candidate_scan(std::uint64_t p, int b_lo, int b_hi);

/// Smallest prime whose primary range holds 13 or more candidates, if any <= limit.
std::optional<std::uint64_t> find_pb(std::uint64_t search_limit);

// --- table documents ---

TableDoc prime_comma_table(std::uint64_t max_p, Algorithm algo);
TableDoc b_table(std::uint64_t max_p, Algorithm algo);
TableDoc first_last_prime_table(std::uint64_t max_p, Algorithm algo);
TableDoc largest_comma_table(std::uint64_t max_p, int count, Algorithm algo);
TableDoc b_distribution_table(std::uint64_t p_low, std::uint64_t p_high, Algorithm algo);
TableDoc candidate_scan_table(std::uint64_t p, int b_lo, int b_hi);

/// The four Pythagorean reference tables: the 21 octave-4 notes, the same
/// pitch classes sorted into 0..1200 cents, their p/d alternative names, and
/// the powers of 3 with labels.
struct PythTables {
  TableDoc octave4;
  TableDoc in_octave;
  TableDoc alt_names;
  TableDoc powers_of_three;
};
PythTables pyth_tables();

}  // namespace rcn
