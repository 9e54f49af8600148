#pragma once

// Tabular exports. Base schema, shared by every table:
//   level,t_num,t_den,value_a_num,value_a_den,value_b_num,value_b_den,value_decimal
// where the value is value_a + value_b * sqrt 2. Tables mixing several kinds
// of rows prepend a `kind` column; extra diagnostics are appended.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "takagi/modulus.hpp"
#include "takagi/quadvar.hpp"

namespace takagi {

inline constexpr unsigned kCsvDigits = 12;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void write_csv(std::ostream& out) const;
};

/// The base schema columns for one value.
std::vector<std::string> base_columns();
std::vector<std::string> base_cells(unsigned level, const Rational& t, const QuadValue& value);

Table qv_table(const QVSeries& series);

/// kind in {even_qv, odd_qv, even_cov, odd_cov}; appends limit_decimal and
/// distance_decimal.
Table counterexample_table(const CounterexampleSeries& series);

/// kind = "modulus", t = h, value = scan_max; appends omega_decimal,
/// ratio_decimal and witness_t.
Table modulus_table(unsigned grid_level, const std::vector<ModulusReport>& reports);

/// kind in {part_a, part_b}, level = n, t = t_n, value = increment; appends
/// h_num, h_den, predicted_decimal, exact_match and ratio_decimal.
void append_witness_rows(Table& table, WitnessKind kind, const std::vector<WitnessRow>& rows);
Table witness_table();

std::string_view to_string(SeriesTag tag);
std::string_view to_string(WitnessKind kind);

}  // namespace takagi
