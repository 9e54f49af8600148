#include "takagi/csv.hpp"

#include <ostream>

namespace takagi {

namespace {

std::vector<std::string> with_kind(std::vector<std::string> cols) {
  cols.insert(cols.begin(), "kind");
  return cols;
}

}  // namespace

void Table::write_csv(std::ostream& out) const {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(columns);
  for (const auto& r : rows) line(r);
}

std::vector<std::string> base_columns() {
  return {"level", "t_num", "t_den", "value_a_num", "value_a_den", "value_b_num", "value_b_den",
          "value_decimal"};
}

std::vector<std::string> base_cells(unsigned level, const Rational& t, const QuadValue& value) {
  return {std::to_string(level),
          t.get_num().get_str(),
          t.get_den().get_str(),
          value.rational_part().get_num().get_str(),
          value.rational_part().get_den().get_str(),
          value.sqrt2_part().get_num().get_str(),
          value.sqrt2_part().get_den().get_str(),
          quad_to_decimal(value, kCsvDigits)};
}

std::string_view to_string(SeriesTag tag) {
  switch (tag) {
    case SeriesTag::qv: return "qv";
    case SeriesTag::covariation: return "covariation";
    case SeriesTag::qv_of_sum: return "qv_of_sum";
  }
  return "unknown";
}

std::string_view to_string(WitnessKind kind) {
  return kind == WitnessKind::part_a ? "part_a" : "part_b";
}

Table qv_table(const QVSeries& series) {
  Table table{base_columns(), {}};
  for (const auto& row : series.rows) table.rows.push_back(base_cells(row.level, row.t.to_rational(), row.value));
  return table;
}

Table counterexample_table(const CounterexampleSeries& series) {
  Table table{with_kind(base_columns()), {}};
  table.columns.emplace_back("limit_decimal");
  table.columns.emplace_back("distance_decimal");
  auto emit = [&table](std::string_view kind, const QVSeries& s) {
    for (const auto& row : s.rows) {
      auto cells = base_cells(row.level, row.t.to_rational(), row.value);
      cells.insert(cells.begin(), std::string(kind));
      cells.push_back(quad_to_decimal(*row.limit, kCsvDigits));
      cells.push_back(quad_to_decimal(*row.distance(), kCsvDigits));
      table.rows.push_back(std::move(cells));
    }
  };
  emit("even_qv", series.even_qv);
  emit("odd_qv", series.odd_qv);
  emit("even_cov", series.even_cov);
  emit("odd_cov", series.odd_cov);
  return table;
}

Table modulus_table(unsigned grid_level, const std::vector<ModulusReport>& reports) {
  Table table{with_kind(base_columns()), {}};
  for (const char* c : {"omega_decimal", "ratio_decimal", "witness_t"}) table.columns.emplace_back(c);
  for (const auto& r : reports) {
    auto cells = base_cells(grid_level, r.h, r.scan_max);
    cells.insert(cells.begin(), "modulus");
    cells.push_back(quad_to_decimal(r.omega, kCsvDigits));
    cells.push_back(r.ratio_decimal);
    cells.push_back(r.witness_t.get_str());
    table.rows.push_back(std::move(cells));
  }
  return table;
}

Table witness_table() {
  Table table{with_kind(base_columns()), {}};
  for (const char* c : {"h_num", "h_den", "predicted_decimal", "exact_match", "ratio_decimal"}) {
    table.columns.emplace_back(c);
  }
  return table;
}

void append_witness_rows(Table& table, WitnessKind kind, const std::vector<WitnessRow>& rows) {
  for (const auto& r : rows) {
    auto cells = base_cells(r.n, r.t, r.increment);
    cells.insert(cells.begin(), std::string(to_string(kind)));
    cells.push_back(r.h.get_num().get_str());
    cells.push_back(r.h.get_den().get_str());
    cells.push_back(quad_to_decimal(r.predicted, kCsvDigits));
    cells.push_back(r.increment == r.predicted ? "1" : "0");
    cells.push_back(r.ratio_decimal);
    table.rows.push_back(std::move(cells));
  }
}

}  // namespace takagi
