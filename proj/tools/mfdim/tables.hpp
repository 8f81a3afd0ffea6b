#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mfdim::cli {

struct TableRow {
  std::string label;
  std::vector<std::optional<double>> cells;  // empty where the grid has no entry
};

struct Table {
  std::string id;
  std::vector<std::string> header;
  std::vector<TableRow> rows;
};

/// T1 / T2: max-Deng y and f per cardinality, n = 2..6.
/// T3: D_alpha of m({t1}) = 0.2, m({t2, t3}) = 0.8 at alpha = 3, 9, ..., 33.
/// T4: vacuous D_alpha at alpha = 1, 4, ..., 19.
/// T5 / T6: uniform power-set and max-Deng D_alpha, n = 2, 4, ..., 20.
/// Throws UnknownTable for any other id.
Table make_table(std::string_view id);

std::string render_table_csv(const Table& table);
std::string render_table_json(const Table& table);

}  // namespace mfdim::cli
