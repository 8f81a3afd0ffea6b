#include "tables.hpp"

#include <functional>
#include <memory>

#include <json.hpp>

#include "format.hpp"
#include "mfdim/error.hpp"
#include "mfdim/families.hpp"
#include "mfdim/multifractal.hpp"

namespace mfdim::cli {
namespace {

constexpr std::size_t kSpectrumMaxN = 6;

Table spectrum_table(std::string id, bool want_f) {
  Table t{std::move(id), {"n"}, {}};
  for (std::size_t k = 1; k <= kSpectrumMaxN; ++k) t.header.push_back("|A|=" + std::to_string(k));
  for (std::size_t n = 2; n <= kSpectrumMaxN; ++n) {
    TableRow row{std::to_string(n), std::vector<std::optional<double>>(kSpectrumMaxN)};
    for (const auto& p : spectrum_from_profile(max_deng_profile(n)).points) {
      if (p.representative_cardinality) row.cells[*p.representative_cardinality - 1] = want_f ? p.f : p.y;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

template <typename Eval>
Table alpha_table(std::string id, std::string corner, const std::vector<double>& alphas,
                  const std::vector<std::pair<std::string, Eval>>& rows) {
  Table t{std::move(id), {std::move(corner)}, {}};
  for (double a : alphas) t.header.push_back(format_double(a));
  for (const auto& [label, eval] : rows) {
    TableRow row{label, {}};
    for (double a : alphas) row.cells.push_back(eval(a));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table dimension_grid(std::string id, Family family, std::vector<double> alphas) {
  using Eval = std::function<double(double)>;
  std::vector<std::pair<std::string, Eval>> rows;
  for (std::size_t n = 2; n <= 20; n += 2) {
    auto profile = std::make_shared<CardinalityProfile>(family_profile(family, n));
    rows.emplace_back(std::to_string(n), [profile](double a) { return multifractal_dimension(*profile, a).value; });
  }
  return alpha_table(std::move(id), "n\\alpha", alphas, rows);
}

}  // namespace

Table make_table(std::string_view id) {
  using Eval = std::function<double(double)>;
  if (id == "T1") return spectrum_table("T1", false);
  if (id == "T2") return spectrum_table("T2", true);
  if (id == "T3") {
    auto m = std::make_shared<MassFunction>(validate_mass_function(
        FrameOfDiscernment(3), std::vector<RawAssignment>{{{0}, 0.2}, {{1, 2}, 0.8}}));
    std::vector<std::pair<std::string, Eval>> rows{
        {"D_alpha", [m](double a) { return multifractal_dimension(*m, a).value; }}};
    return alpha_table("T3", "alpha", {3, 9, 15, 21, 27, 33}, rows);
  }
  if (id == "T4") {
    auto p = std::make_shared<CardinalityProfile>(vacuous_profile(2));
    std::vector<std::pair<std::string, Eval>> rows{
        {"D_alpha", [p](double a) { return multifractal_dimension(*p, a).value; }}};
    return alpha_table("T4", "n\\alpha", {1, 4, 7, 10, 13, 16, 19}, rows);
  }
  if (id == "T5") return dimension_grid("T5", Family::UniformPowerset, {1, 5, 9, 13, 17, 21, 25, 29});
  if (id == "T6") return dimension_grid("T6", Family::MaxDeng, {1, 4, 7, 10, 13, 16, 19});
  throw Error(ErrorCode::UnknownTable, "no table named '" + std::string(id) + "' (expected T1..T6)");
}

std::string render_table_csv(const Table& table) {
  std::string out = csv_line(table.header);
  for (const auto& row : table.rows) {
    std::vector<std::string> cells{row.label};
    for (const auto& c : row.cells) cells.push_back(c ? format_fixed4(*c) : "");
    out += csv_line(cells);
  }
  return out;
}

std::string render_table_json(const Table& table) {
  nlohmann::ordered_json j;
  j["table"] = table.id;
  j["header"] = table.header;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r;
    r["label"] = row.label;
    r["values"] = nlohmann::ordered_json::array();
    for (const auto& c : row.cells) {
      if (c) r["values"].push_back(*c);
      else r["values"].push_back(nullptr);
    }
    j["rows"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

}  // namespace mfdim::cli
