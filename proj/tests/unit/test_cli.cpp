#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "format.hpp"
#include "tables.hpp"

using namespace mfdim::cli;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "mfdim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
      const auto next = line.find(',', pos);
      cells.push_back(line.substr(pos, next - pos));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

double cell(const std::string& s) { return std::stod(s); }

std::filesystem::path two_focal_path() { return std::filesystem::path(MFDIM_TEST_DATA_DIR) / "two_focal.json"; }

}  // namespace

TEST_CASE("format_fixed4 rounds half away from zero") {
  CHECK(format_fixed4(0.14285714) == "0.1429");
  CHECK(format_fixed4(1.0) == "1.0000");
  CHECK(format_fixed4(0.00005) == "0.0001");
  CHECK(format_fixed4(-0.00005) == "-0.0001");
  CHECK(format_fixed4(0.0) == "0.0000");
  CHECK(format_fixed4(2.03125) == "2.0313");
  CHECK(format_fixed4(-2.03125) == "-2.0313");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-0.0) == "0");
}

TEST_CASE("alpha ranges") {
  CHECK(parse_alpha_range("1:19:3") == std::vector<double>{1, 4, 7, 10, 13, 16, 19});
  CHECK(parse_alpha_range("0.5:1:0.25") == std::vector<double>{0.5, 0.75, 1.0});
  CHECK_THROWS(parse_alpha_range("1:2"));
  CHECK_THROWS(parse_alpha_range("1:2:0"));
  CHECK_THROWS(parse_alpha_range("3:2:1"));
  CHECK_THROWS(parse_alpha_range("a:2:1"));
}

TEST_CASE("spectrum command") {
  auto r = invoke({"spectrum", "--family", "max-deng", "--n", "3"});
  REQUIRE(r.status == 0);
  auto rows = csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"y", "f", "mass_value", "multiplicity", "representative_cardinality"});
  CHECK(std::abs(cell(rows[1][0]) - 0.5131) < 5e-5);
  CHECK(cell(rows[1][1]) == 0.0);
  CHECK(std::abs(cell(rows[2][0]) - 0.9486) < 5e-5);
  CHECK(std::abs(cell(rows[3][0]) - 1.5131) < 5e-5);
  CHECK(std::abs(cell(rows[3][1]) - 0.5646) < 5e-5);

  CHECK(invoke({"spectrum", "--family", "vacuous", "--n", "10"}).out ==
        "y,f,mass_value,multiplicity,representative_cardinality\n0,0,1,1,10\n");
  auto u = csv(invoke({"spectrum", "--family", "uniform-powerset", "--n", "7"}).out);
  REQUIRE(u.size() == 2);
  CHECK(cell(u[1][0]) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(u[1][1] == "1");
  CHECK(u[1][4] == "");
}

TEST_CASE("dimension command") {
  auto r = invoke({"dimension", "--input", two_focal_path().string(), "--alpha", "1,2,3"});
  REQUIRE(r.status == 0);
  auto rows = csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"alpha", "D_alpha", "branch", "numerator_bits", "denominator_bits", "error"});
  CHECK(rows[1][2] == "limit_one");
  CHECK(std::abs(cell(rows[1][1]) - 1.1249) < 5e-5);
  CHECK(std::abs(cell(rows[2][1]) - 0.7163) < 5e-5);
  CHECK(rows[3][2] == "general");

  auto v = csv(invoke({"dimension", "--family", "vacuous", "--n", "5", "--alpha", "10"}).out);
  CHECK(cell(v[1][1]) == doctest::Approx(0.1).epsilon(1e-14));
  auto s = csv(invoke({"dimension", "--family", "uniform-singleton", "--n", "9", "--alpha", "42"}).out);
  CHECK(cell(s[1][1]) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("dimension command error rows and exit status") {
  auto partial = invoke({"dimension", "--family", "vacuous", "--n", "4", "--alpha", "0,2"});
  CHECK(partial.status == 0);
  auto rows = csv(partial.out);
  CHECK(rows[1][5] == "ZeroDenominator");
  CHECK(rows[2][5] == "");
  CHECK(partial.err.find("ZeroDenominator") != std::string::npos);

  CHECK(invoke({"dimension", "--family", "vacuous", "--n", "4", "--alpha", "0"}).status == 3);
  auto neg = invoke({"dimension", "--family", "vacuous", "--n", "4", "--alpha", "-2"});
  CHECK(neg.status == 0);
  CHECK(neg.err.find("warning: alpha=-2") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"bogus"}).status == 4);
  CHECK(invoke({"table", "T9"}).status == 4);
  CHECK(invoke({"table", "T9"}).err.rfind("error: UnknownTable:", 0) == 0);
  CHECK(invoke({"spectrum", "--family", "vacuous", "--n", "1"}).status == 3);
  CHECK(invoke({"spectrum"}).status == 2);
  CHECK(invoke({"spectrum", "--input", "/nonexistent/m.json"}).status == 2);
  CHECK(invoke({"spectrum", "--input", two_focal_path().string(), "--family", "vacuous", "--n", "3"}).status == 2);
  CHECK(invoke({"dimension", "--family", "vacuous", "--n", "3"}).status == 2);
  CHECK(invoke({"spectrum", "--family", "nope", "--n", "3"}).status == 2);
  CHECK(invoke({"spectrum", "--help"}).status == 0);
}

TEST_CASE("input validation surfaces core error codes") {
  const auto dir = std::filesystem::temp_directory_path() / "mfdim_cli_test";
  std::filesystem::create_directories(dir);
  const auto bad = dir / "short.json";
  std::ofstream(bad) << R"({"frame": ["a", "b"], "assignments": [{"subset": ["a"], "mass": 0.5}]})";
  auto r = invoke({"spectrum", "--input", bad.string()});
  CHECK(r.status == 2);
  CHECK(r.err.rfind("error: SumNotOne:", 0) == 0);
  // a looser sum tolerance accepts it
  CHECK(invoke({"spectrum", "--input", bad.string(), "--tolerance-sum", "0.6"}).status == 0);

  const auto garbage = dir / "garbage.json";
  std::ofstream(garbage) << "{ not json";
  CHECK(invoke({"spectrum", "--input", garbage.string()}).err.rfind("error: ParseError:", 0) == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("table command") {
  auto t1 = csv(invoke({"table", "T1"}).out);
  REQUIRE(t1.size() == 6);
  CHECK(t1[4] == std::vector<std::string>{"5", "1.5585", "1.2386", "0.9918", "0.7699", "0.5585", ""});
  auto t5 = csv(invoke({"table", "T5"}).out);
  CHECK(t5[0][4] == "13");
  CHECK(t5[4][0] == "8");
  CHECK(t5[4][4] == "1.0265");
  auto t6 = csv(invoke({"table", "T6"}).out);
  CHECK(t6[8][0] == "16");
  CHECK(t6[8][6] == "1.5846");
  auto t4 = csv(invoke({"table", "T4"}).out);
  REQUIRE(t4.size() == 2);
  CHECK(t4[1] == std::vector<std::string>{"D_alpha", "1.0000", "0.2500", "0.1429", "0.1000", "0.0769", "0.0625", "0.0526"});
  CHECK(invoke({"table", "T3", "--format", "json"}).out.find("\"table\": \"T3\"") != std::string::npos);
}

TEST_CASE("outputs are deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"spectrum", "--family", "max-deng", "--n", "8", "--format", "json"},
      {"spectrum", "--family", "max-deng", "--n", "8", "--format", "svg"},
      {"sweep", "--family", "max-deng", "--n", "10", "--alpha-range", "1:19:3", "--format", "svg"},
      {"envelope", "--n", "6", "--format", "svg"},
      {"table", "T6"},
  };
  for (const auto& c : commands) {
    const auto a = invoke(c);
    const auto b = invoke(c);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("family --emit round-trips through spectrum --input") {
  const auto dir = std::filesystem::temp_directory_path() / "mfdim_roundtrip";
  std::filesystem::create_directories(dir);
  for (std::string fam : {"max-deng", "uniform-powerset", "vacuous", "uniform-singleton"}) {
    for (std::string n : {"2", "4", "7", "10"}) {
      const auto path = (dir / (fam + "_" + n + ".json")).string();
      REQUIRE(invoke({"family", "--family", fam, "--n", n, "--emit", "--output", path}).status == 0);
      for (std::string fmt : {"csv", "json"}) {
        const auto from_file = invoke({"spectrum", "--input", path, "--format", fmt});
        const auto from_family = invoke({"spectrum", "--family", fam, "--n", n, "--format", fmt});
        CHECK(from_file.status == 0);
        CHECK(from_file.out == from_family.out);
      }
    }
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("envelope command") {
  auto rows = csv(invoke({"envelope", "--n", "6"}).out);
  REQUIRE(rows.size() == 1 + 3 + 101);
  CHECK(rows[1] == std::vector<std::string>{"anchor", "0.585", "0"});
  CHECK(std::abs(cell(rows[2][2]) - 0.7203) < 5e-5);
  CHECK(rows[3] == std::vector<std::string>{"anchor", "1.585", "0"});
  double best = -1.0, best_x = 0.0;
  for (std::size_t i = 4; i < rows.size(); ++i) {
    if (cell(rows[i][2]) > best) best = cell(rows[i][2]), best_x = cell(rows[i][1]);
  }
  CHECK(best_x == doctest::Approx(1.085));
  CHECK(invoke({"envelope", "--n", "2", "--format", "json"}).out.find("\"a\": 2.0") != std::string::npos);
  CHECK(invoke({"envelope", "--n", "6", "--samples", "1"}).status == 2);
}

TEST_CASE("output directory override") {
  const auto dir = std::filesystem::temp_directory_path() / "mfdim_outdir";
  std::filesystem::create_directories(dir);
  ::setenv("MFDIM_OUTPUT_DIR", dir.c_str(), 1);
  auto r = invoke({"table", "T2", "--output", "t2.csv"});
  ::unsetenv("MFDIM_OUTPUT_DIR");
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  CHECK(std::filesystem::exists(dir / "t2.csv"));
  std::filesystem::remove_all(dir);
}
