#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "entspec/cli.hpp"
#include "entspec/partitions.hpp"

using namespace entspec;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"entspec"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  Result r;
  r.code = run_cli(int(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("spectrum csv") {
    const Result r = invoke({"spectrum", "--gamma", "1", "--h", "3", "--n-max", "20", "--format", "csv"});
    REQUIRE(r.code == kExitOk);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 22);
    CHECK(r.out.rfind("n,lambda,degeneracy,ln_lambda\n", 0) == 0);
    double last = 2.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double lambda = std::stod(rows[i][1]);
      CHECK(lambda < last);
      last = lambda;
    }
    CHECK(rows[1][2] == "1");
    CHECK(rows[2][2] == "2");
    CHECK(rows[5][2] == "4");
  }

  TEST_CASE("huge degeneracies print as exact integers") {
    const Result r = invoke({"spectrum", "--gamma", "1", "--h", "3", "--n-max", "3000"});
    REQUIRE(r.code == kExitOk);
    const auto rows = csv_rows(r.out);
    CHECK(rows.back()[2] == shared_tables(3000)->a[3000].get_str());
  }

  TEST_CASE("entropy") {
    const Result vn = invoke({"entropy", "--gamma", "0.5", "--h", "1", "--alpha", "1"});
    REQUIRE(vn.code == kExitOk);
    const auto vrows = csv_rows(vn.out);
    REQUIRE(vrows.size() == 2);
    CHECK(vrows[1][1] == "von_neumann");

    const Result all = invoke({"entropy", "--gamma", "1", "--h", "3", "--alpha", "2", "--representation", "all"});
    REQUIRE(all.code == kExitOk);
    const auto rows = csv_rows(all.out);
    REQUIRE(rows.size() == 5);
    const double ref = std::stod(rows[1][2]);
    for (std::size_t i = 2; i < rows.size(); ++i) CHECK(std::abs(std::stod(rows[i][2]) - ref) < 1e-10);
    CHECK(ref == doctest::Approx(0.141567652387).epsilon(1e-11));
  }

  TEST_CASE("verify passes on an intact build") {
    const Result r = invoke({"verify", "--gamma", "1", "--h", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("fail") == std::string::npos);
    CHECK(r.err.empty());
  }

  TEST_CASE("exit codes and diagnostics") {
    const Result critical = invoke({"spectrum", "--gamma", "1", "--h", "2"});
    CHECK(critical.code == kExitDomain);
    CHECK(critical.err.rfind("error: critical_input: ", 0) == 0);
    CHECK(std::count(critical.err.begin(), critical.err.end(), '\n') == 1);

    CHECK(invoke({"spectrum", "--gamma", "1"}).code == kExitUsage);
    CHECK(invoke({"bogus"}).code == kExitUsage);
    CHECK(invoke({"entropy", "--gamma", "1", "--h", "3", "--alpha", "x"}).code == kExitUsage);
    CHECK(invoke({"spectrum", "--gamma", "nan", "--h", "3"}).code == kExitUsage);
    CHECK(invoke({"oracle", "--gamma", "1", "--h", "3", "--source", "ed", "--chain-size", "16",
                  "--block-size", "4"}).code == kExitDomain);
  }

  TEST_CASE("json output") {
    const Result r = invoke({"spectrum", "--gamma", "0.5", "--h", "1", "--n-max", "5", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["table"] == "spectrum");
    CHECK(j["columns"].size() == 4);
    REQUIRE(j["rows"].size() == 6);
    CHECK(j["rows"][3][2] == "12");
    CHECK(j["rows"][0][1].is_number());
  }

  TEST_CASE("output determinism and files") {
    const Result a = invoke({"sweep", "--gamma-steps", "3", "--h-steps", "4", "--alpha", "2,1"});
    const Result b = invoke({"sweep", "--gamma-steps", "3", "--h-steps", "4", "--alpha", "2,1"});
    REQUIRE(a.code == kExitOk);
    CHECK(a.out == b.out);

    const auto path = std::filesystem::temp_directory_path() / "entspec_cli_test.csv";
    const std::string p = path.string();
    const Result f = invoke({"spectrum", "--gamma", "1", "--h", "3", "--output", p.c_str()});
    CHECK(f.code == kExitOk);
    CHECK(f.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == invoke({"spectrum", "--gamma", "1", "--h", "3"}).out);
    std::filesystem::remove(path);
  }

  TEST_CASE("sweep rows are sorted by (gamma, h)") {
    setenv("ENTSPEC_THREADS", "3", 1);
    CHECK(worker_threads() == 3);
    const Result r = invoke({"sweep", "--gamma-steps", "4", "--h-steps", "5"});
    unsetenv("ENTSPEC_THREADS");
    REQUIRE(r.code == kExitOk);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 21);
    for (std::size_t i = 2; i < rows.size(); ++i) {
      const double g0 = std::stod(rows[i - 1][0]), h0 = std::stod(rows[i - 1][1]);
      const double g1 = std::stod(rows[i][0]), h1 = std::stod(rows[i][1]);
      CHECK((g1 > g0 || (g1 == g0 && h1 > h0)));
    }
  }

  TEST_CASE("RFC 4180 quoting") {
    Table t{"quoting", {"a", "b,c"}, {{text_cell("plain"), text_cell("say \"hi\"")},
                                      {text_cell("line\nbreak"), integer_cell(7)}}};
    std::ostringstream out;
    write_csv(out, t);
    CHECK(out.str() == "a,\"b,c\"\nplain,\"say \"\"hi\"\"\"\n\"line\nbreak\",7\n");
  }

  TEST_CASE("asymptotics and oracle commands") {
    const Result d = invoke({"asymptotics", "--gamma", "1", "--h", "3", "--n-max", "10", "--cauchy"});
    REQUIRE(d.code == kExitOk);
    CHECK(csv_rows(d.out).size() == 11);
    const Result s = invoke({"asymptotics", "--gamma", "1", "--h", "3", "--mode", "singularity", "--z", "0.5,0.9"});
    REQUIRE(s.code == kExitOk);
    CHECK(csv_rows(s.out).size() == 3);
    const Result o = invoke({"oracle", "--gamma", "1", "--h", "3", "--block-size", "32", "--levels", "10", "--compare"});
    REQUIRE(o.code == kExitOk);
    CHECK(o.out.rfind("n,lambda_exact,lambda_oracle", 0) == 0);
  }
}
