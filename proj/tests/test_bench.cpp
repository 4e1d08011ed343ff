#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <sstream>

#include "wheeler/bench.hpp"

using namespace wheeler;

TEST_CASE("small run") {
  BenchConfig c;
  c.sizes = {10};
  auto start = std::chrono::steady_clock::now();
  auto rows = run_bench(c);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].n == 10);
  CHECK(rows[0].m == 30);
  CHECK(rows[0].p_hat >= 1);
  CHECK(rows[0].total_ms >= 0);
}

TEST_CASE("rows are ordered and reproducible") {
  BenchConfig c;
  c.sizes = {40, 20};
  c.seeds = {3, 1};
  c.edge_factor = 2;
  c.sigma = 2;
  auto a = run_bench(c);
  auto b = run_bench(c);
  REQUIRE(a.size() == 4);
  CHECK(a[0].n == 40);
  CHECK(a[0].seed == 3);
  CHECK(a[3].n == 20);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].p_hat == b[i].p_hat);
    CHECK(a[i].n_min == b[i].n_min);
    CHECK(a[i].m_min == b[i].m_min);
    CHECK(a[i].square_states == b[i].square_states);
    CHECK(a[i].square_transitions == b[i].square_transitions);
    CHECK(a[i].wheeler == b[i].wheeler);
  }
}

TEST_CASE("csv layout") {
  BenchConfig c;
  c.sizes = {10};
  std::ostringstream out;
  write_bench_csv(out, run_bench(c));
  std::istringstream in(out.str());
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header == bench_csv_header());
  CHECK(std::count(header.begin(), header.end(), ',') == 16);
  CHECK(std::count(row.begin(), row.end(), ',') == 16);
  CHECK(row.rfind("10,30,3,1,", 0) == 0);
}

TEST_CASE("invalid configuration") {
  BenchConfig c;
  c.sizes.clear();
  CHECK_THROWS(run_bench(c));
  c.sizes = {10};
  c.edge_factor = 5;
  CHECK_THROWS(run_bench(c));
}
