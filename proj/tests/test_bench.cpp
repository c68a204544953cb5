#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "gf2trace/bench.hpp"

using namespace gf2trace;

TEST_CASE("grid parsing") {
    auto grid = bench::parse_grid("8,4,1;16,8,1");
    REQUIRE(grid.size() == 2);
    CHECK(grid[0].n == 8);
    CHECK(grid[0].k == 4);
    CHECK(grid[0].l == 1);
    CHECK(grid[1].n == 16);

    CHECK_THROWS_AS((void)bench::parse_grid(""), std::invalid_argument);
    CHECK_THROWS_AS((void)bench::parse_grid("8,4"), std::invalid_argument);
    CHECK_THROWS_AS((void)bench::parse_grid("8,4,x"), std::invalid_argument);
    CHECK_THROWS_AS((void)bench::parse_grid("8,4,3"), std::invalid_argument);   // l does not divide k
    CHECK_THROWS_AS((void)bench::parse_grid("4,8,1"), std::invalid_argument);   // k > n
    CHECK_THROWS_AS((void)bench::parse_grid("128,64,1"), std::invalid_argument);  // n > 64
}

TEST_CASE("timing rows and CSV shape") {
    auto rows = bench::run_bench(bench::parse_grid("6,3,1;8,4,2"), 3, true, 2, 7);
    // per point: three methods amortized + three with setup (brute since n <= 16)
    CHECK(rows.size() == 12);
    for (const auto& r : rows) {
        CHECK(r.median_ns > 0);
        CHECK(r.iterations == 3);
        CHECK((r.method == "closed-form" || r.method == "linalg" || r.method == "brute"));
    }

    std::ostringstream csv;
    bench::write_csv(rows, csv);
    std::istringstream lines(csv.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,k,l,method,median_ns,iterations,amortized");
    std::size_t data_lines = 0;
    while (std::getline(lines, line)) {
        ++data_lines;
        CHECK(std::count(line.begin(), line.end(), ',') == 6);
    }
    CHECK(data_lines == rows.size());
}

TEST_CASE("large degrees skip the brute-force method") {
    auto rows = bench::run_bench(bench::parse_grid("32,16,1"), 2, false, 1, 7);
    for (const auto& r : rows) CHECK(r.method != "brute");
    CHECK(rows.size() == 2);  // closed-form + linalg
}
