#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "irr/grid.hpp"

using namespace irr;

namespace {

grid_spec all_zero() { return grid_spec(0, 1, 0, 1, {"0"}); }
grid_spec all_one() { return grid_spec(0, 1, 0, 1, {"1"}); }

/// Every column reads 1 then 0 forever.
grid_spec one_then_zeros() { return grid_spec(0, 1, 1, 1, {"10"}); }

grid_spec random_grid(std::mt19937_64& rng, std::size_t max_stem,
                      std::size_t max_period) {
  const std::size_t rs = rng() % (max_stem + 1);
  const std::size_t rp = 1 + rng() % max_period;
  const std::size_t cs = rng() % (max_stem + 1);
  const std::size_t cp = 1 + rng() % max_period;
  // Mix densities so that both members and non-members of S occur.
  const std::size_t den = rng() % 4;  // 1s with probability den/8
  std::vector<std::string> table(rs + rp);
  for (auto& row : table)
    for (std::size_t j = 0; j < cs + cp; ++j)
      row += (rng() % 8 < den) ? '1' : '0';
  return grid_spec(rs, rp, cs, cp, std::move(table));
}

}  // namespace

TEST_CASE("entry lookup folds both coordinates") {
  CHECK(all_zero().at(3, 9) == '0');
  CHECK(all_one().at(7, 13) == '1');
  const grid_spec g(0, 2, 0, 1, {"0", "1"});
  CHECK(g.at(3, 5) == '0');
  CHECK(g.at(2, 5) == '1');
  CHECK_THROWS_AS(all_zero().at(0, 1), std::invalid_argument);
}

TEST_CASE("columns are lassos with the declared column shape") {
  CHECK(to_text(all_zero().column(1)) == "|0");
  CHECK(to_text(all_one().column(4)) == "|1");
  CHECK(to_text(one_then_zeros().column(2)) == "1|0");
}

TEST_CASE("membership in S and P on fixed grids") {
  CHECK_FALSE(in_s(all_zero()));
  CHECK(in_p(all_zero()));
  CHECK(in_s(all_one()));
  CHECK_FALSE(in_p(all_one()));
  CHECK_FALSE(in_s(one_then_zeros()));
  CHECK(in_p(one_then_zeros()));
}

TEST_CASE("in_p is the complement of in_s on sampled grids") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const grid_spec g = random_grid(rng, 2, 4);
    CHECK(in_s(g) != in_p(g));
  }
}

TEST_CASE("in_s is invariant under period unrolling") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const grid_spec g = random_grid(rng, 2, 4);
    const bool base = in_s(g);
    CHECK(in_s(unroll_rows(g)) == base);
    CHECK(in_s(unroll_cols(g)) == base);
  }
}

TEST_CASE("first disagreement level on fixed grids") {
  CHECK_FALSE(first_disagreement_level(all_zero(), all_zero()).has_value());
  CHECK(first_disagreement_level(all_zero(), all_one()) == 2u);

  // Differ exactly at (1,1): level 2, giving distance 1/4.
  const grid_spec a(1, 1, 1, 1, {"10", "00"});
  const grid_spec b(1, 1, 1, 1, {"00", "00"});
  CHECK(first_disagreement_level(a, b) == 2u);
}

TEST_CASE("first disagreement level is symmetric; absent means box equality") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 150; ++i) {
    const grid_spec a = random_grid(rng, 2, 3);
    const grid_spec b =
        (rng() % 3 == 0) ? unroll_rows(a) : random_grid(rng, 2, 3);
    const auto d1 = first_disagreement_level(a, b);
    const auto d2 = first_disagreement_level(b, a);
    CHECK(d1 == d2);

    const std::size_t rows = std::max(a.row_stem(), b.row_stem()) +
                             std::lcm(a.row_period(), b.row_period());
    const std::size_t cols = std::max(a.col_stem(), b.col_stem()) +
                             std::lcm(a.col_period(), b.col_period());
    bool equal_box = true;
    for (std::size_t m = 1; m <= rows && equal_box; ++m)
      for (std::size_t n = 1; n <= cols && equal_box; ++n)
        equal_box = a.at(m, n) == b.at(m, n);
    CHECK(!d1.has_value() == equal_box);
  }
}

TEST_CASE("unrolling preserves every entry") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 100; ++i) {
    const grid_spec g = random_grid(rng, 2, 3);
    const grid_spec r = unroll_rows(g);
    const grid_spec c = unroll_cols(g);
    for (std::size_t m = 1; m <= 10; ++m)
      for (std::size_t n = 1; n <= 10; ++n) {
        REQUIRE(g.at(m, n) == r.at(m, n));
        REQUIRE(g.at(m, n) == c.at(m, n));
      }
  }
}

TEST_CASE("grid construction validates the table") {
  CHECK_THROWS_AS(grid_spec(0, 1, 0, 1, {"0", "0"}), std::invalid_argument);
  CHECK_THROWS_AS(grid_spec(0, 1, 0, 1, {"00"}), std::invalid_argument);
  CHECK_THROWS_AS(grid_spec(0, 1, 0, 1, {"x"}), std::invalid_argument);
  CHECK_THROWS_AS(grid_spec(0, 0, 0, 1, {}), std::invalid_argument);
}
