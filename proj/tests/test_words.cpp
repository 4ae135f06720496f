#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "irr/words.hpp"

using namespace irr;

namespace {

alphabet abc() { return alphabet("abc"); }

lasso_word random_lasso(std::mt19937_64& rng, const alphabet& a,
                        std::size_t max_stem, std::size_t max_cycle) {
  const auto& letters = a.letters();
  word stem, cycle;
  const std::size_t ns = rng() % (max_stem + 1);
  const std::size_t nc = 1 + rng() % max_cycle;
  for (std::size_t i = 0; i < ns; ++i) stem += letters[rng() % letters.size()];
  for (std::size_t i = 0; i < nc; ++i) cycle += letters[rng() % letters.size()];
  return lasso_word(stem, cycle, a);
}

}  // namespace

TEST_CASE("letter_at indexes stem then wraps around the cycle") {
  const lasso_word w("ab", "c", abc());
  CHECK(letter_at(w, 1) == 'a');
  CHECK(letter_at(w, 5) == 'c');
  const lasso_word v("", "01", alphabet::binary());
  CHECK(letter_at(v, 4) == '1');
  CHECK_THROWS_AS(letter_at(w, 0), std::invalid_argument);
}

TEST_CASE("canonicalize produces primitive cycle and minimal stem") {
  const alphabet a = abc();
  const lasso_word w1 = canonicalize(lasso_word("a", "bb", a));
  CHECK(w1.stem() == "a");
  CHECK(w1.cycle() == "b");

  const lasso_word w2 = canonicalize(lasso_word("ab", "ab", a));
  CHECK(w2.stem() == "");
  CHECK(w2.cycle() == "ab");

  const lasso_word w3 = canonicalize(lasso_word("", "01", alphabet::binary()));
  CHECK(w3.stem() == "");
  CHECK(w3.cycle() == "01");

  CHECK_THROWS_AS(lasso_word("a", "", a), std::invalid_argument);
}

TEST_CASE("canonicalize is idempotent and preserves the denoted word") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 300; ++i) {
    const lasso_word w = random_lasso(rng, alphabet::binary(), 4, 6);
    const lasso_word c = canonicalize(w);
    CHECK(canonicalize(c) == c);
    const std::size_t upto = w.stem().size() + 3 * w.cycle().size();
    for (std::size_t k = 1; k <= upto; ++k)
      REQUIRE(letter_at(w, k) == letter_at(c, k));
  }
}

TEST_CASE("equals_omega identifies representations of the same word") {
  const alphabet a = abc();
  CHECK(equals_omega(lasso_word("a", "bb", a), lasso_word("ab", "b", a)));
  const alphabet b = alphabet::binary();
  CHECK(equals_omega(lasso_word("", "01", b), lasso_word("0", "10", b)));
  CHECK_FALSE(equals_omega(lasso_word("", "0", b), lasso_word("", "1", b)));
  CHECK_THROWS_AS(equals_omega(lasso_word("", "0", b), lasso_word("", "a", a)),
                  std::invalid_argument);
}

TEST_CASE("equals_omega matches prefix agreement up to the standard bound") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 400; ++i) {
    const lasso_word x = random_lasso(rng, alphabet::binary(), 3, 4);
    const lasso_word y = random_lasso(rng, alphabet::binary(), 3, 4);
    const std::size_t n = agreement_bound(x, y);
    CHECK(equals_omega(x, y) == (prefix(x, n) == prefix(y, n)));
  }
}

TEST_CASE("equals_omega is an equivalence relation on sampled lassos") {
  std::mt19937_64 rng(11);
  std::vector<lasso_word> ws;
  for (int i = 0; i < 24; ++i)
    ws.push_back(random_lasso(rng, alphabet::binary(), 2, 3));
  for (const auto& x : ws) CHECK(equals_omega(x, x));
  for (const auto& x : ws)
    for (const auto& y : ws) CHECK(equals_omega(x, y) == equals_omega(y, x));
  for (const auto& x : ws)
    for (const auto& y : ws)
      for (const auto& z : ws)
        if (equals_omega(x, y) && equals_omega(y, z))
          CHECK(equals_omega(x, z));
}

TEST_CASE("prefix") {
  CHECK(prefix(lasso_word("1", "0", alphabet::binary()), 3) == "100");
  CHECK(prefix(lasso_word("", "01", alphabet::binary()), 5) == "01010");
  CHECK(prefix(lasso_word("ab", "c", abc()), 0) == "");
}

TEST_CASE("unroll_cycle and drop_first keep letters in place") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const lasso_word w = random_lasso(rng, alphabet::marked(), 3, 4);
    for (std::size_t k = 1; k <= 3; ++k)
      CHECK(equals_omega(unroll_cycle(w, k), w));
    const lasso_word d = drop_first(w);
    for (std::size_t j = 1; j <= 12; ++j)
      REQUIRE(letter_at(d, j) == letter_at(w, j + 1));
  }
}

TEST_CASE("lasso text syntax round-trips") {
  const alphabet m = alphabet::marked();
  const lasso_word w = parse_lasso("A1|A01", m);
  CHECK(w.stem() == "A1");
  CHECK(w.cycle() == "A01");
  CHECK(to_text(w) == "A1|A01");
  CHECK(parse_lasso("|01", m).stem().empty());
  CHECK_THROWS_AS(parse_lasso("01", m), std::invalid_argument);
  CHECK_THROWS_AS(parse_lasso("0|", m), std::invalid_argument);
  CHECK_THROWS_AS(parse_lasso("0|1|0", m), std::invalid_argument);
  CHECK_THROWS_AS(parse_lasso("x|0", m), std::invalid_argument);
}
