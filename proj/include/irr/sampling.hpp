#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "irr/grid.hpp"
#include "irr/transducer.hpp"
#include "irr/words.hpp"

namespace irr {

/// Deterministic test-data generator.  Identical seeds give identical
/// streams, which the suite runner relies on for reproducible reports.
class sampler {
 public:
  explicit sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t raw() { return rng_(); }

  /// Uniform in [lo, hi], inclusive.
  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return lo + rng_() % (hi - lo + 1);
  }

  bool chance(std::size_t num, std::size_t den) {
    return rng_() % den < num;
  }

  char letter(const alphabet& a) {
    return a.letters()[rng_() % a.size()];
  }

  word finite_word(const alphabet& a, std::size_t len) {
    word w;
    for (std::size_t i = 0; i < len; ++i) w += letter(a);
    return w;
  }

  lasso_word lasso(const alphabet& a, std::size_t max_stem,
                   std::size_t max_cycle) {
    const std::size_t ns = uniform(0, max_stem);
    const std::size_t nc = uniform(1, max_cycle);
    return lasso_word(finite_word(a, ns), finite_word(a, nc), a);
  }

  /// Doubly ultimately periodic grid with a per-grid density of 1s drawn
  /// from a spread of values, so that members and non-members of S both
  /// occur in every corpus.
  grid_spec grid(std::size_t max_stem, std::size_t max_period) {
    const std::size_t rs = uniform(0, max_stem);
    const std::size_t rp = uniform(1, max_period);
    const std::size_t cs = uniform(0, max_stem);
    const std::size_t cp = uniform(1, max_period);
    const std::size_t density = uniform(0, 3);  // 1s with probability d/8
    std::vector<std::string> table(rs + rp);
    for (auto& row : table)
      for (std::size_t j = 0; j < cs + cp; ++j)
        row += chance(density, 8) ? '1' : '0';
    return grid_spec(rs, rp, cs, cp, std::move(table));
  }

  /// A factor of the lasso: the letters at a random window.
  word factor(const lasso_word& w, std::size_t max_len) {
    const std::size_t len = uniform(0, max_len);
    const std::size_t start = uniform(0, position_span(w) + 2);
    word out;
    for (std::size_t i = 0; i < len; ++i)
      out += letter_of(w, start + i);
    return out;
  }

  /// Random transducer whose labels are biased toward factors of the given
  /// pair; unbiased labels almost never line up with both tapes, which
  /// would make differential suites vacuous.
  buchi_transducer transducer_for(const lasso_word& x, const lasso_word& y,
                                  std::size_t max_states,
                                  std::size_t max_label) {
    const alphabet& in = x.alpha();
    const alphabet& out = y.alpha();
    const std::size_t n = uniform(1, max_states);
    std::vector<std::string> states;
    for (std::size_t i = 0; i < n; ++i)
      states.push_back("q" + std::to_string(i));
    std::vector<transducer_transition> ts;
    const std::size_t m = uniform(n, 3 * n);
    for (std::size_t i = 0; i < m; ++i) {
      const word wi = chance(2, 3) ? factor(x, max_label)
                                   : finite_word(in, uniform(0, max_label));
      const word wo = chance(2, 3) ? factor(y, max_label)
                                   : finite_word(out, uniform(0, max_label));
      ts.push_back({states[uniform(0, n - 1)], wi, wo,
                    states[uniform(0, n - 1)]});
    }
    std::vector<std::string> finals;
    for (const auto& s : states)
      if (chance(1, 2)) finals.push_back(s);
    return buchi_transducer(std::move(states), in, out, std::move(ts), "q0",
                            finals);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace irr
