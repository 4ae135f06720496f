#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace irr {

/// A finite word; letters are single characters.  The empty string is the
/// empty word.
using word = std::string;

/// A finite, ordered set of letters.
class alphabet {
 public:
  alphabet() = default;

  explicit alphabet(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty())
      throw std::invalid_argument("alphabet: must be non-empty");
    std::string sorted = letters_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("alphabet: letters must be distinct");
  }

  static alphabet binary() { return alphabet("01"); }
  /// Binary letters plus the separator letter 'A' used by grid codes.
  static alphabet marked() { return alphabet("01A"); }

  bool contains(char c) const {
    return letters_.find(c) != std::string::npos;
  }
  bool contains_word(std::string_view w) const {
    return std::all_of(w.begin(), w.end(),
                       [this](char c) { return contains(c); });
  }

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  friend bool operator==(const alphabet&, const alphabet&) = default;

 private:
  std::string letters_;
};

/// An ultimately periodic omega-word stem.cycle.cycle..., finitely
/// represented.  The cycle is always non-empty; the stem may be empty.
class lasso_word {
 public:
  lasso_word(word stem, word cycle, alphabet alpha)
      : stem_(std::move(stem)), cycle_(std::move(cycle)),
        alpha_(std::move(alpha)) {
    if (cycle_.empty())
      throw std::invalid_argument("lasso_word: cycle must be non-empty");
    if (!alpha_.contains_word(stem_) || !alpha_.contains_word(cycle_))
      throw std::invalid_argument("lasso_word: letter outside alphabet");
  }

  const word& stem() const { return stem_; }
  const word& cycle() const { return cycle_; }
  const alphabet& alpha() const { return alpha_; }

  friend bool operator==(const lasso_word& a, const lasso_word& b) {
    return a.stem_ == b.stem_ && a.cycle_ == b.cycle_ && a.alpha_ == b.alpha_;
  }

 private:
  word stem_;
  word cycle_;
  alphabet alpha_;
};

/// Letter at 1-based index i.  Total for i >= 1.
inline char letter_at(const lasso_word& w, std::size_t i) {
  if (i == 0) throw std::invalid_argument("letter_at: index is 1-based");
  const std::size_t s = w.stem().size();
  if (i <= s) return w.stem()[i - 1];
  return w.cycle()[(i - s - 1) % w.cycle().size()];
}

/// Letter at 0-based offset k; used by the position arithmetic of the
/// acceptance engines.
inline char letter_of(const lasso_word& w, std::size_t k) {
  const std::size_t s = w.stem().size();
  if (k < s) return w.stem()[k];
  return w.cycle()[(k - s) % w.cycle().size()];
}

/// Number of distinct normalized positions: stem offsets plus cycle offsets.
inline std::size_t position_span(const lasso_word& w) {
  return w.stem().size() + w.cycle().size();
}

/// Reduce an arbitrary 0-based position into [0, position_span).
inline std::size_t normalize_position(const lasso_word& w, std::size_t p) {
  const std::size_t s = w.stem().size();
  return p < s ? p : s + (p - s) % w.cycle().size();
}

/// Length-n prefix; prefix(w, 0) is the empty word.
inline word prefix(const lasso_word& w, std::size_t n) {
  word out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(letter_of(w, k));
  return out;
}

namespace detail {

/// Shortest word whose repetition yields c.
inline word primitive_root(const word& c) {
  const std::size_t n = c.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = c[i] == c[i - d];
    if (repeats) return c.substr(0, d);
  }
  return c;
}

}  // namespace detail

/// Canonical form: primitive cycle, and a stem that cannot be shortened by
/// rotating the cycle.  Structural equality on canonical forms decides
/// equality of the denoted omega-words.
inline lasso_word canonicalize(const lasso_word& w) {
  word cycle = detail::primitive_root(w.cycle());
  word stem = w.stem();
  while (!stem.empty() && stem.back() == cycle.back()) {
    stem.pop_back();
    cycle.insert(cycle.begin(), cycle.back());
    cycle.pop_back();
  }
  return lasso_word(std::move(stem), std::move(cycle), w.alpha());
}

/// True iff a and b denote the same omega-word.
inline bool equals_omega(const lasso_word& a, const lasso_word& b) {
  if (a.alpha() != b.alpha())
    throw std::invalid_argument("equals_omega: alphabet mismatch");
  return canonicalize(a) == canonicalize(b);
}

/// Prefix length that determines equality of two lassos with these
/// parameters: max stem length plus twice the lcm of the cycle lengths.
inline std::size_t agreement_bound(const lasso_word& a, const lasso_word& b) {
  return std::max(a.stem().size(), b.stem().size()) +
         2 * std::lcm(a.cycle().size(), b.cycle().size());
}

/// Same omega-word with the cycle unrolled k times.
inline lasso_word unroll_cycle(const lasso_word& w, std::size_t k) {
  if (k == 0) throw std::invalid_argument("unroll_cycle: k must be positive");
  word cycle;
  for (std::size_t i = 0; i < k; ++i) cycle += w.cycle();
  return lasso_word(w.stem(), std::move(cycle), w.alpha());
}

/// The omega-word with the first letter removed.
inline lasso_word drop_first(const lasso_word& w) {
  if (!w.stem().empty())
    return lasso_word(w.stem().substr(1), w.cycle(), w.alpha());
  word cycle = w.cycle().substr(1) + w.cycle()[0];
  return lasso_word(word(), std::move(cycle), w.alpha());
}

/// Parse the textual form STEM|CYCLE, e.g. "A1|A01" or "|01".
inline lasso_word parse_lasso(std::string_view text, const alphabet& alpha) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos)
    throw std::invalid_argument("parse_lasso: missing '|' separator");
  if (text.find('|', bar + 1) != std::string_view::npos)
    throw std::invalid_argument("parse_lasso: more than one '|'");
  word stem(text.substr(0, bar));
  word cycle(text.substr(bar + 1));
  if (cycle.empty())
    throw std::invalid_argument("parse_lasso: cycle must be non-empty");
  if (!alpha.contains_word(stem) || !alpha.contains_word(cycle))
    throw std::invalid_argument("parse_lasso: letter outside alphabet");
  return lasso_word(std::move(stem), std::move(cycle), alpha);
}

inline std::string to_text(const lasso_word& w) {
  return w.stem() + "|" + w.cycle();
}

}  // namespace irr
