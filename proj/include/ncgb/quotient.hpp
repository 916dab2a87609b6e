// Analysis of the quotient algebra from a Groebner basis: the automaton
// recognizing normal words, finiteness, graded dimensions, and
// multiplication tables.
#ifndef NCGB_QUOTIENT_HPP
#define NCGB_QUOTIENT_HPP

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "ncgb/poly.hpp"

namespace ncgb {

struct GradedDims {
  std::vector<mpz_class> dims;          // index = degree, starting at 0
  std::optional<int> guaranteed_upto;   // set by callers holding a truncated basis
};

/// Deterministic factor-avoidance automaton built from a forbidden word set
/// (suffix links over the prefix trie). A word is normal exactly when its
/// walk from the root never enters a dead state. Immutable once built.
class NormalWordAutomaton {
 public:
  static NormalWordAutomaton build(const Alphabet& alphabet, const std::vector<Word>& forbidden);

  const Alphabet& alphabet() const { return alphabet_; }
  /// True when the empty word was forbidden, i.e. the basis was the unit
  /// ideal; the language is then empty.
  bool unit_ideal() const { return unit_ideal_; }

  bool accepts(const Word& w) const;

  /// True iff the language is finite (the live transition graph is acyclic).
  bool is_finite() const;

  /// All normal words of degree <= max_degree, deglex sorted.
  std::vector<Word> normal_words_up_to(std::size_t max_degree) const;
  /// Every normal word; requires is_finite().
  std::vector<Word> all_normal_words() const;

  /// dims[d] = number of normal words of degree d, by transfer counting over
  /// live states; exact arbitrary-precision counts.
  GradedDims graded_dims(std::size_t max_degree) const;

  std::size_t state_count() const { return states_.size(); }

 private:
  struct State {
    std::vector<std::uint32_t> next;  // one entry per letter
    bool dead = false;
  };
  std::vector<State> states_;
  Alphabet alphabet_;
  bool unit_ideal_ = false;
};

/// One table entry: the coefficient vector of NF(u_i * u_j) over the basis
/// words, stored sparsely as (index, coefficient) pairs sorted by index.
/// Disengaged when the normal form leaves a degree-bounded word window.
using TableEntry = std::optional<std::vector<std::pair<std::size_t, Rational>>>;

struct MultiplicationTable {
  std::vector<Word> basis_words;
  std::vector<TableEntry> entries;  // row-major, basis_words.size()^2
  bool windowed = false;            // some product left the word window

  const TableEntry& at(std::size_t i, std::size_t j) const {
    return entries[i * basis_words.size() + j];
  }
};

/// Structure constants of the quotient over the given basis words. The
/// basis must come from a completed Groebner basis; for a finite quotient
/// pass all normal words, otherwise a degree window (entries falling outside
/// it are disengaged and the table is flagged).
MultiplicationTable multiplication_table(const std::vector<Polynomial>& groebner_basis,
                                         const std::vector<Word>& basis_words,
                                         bool parallel = false);

}  // namespace ncgb

#endif
