// Noncommutative polynomials in canonical form: nonzero terms in strictly
// descending deglex order of their monomials.
#ifndef NCGB_POLY_HPP
#define NCGB_POLY_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "ncgb/rational.hpp"
#include "ncgb/words.hpp"

namespace ncgb {

struct Term {
  Rational coeff;  // never zero in a canonical polynomial
  Word mono;

  friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
 public:
  Polynomial() = default;  // zero over the empty alphabet
  explicit Polynomial(Alphabet a) : alphabet_(std::move(a)) {}

  static Polynomial zero(const Alphabet& a) { return Polynomial(a); }
  static Polynomial one(const Alphabet& a) { return monomial(a, 1, Word()); }
  static Polynomial monomial(const Alphabet& a, Rational c, Word w);
  /// Combines like terms, drops zeros, sorts strictly descending.
  static Polynomial from_terms(const Alphabet& a, std::vector<std::pair<Rational, Word>> raw);

  bool is_zero() const { return terms_.empty(); }
  /// True for a nonzero scalar multiple of the empty word.
  bool is_constant() const { return terms_.size() == 1 && terms_[0].mono.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Alphabet& alphabet() const { return alphabet_; }

  const Word& lm() const;       // leading monomial; undefined on zero (throws)
  const Rational& lc() const;   // leading coefficient
  bool is_monic() const { return !is_zero() && lc().is_one(); }
  std::size_t degree() const { return is_zero() ? 0 : lm().degree(); }

  /// Monic scalar multiple with the same support; zero maps to zero.
  Polynomial standard_form() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Canonical text: terms joined by " + " / " - ", coefficient 1 suppressed,
  /// e.g. "c^2 - b - a" or "2*a^2b - 1/2*c".
  std::string str() const;

 private:
  Alphabet alphabet_;
  std::vector<Term> terms_;  // strictly descending deglex
};

/// u * g * v for words u, v.
Polynomial sandwich(const Word& u, const Polynomial& g, const Word& v);

/// Deterministic total order used to sort generator sets: leading monomials
/// by deglex, ties broken by successive (monomial, coefficient) pairs; a
/// strict prefix precedes its extensions; zero precedes everything.
std::strong_ordering compare_total(const Polynomial& p, const Polynomial& q);

inline bool total_less(const Polynomial& p, const Polynomial& q) {
  return compare_total(p, q) == std::strong_ordering::less;
}

/// Sorts ascending by the total order and removes exact duplicates.
void sort_unique(std::vector<Polynomial>& polys);

}  // namespace ncgb

#endif
