#include "ncgb/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncgb {

namespace {

void check_same_alphabet(const Polynomial& a, const Polynomial& b) {
  // A zero over the empty alphabet combines with anything.
  if (a.is_zero() && a.alphabet().size() == 0) return;
  if (b.is_zero() && b.alphabet().size() == 0) return;
  if (!(a.alphabet() == b.alphabet()))
    throw std::invalid_argument("Polynomial: mixed alphabets");
}

bool desc(const Term& s, const Term& t) {
  return compare_deglex(s.mono, t.mono) == std::strong_ordering::greater;
}

}  // namespace

Polynomial Polynomial::monomial(const Alphabet& a, Rational c, Word w) {
  Polynomial p(a);
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(c), std::move(w)});
  return p;
}

Polynomial Polynomial::from_terms(const Alphabet& a, std::vector<std::pair<Rational, Word>> raw) {
  std::vector<Term> ts;
  ts.reserve(raw.size());
  for (auto& [c, w] : raw) ts.push_back(Term{std::move(c), std::move(w)});
  std::sort(ts.begin(), ts.end(), desc);
  Polynomial p(a);
  for (auto& t : ts) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Word& Polynomial::lm() const {
  if (is_zero()) throw std::logic_error("Polynomial: LM of zero");
  return terms_.front().mono;
}

const Rational& Polynomial::lc() const {
  if (is_zero()) throw std::logic_error("Polynomial: lc of zero");
  return terms_.front().coeff;
}

Polynomial Polynomial::standard_form() const {
  if (is_zero()) return *this;
  if (is_monic()) return *this;
  return lc().inverse() * *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(alphabet_);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back(Term{-t.coeff, t.mono});
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_alphabet(*this, o);
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    auto c = compare_deglex(terms_[i].mono, o.terms_[j].mono);
    if (c == std::strong_ordering::greater) {
      merged.push_back(std::move(terms_[i++]));
    } else if (c == std::strong_ordering::less) {
      merged.push_back(o.terms_[j++]);
    } else {
      Rational sum = terms_[i].coeff + o.terms_[j].coeff;
      if (!sum.is_zero()) merged.push_back(Term{std::move(sum), terms_[i].mono});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) merged.push_back(std::move(terms_[i]));
  for (; j < o.terms_.size(); ++j) merged.push_back(o.terms_[j]);
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  check_same_alphabet(p, q);
  const Alphabet& a = p.alphabet().size() ? p.alphabet() : q.alphabet();
  std::vector<std::pair<Rational, Word>> raw;
  raw.reserve(p.terms_.size() * q.terms_.size());
  for (const Term& s : p.terms_)
    for (const Term& t : q.terms_) raw.emplace_back(s.coeff * t.coeff, s.mono * t.mono);
  return Polynomial::from_terms(a, std::move(raw));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c.is_zero()) return Polynomial::zero(p.alphabet());
  Polynomial out(p.alphabet());
  out.terms_.reserve(p.terms_.size());
  for (const Term& t : p.terms_) out.terms_.push_back(Term{c * t.coeff, t.mono});
  return out;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    bool neg = t.coeff.sign() < 0;
    if (i == 0) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    Rational c = t.coeff.abs();
    if (t.mono.empty()) {
      out += c.str();
    } else if (c.is_one()) {
      out += t.mono.str(alphabet_);
    } else {
      out += c.str();
      out += '*';
      out += t.mono.str(alphabet_);
    }
  }
  return out;
}

Polynomial sandwich(const Word& u, const Polynomial& g, const Word& v) {
  std::vector<std::pair<Rational, Word>> raw;
  raw.reserve(g.term_count());
  for (const Term& t : g.terms()) raw.emplace_back(t.coeff, u * t.mono * v);
  return Polynomial::from_terms(g.alphabet(), std::move(raw));
}

std::strong_ordering compare_total(const Polynomial& p, const Polynomial& q) {
  std::size_t n = std::min(p.term_count(), q.term_count());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = compare_deglex(p.terms()[i].mono, q.terms()[i].mono);
    if (c != std::strong_ordering::equal) return c;
    auto d = p.terms()[i].coeff <=> q.terms()[i].coeff;
    if (d != std::strong_ordering::equal) return d;
  }
  return p.term_count() <=> q.term_count();
}

void sort_unique(std::vector<Polynomial>& polys) {
  std::sort(polys.begin(), polys.end(), total_less);
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
}

}  // namespace ncgb
