#include "ncgb/words.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ncgb {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  if (letters_.size() > kMaxLetters)
    throw std::invalid_argument("Alphabet: at most 64 letters supported");
  for (char c : letters_) {
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw std::invalid_argument(std::string("Alphabet: letter '") + c + "' is not alphabetic");
  }
  for (std::size_t i = 0; i < letters_.size(); ++i)
    for (std::size_t j = i + 1; j < letters_.size(); ++j)
      if (letters_[i] == letters_[j])
        throw std::invalid_argument(std::string("Alphabet: duplicate letter '") + letters_[i] + "'");
}

std::optional<std::size_t> Alphabet::index_of(char c) const {
  auto pos = letters_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

std::string Word::str(const Alphabet& a) const {
  if (idx_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < idx_.size()) {
    std::size_t run = 1;
    while (i + run < idx_.size() && idx_[i + run] == idx_[i]) ++run;
    out += a.name(letter(i));
    if (run > 1) {
      out += '^';
      out += std::to_string(run);
    }
    i += run;
  }
  return out;
}

std::strong_ordering compare_deglex(const Word& u, const Word& w) {
  if (u.degree() != w.degree())
    return u.degree() < w.degree() ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = u.indices().compare(w.indices());
  return c < 0   ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

std::vector<std::size_t> find_occurrences(const Word& pattern, const Word& w) {
  if (pattern.empty()) throw std::invalid_argument("find_occurrences: empty pattern");
  std::vector<std::size_t> out;
  if (pattern.degree() > w.degree()) return out;
  const std::string& hay = w.indices();
  const std::string& pat = pattern.indices();
  std::size_t pos = hay.find(pat);
  while (pos != std::string::npos) {
    out.push_back(pos);
    pos = hay.find(pat, pos + 1);
  }
  return out;
}

std::vector<Overlap> proper_overlaps(const Word& w1, const Word& w2) {
  if (w1.empty() || w2.empty())
    throw std::invalid_argument("proper_overlaps: empty word");
  if (w1.degree() != w2.degree()) {
    const Word& small = w1.degree() < w2.degree() ? w1 : w2;
    const Word& big = w1.degree() < w2.degree() ? w2 : w1;
    if (is_factor(small, big))
      throw std::invalid_argument("proper_overlaps: one word is a proper factor of the other");
  }
  std::vector<Overlap> out;
  std::size_t max_len = std::min(w1.degree(), w2.degree()) - 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    Word v = w1.suffix(len);
    if (v == w2.prefix(len))
      out.push_back(Overlap{w1.prefix(w1.degree() - len), v, w2.suffix(w2.degree() - len)});
  }
  return out;
}

}  // namespace ncgb
