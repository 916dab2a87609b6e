// The free monoid over a finite ordered alphabet: words, the deglex order,
// factor search, and overlap enumeration.
#ifndef NCGB_WORDS_HPP
#define NCGB_WORDS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ncgb {

constexpr std::size_t kMaxLetters = 64;

/// Ordered list of distinct single-character letters; the position in the
/// list is the precedence rank used by the deglex order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string_view letters);

  std::size_t size() const { return letters_.size(); }
  char name(std::size_t i) const { return letters_[i]; }
  std::optional<std::size_t> index_of(char c) const;
  const std::string& letters() const { return letters_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string letters_;
};

/// A word is a sequence of letter indices (one byte each); the empty
/// sequence is the unit word 1. Words are plain values with no alphabet
/// pointer; callers keep words and alphabets paired.
class Word {
 public:
  Word() = default;
  explicit Word(std::string indices) : idx_(std::move(indices)) {}
  static Word single(std::size_t letter) { return Word(std::string(1, char(letter))); }

  std::size_t degree() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  std::size_t letter(std::size_t pos) const { return std::size_t(std::uint8_t(idx_[pos])); }
  const std::string& indices() const { return idx_; }

  Word subword(std::size_t pos, std::size_t len) const { return Word(idx_.substr(pos, len)); }
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const { return subword(idx_.size() - len, len); }

  friend Word operator*(const Word& a, const Word& b) { return Word(a.idx_ + b.idx_); }
  friend bool operator==(const Word&, const Word&) = default;

  /// Rendering with '^' powers for letter runs, e.g. aabc -> "a^2bc";
  /// the empty word prints as "1".
  std::string str(const Alphabet& a) const;

 private:
  std::string idx_;
};

/// Deglex: degree first, then left-to-right letter precedence.
std::strong_ordering compare_deglex(const Word& u, const Word& w);

inline bool deglex_less(const Word& u, const Word& w) {
  return compare_deglex(u, w) == std::strong_ordering::less;
}

/// Start positions (ascending) of every occurrence of `pattern` as a factor
/// of `w`. The empty pattern is a usage error.
std::vector<std::size_t> find_occurrences(const Word& pattern, const Word& w);

inline bool is_factor(const Word& pattern, const Word& w) {
  return !find_occurrences(pattern, w).empty();
}

/// A decomposition w1 = left * common and w2 = common * right with all three
/// parts nonempty.
struct Overlap {
  Word left;    // proper right factor removed from w1
  Word common;  // the shared middle word
  Word right;   // proper left factor removed from w2

  friend bool operator==(const Overlap&, const Overlap&) = default;
};

/// Every proper overlap between w1 and w2, ordered by increasing length of
/// the common part. Requires that neither word is a proper factor of the
/// other (w1 == w2 is fine and yields the self-overlaps).
std::vector<Overlap> proper_overlaps(const Word& w1, const Word& w2);

}  // namespace ncgb

#endif
