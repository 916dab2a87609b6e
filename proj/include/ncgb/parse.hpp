// Text forms: words, polynomial expressions, presentation files, and
// structure-constants files.
#ifndef NCGB_PARSE_HPP
#define NCGB_PARSE_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncgb/poly.hpp"

namespace ncgb {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

/// Word grammar: (letter['^'int])+ with optional '*' separators; the bare
/// token "1" is the empty word. E.g. "a^2*b*c" == "aabc".
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// expr := term (('+'|'-') term)*, term := [rational]['*']word, with an
/// optional leading '-'. Whitespace separates tokens, never letters.
Polynomial parse_polynomial(std::string_view text, const Alphabet& alphabet);

struct Presentation;  // defined in groebner.hpp

/// Line-oriented presentation files:
///   alphabet: a b c
///   label: anything          (optional)
///   relations:
///   c^2 - b - a
///   cb + bc - c
/// '#' starts a comment anywhere on a line.
Presentation parse_presentation(std::istream& in);
Presentation parse_presentation_text(const std::string& text);
Presentation load_presentation(const std::string& path);

}  // namespace ncgb

#endif
