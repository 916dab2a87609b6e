#include "ncgb/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ncgb/groebner.hpp"

namespace ncgb {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Unsigned integer literal.
std::string read_digits(Cursor& c) {
  std::size_t start = c.pos;
  while (!c.done() && is_digit(c.peek())) ++c.pos;
  if (c.pos == start) c.fail("expected a digit");
  return std::string(c.text.substr(start, c.pos - start));
}

// [int][/int]; caller guarantees the first char is a digit.
Rational read_rational(Cursor& c) {
  std::string num = read_digits(c);
  if (!c.done() && c.peek() == '/') {
    ++c.pos;
    std::string den = read_digits(c);
    if (den == "0") c.fail("zero denominator");
    return Rational::from_string(num + "/" + den);
  }
  return Rational::from_string(num);
}

// (letter['^'int])+ with optional '*' separators. Returns false if the
// cursor does not start a word.
bool read_word(Cursor& c, const Alphabet& alphabet, Word* out) {
  std::string idx;
  bool first = true;
  while (!c.done()) {
    std::size_t mark = c.pos;
    if (!first && c.peek() == '*') ++c.pos;
    if (c.done() || !std::isalpha(static_cast<unsigned char>(c.peek()))) {
      c.pos = mark;
      break;
    }
    char name = c.peek();
    auto letter = alphabet.index_of(name);
    if (!letter) c.fail(std::string("letter '") + name + "' is not in the alphabet");
    ++c.pos;
    std::size_t count = 1;
    if (!c.done() && c.peek() == '^') {
      ++c.pos;
      count = std::stoul(read_digits(c));
    }
    idx.append(count, char(*letter));
    first = false;
  }
  if (first) return false;
  *out = Word(std::move(idx));
  return true;
}

// term := [rational]['*']word | rational | '1'
Term read_term(Cursor& c, const Alphabet& alphabet) {
  Rational coeff = 1;
  bool have_coeff = false;
  if (!c.done() && is_digit(c.peek())) {
    // The bare token "1" (not followed by more digits, '/', '*' or letters)
    // denotes the empty word.
    coeff = read_rational(c);
    have_coeff = true;
  }
  if (have_coeff && !c.done() && c.peek() == '*') {
    std::size_t mark = c.pos;
    ++c.pos;
    if (!c.done() && c.peek() == '1' &&
        (c.pos + 1 >= c.text.size() || !is_digit(c.text[c.pos + 1]))) {
      ++c.pos;  // explicit empty word, e.g. "2*1"
      return Term{coeff, Word()};
    }
    Word w;
    if (!read_word(c, alphabet, &w)) {
      c.pos = mark;
      c.fail("expected a word after '*'");
    }
    return Term{coeff, w};
  }
  Word w;
  if (read_word(c, alphabet, &w)) return Term{coeff, w};
  if (!have_coeff) c.fail("expected a term");
  return Term{coeff, Word()};  // bare rational; covers the empty word "1"
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Cursor c{text};
  c.skip_ws();
  if (c.done()) c.fail("empty word text");
  if (c.peek() == '1') {
    ++c.pos;
    c.skip_ws();
    if (!c.done()) c.fail("trailing input after the empty word");
    return Word();
  }
  Word w;
  if (!read_word(c, alphabet, &w)) c.fail("expected a word");
  c.skip_ws();
  if (!c.done()) c.fail("trailing input after the word");
  return w;
}

Polynomial parse_polynomial(std::string_view text, const Alphabet& alphabet) {
  Cursor c{text};
  std::vector<std::pair<Rational, Word>> raw;
  c.skip_ws();
  if (c.done()) c.fail("empty polynomial");
  bool negate = false;
  if (c.peek() == '-') {
    negate = true;
    ++c.pos;
    c.skip_ws();
  } else if (c.peek() == '+') {
    ++c.pos;
    c.skip_ws();
  }
  while (true) {
    Term t = read_term(c, alphabet);
    raw.emplace_back(negate ? -t.coeff : t.coeff, t.mono);
    c.skip_ws();
    if (c.done()) break;
    if (c.peek() == '+') {
      negate = false;
    } else if (c.peek() == '-') {
      negate = true;
    } else {
      c.fail("expected '+', '-' or end of input");
    }
    ++c.pos;
    c.skip_ws();
    if (c.done()) c.fail("dangling operator");
  }
  return Polynomial::from_terms(alphabet, std::move(raw));
}

namespace {

std::string strip(std::string s) {
  auto issp = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
  std::size_t b = 0, e = s.size();
  while (b < e && issp(s[b])) ++b;
  while (e > b && issp(s[e - 1])) --e;
  return s.substr(b, e - b);
}

}  // namespace

Presentation parse_presentation(std::istream& in) {
  Presentation p;
  bool have_alphabet = false;
  bool in_relations = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = strip(line);
    if (line.empty()) continue;
    if (line.rfind("alphabet:", 0) == 0) {
      std::string letters;
      std::istringstream ss(line.substr(9));
      std::string tok;
      while (ss >> tok) {
        if (tok.size() != 1)
          throw ParseError("alphabet letters must be single characters, got '" + tok + "'",
                           lineno);
        letters += tok;
      }
      p.alphabet = Alphabet(letters);
      have_alphabet = true;
    } else if (line.rfind("label:", 0) == 0) {
      p.label = strip(line.substr(6));
    } else if (line == "relations:") {
      if (!have_alphabet) throw ParseError("relations before alphabet", lineno);
      in_relations = true;
    } else if (in_relations) {
      p.generators.push_back(parse_polynomial(line, p.alphabet));
    } else {
      throw ParseError("unexpected line '" + line + "'", lineno);
    }
  }
  if (!have_alphabet) throw ParseError("missing alphabet declaration", lineno);
  return p;
}

Presentation parse_presentation_text(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open presentation file '" + path + "'");
  return parse_presentation(in);
}

}  // namespace ncgb
