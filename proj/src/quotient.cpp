#include "ncgb/quotient.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "ncgb/reduce.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ncgb {

NormalWordAutomaton NormalWordAutomaton::build(const Alphabet& alphabet,
                                               const std::vector<Word>& forbidden) {
  NormalWordAutomaton a;
  a.alphabet_ = alphabet;
  std::size_t k = alphabet.size();

  // Prefix trie.
  struct Node {
    std::vector<std::int64_t> child;
    bool terminal = false;
    std::uint32_t suffix = 0;
  };
  std::vector<Node> trie(1, Node{std::vector<std::int64_t>(k, -1), false, 0});
  for (const Word& w : forbidden) {
    if (w.empty()) {
      a.unit_ideal_ = true;
      continue;
    }
    std::size_t cur = 0;
    for (std::size_t i = 0; i < w.degree(); ++i) {
      std::size_t c = w.letter(i);
      if (c >= k) throw std::invalid_argument("automaton: word letter outside the alphabet");
      if (trie[cur].child[c] < 0) {
        trie[cur].child[c] = std::int64_t(trie.size());
        trie.push_back(Node{std::vector<std::int64_t>(k, -1), false, 0});
      }
      cur = std::size_t(trie[cur].child[c]);
    }
    trie[cur].terminal = true;
  }

  // Breadth-first suffix links; a state is dead when it or any suffix of it
  // completes a forbidden word.
  a.states_.assign(trie.size(), State{std::vector<std::uint32_t>(k, 0), false});
  a.states_[0].dead = a.unit_ideal_ || trie[0].terminal;
  std::deque<std::size_t> queue;
  for (std::size_t c = 0; c < k; ++c) {
    std::int64_t child = trie[0].child[c];
    if (child < 0) continue;
    trie[child].suffix = 0;
    a.states_[0].next[c] = std::uint32_t(child);
    queue.push_back(std::size_t(child));
  }
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    a.states_[s].dead = trie[s].terminal || a.states_[trie[s].suffix].dead;
    for (std::size_t c = 0; c < k; ++c) {
      std::int64_t child = trie[s].child[c];
      std::uint32_t fallback = a.states_[trie[s].suffix].next[c];
      if (child < 0) {
        a.states_[s].next[c] = fallback;
      } else {
        trie[child].suffix = fallback;
        a.states_[s].next[c] = std::uint32_t(child);
        queue.push_back(std::size_t(child));
      }
    }
  }
  // Dead is absorbing for every purpose here; collapse outgoing edges.
  for (State& s : a.states_)
    if (s.dead) s.next.assign(k, std::uint32_t(&s - a.states_.data()));
  return a;
}

bool NormalWordAutomaton::accepts(const Word& w) const {
  std::size_t s = 0;
  if (states_[0].dead) return false;
  for (std::size_t i = 0; i < w.degree(); ++i) {
    s = states_[s].next[w.letter(i)];
    if (states_[s].dead) return false;
  }
  return true;
}

bool NormalWordAutomaton::is_finite() const {
  // Cycle detection over live states reachable from the root.
  if (states_[0].dead) return true;
  enum { White, Grey, Black };
  std::vector<int> color(states_.size(), White);
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (state, next letter)
  color[0] = Grey;
  stack.emplace_back(0, 0);
  while (!stack.empty()) {
    auto& [s, c] = stack.back();
    if (c == alphabet_.size()) {
      color[s] = Black;
      stack.pop_back();
      continue;
    }
    std::size_t t = states_[s].next[c++];
    if (states_[t].dead) continue;
    if (color[t] == Grey) return false;
    if (color[t] == White) {
      color[t] = Grey;
      stack.emplace_back(t, 0);
    }
  }
  return true;
}

std::vector<Word> NormalWordAutomaton::normal_words_up_to(std::size_t max_degree) const {
  std::vector<Word> out;
  if (states_[0].dead) return out;
  out.push_back(Word());
  // Level-by-level extension in letter order keeps each level deglex sorted.
  std::vector<std::pair<Word, std::size_t>> level = {{Word(), 0}};
  for (std::size_t d = 1; d <= max_degree && !level.empty(); ++d) {
    std::vector<std::pair<Word, std::size_t>> next;
    for (const auto& [w, s] : level) {
      for (std::size_t c = 0; c < alphabet_.size(); ++c) {
        std::size_t t = states_[s].next[c];
        if (states_[t].dead) continue;
        next.emplace_back(w * Word::single(c), t);
      }
    }
    for (const auto& [w, s] : next) out.push_back(w);
    level = std::move(next);
  }
  return out;
}

std::vector<Word> NormalWordAutomaton::all_normal_words() const {
  if (!is_finite()) throw std::logic_error("all_normal_words: the language is infinite");
  // Longest live path is shorter than the number of live states.
  return normal_words_up_to(states_.size());
}

GradedDims NormalWordAutomaton::graded_dims(std::size_t max_degree) const {
  GradedDims out;
  std::vector<mpz_class> counts(states_.size(), 0);
  if (!states_[0].dead) counts[0] = 1;
  mpz_class total = counts[0];
  out.dims.push_back(total);
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::vector<mpz_class> next(states_.size(), 0);
    for (std::size_t s = 0; s < states_.size(); ++s) {
      if (counts[s] == 0) continue;
      for (std::size_t c = 0; c < alphabet_.size(); ++c) {
        std::size_t t = states_[s].next[c];
        if (!states_[t].dead) next[t] += counts[s];
      }
    }
    counts = std::move(next);
    total = 0;
    for (const mpz_class& v : counts) total += v;
    out.dims.push_back(total);
  }
  return out;
}

MultiplicationTable multiplication_table(const std::vector<Polynomial>& groebner_basis,
                                         const std::vector<Word>& basis_words,
                                         bool parallel) {
  MultiplicationTable table;
  table.basis_words = basis_words;
  std::size_t n = basis_words.size();
  table.entries.assign(n * n, std::nullopt);
  if (n == 0) return table;

  const Alphabet& alphabet = groebner_basis.empty() ? Alphabet() : groebner_basis[0].alphabet();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[basis_words[i].indices()] = i;

  Reducer reducer(groebner_basis);
  std::vector<char> overflow(n * n, 0);
  auto work = [&](std::size_t cell) {
    std::size_t i = cell / n, j = cell % n;
    Polynomial prod = Polynomial::monomial(alphabet, 1, basis_words[i] * basis_words[j]);
    Polynomial nf = reducer.normal_form(prod);
    std::vector<std::pair<std::size_t, Rational>> entry;
    for (const Term& t : nf.terms()) {
      auto it = index.find(t.mono.indices());
      if (it == index.end()) {
        overflow[cell] = 1;  // product left the word window
        return;
      }
      entry.emplace_back(it->second, t.coeff);
    }
    std::sort(entry.begin(), entry.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    table.entries[cell] = std::move(entry);
  };
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long cell = 0; cell < long(n * n); ++cell) work(std::size_t(cell));
  } else {
    for (std::size_t cell = 0; cell < n * n; ++cell) work(cell);
  }
#else
  (void)parallel;
  for (std::size_t cell = 0; cell < n * n; ++cell) work(cell);
#endif
  table.windowed = std::any_of(overflow.begin(), overflow.end(), [](char v) { return v != 0; });
  return table;
}

}  // namespace ncgb
