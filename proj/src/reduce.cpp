#include "ncgb/reduce.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncgb {

bool trace_consistent(const ReductionTrace& trace) {
  Polynomial acc = trace.input;
  for (const ReductionStep& s : trace.steps) acc -= s.subtracted;
  return acc == trace.output;
}

Reducer::Reducer(std::vector<Polynomial> generators) : gens_(std::move(generators)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const Polynomial& g = gens_[i];
    if (g.is_zero()) throw std::invalid_argument("Reducer: zero generator");
    if (!g.is_monic()) throw std::invalid_argument("Reducer: generator is not monic");
    if (g.lm().empty()) any_constant_ = true;
    max_lm_degree_ = std::max(max_lm_degree_, g.lm().degree());
    lm_index_[g.lm().indices()].push_back(i);
  }
}

// Fixed strategy pick for one monomial: the applicable generator with the
// deglex-smallest leading monomial (ties by the total order), leftmost
// occurrence of that monomial. Shorter words always precede longer ones in
// deglex, so the length scan stops at the first length with a hit.
bool Reducer::find_fixed(const Word& mono, std::size_t limit, Hit* hit) const {
  const std::string& w = mono.indices();
  const Polynomial* best = nullptr;
  std::size_t best_gen = 0;
  auto consider = [&](std::size_t gen) {
    const Polynomial& g = gens_[gen];
    if (best == nullptr ||
        compare_deglex(g.lm(), best->lm()) == std::strong_ordering::less ||
        (g.lm() == best->lm() && total_less(g, *best))) {
      best = &g, best_gen = gen;
    }
  };
  if (any_constant_) {
    // A nonzero constant generator divides every monomial.
    auto it = lm_index_.find(std::string());
    if (it != lm_index_.end())
      for (std::size_t gen : it->second)
        if (gen < limit) consider(gen);
    if (best) {
      *hit = Hit{best_gen, 0};
      return true;
    }
  }
  std::size_t max_len = std::min(max_lm_degree_, w.size());
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::size_t pos = 0; pos + len <= w.size(); ++pos) {
      auto it = lm_index_.find(w.substr(pos, len));
      if (it == lm_index_.end()) continue;
      for (std::size_t gen : it->second)
        if (gen < limit) consider(gen);
    }
    if (best) break;
  }
  if (best == nullptr) return false;
  *hit = Hit{best_gen, w.find(best->lm().indices())};
  return true;
}

void Reducer::find_all(const Word& mono, std::size_t limit, std::vector<Hit>* hits) const {
  const std::string& w = mono.indices();
  if (any_constant_) {
    auto it = lm_index_.find(std::string());
    if (it != lm_index_.end())
      for (std::size_t gen : it->second)
        if (gen < limit) hits->push_back(Hit{gen, 0});
  }
  std::size_t max_len = std::min(max_lm_degree_, w.size());
  for (std::size_t len = 1; len <= max_len; ++len)
    for (std::size_t pos = 0; pos + len <= w.size(); ++pos) {
      auto it = lm_index_.find(w.substr(pos, len));
      if (it == lm_index_.end()) continue;
      for (std::size_t gen : it->second)
        if (gen < limit) hits->push_back(Hit{gen, pos});
    }
}

Polynomial Reducer::normal_form_prefix(const Polynomial& f, std::size_t limit,
                                       const ReduceOptions& opts, ReductionTrace* trace) const {
  if (trace) {
    trace->input = f;
    trace->steps.clear();
  }
  Polynomial cur = f;
  // Terms above `skip` are already known irreducible; a reduction at term i
  // only touches monomials strictly below the eliminated one.
  std::size_t skip = 0;
  while (!cur.is_zero()) {
    std::size_t term_idx = 0;
    Hit hit{};
    bool found = false;
    if (opts.strategy == ReduceOptions::Strategy::Fixed) {
      for (std::size_t i = skip; i < cur.term_count() && !found; ++i) {
        if (find_fixed(cur.terms()[i].mono, limit, &hit)) {
          term_idx = i;
          found = true;
        }
      }
      if (found) skip = term_idx;
    } else {
      if (opts.rng == nullptr)
        throw std::invalid_argument("normal_form: random strategy needs an rng");
      std::vector<std::pair<std::size_t, Hit>> all;
      for (std::size_t i = 0; i < cur.term_count(); ++i) {
        std::vector<Hit> hits;
        find_all(cur.terms()[i].mono, limit, &hits);
        for (const Hit& h : hits) all.emplace_back(i, h);
      }
      if (!all.empty()) {
        auto& pick = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(*opts.rng)];
        term_idx = pick.first;
        hit = pick.second;
        found = true;
      }
    }
    if (!found) break;

    const Term& t = cur.terms()[term_idx];
    const Polynomial& g = gens_[hit.generator];
    Word u1 = t.mono.prefix(hit.occurrence);
    Word u2 = t.mono.subword(hit.occurrence + g.lm().degree(),
                             t.mono.degree() - hit.occurrence - g.lm().degree());
    Polynomial sub = t.coeff * sandwich(u1, g, u2);
    if (trace)
      trace->steps.push_back(
          ReductionStep{term_idx, hit.generator, hit.occurrence, u1, u2, t.coeff, sub});
    cur -= sub;
  }
  if (trace) trace->output = cur;
  return cur;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& generators,
                       const ReduceOptions& opts, ReductionTrace* trace) {
  return Reducer(generators).normal_form(f, opts, trace);
}

std::vector<Polynomial> self_reduce(std::vector<Polynomial> generators,
                                    std::vector<ReductionTrace>* log) {
  std::vector<Polynomial> cur;
  Alphabet alphabet;
  for (Polynomial& g : generators) {
    if (g.alphabet().size() > 0) alphabet = g.alphabet();
    if (!g.is_zero()) cur.push_back(g.standard_form());
  }
  auto unit_set = [&] { return std::vector<Polynomial>{Polynomial::one(alphabet)}; };
  for (const Polynomial& g : cur)
    if (g.is_constant()) return unit_set();

  constexpr int kPassLimit = 10000;
  for (int pass = 0; pass < kPassLimit; ++pass) {
    sort_unique(cur);
    Reducer reducer(cur);
    std::vector<Polynomial> next;
    next.reserve(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      ReductionTrace trace;
      Polynomial nf =
          reducer.normal_form_prefix(cur[i], i, {}, log ? &trace : nullptr);
      if (log) log->push_back(std::move(trace));
      if (nf.is_zero()) continue;
      if (nf.lm().empty()) return unit_set();
      next.push_back(nf.standard_form());
    }
    sort_unique(next);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw std::runtime_error("self_reduce: pass limit exceeded");
}

}  // namespace ncgb
