#include "ncgb/groebner.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ncgb {

std::string status_name(CompletionStatus s) {
  switch (s) {
    case CompletionStatus::Complete: return "Complete";
    case CompletionStatus::TruncatedAtDegree: return "TruncatedAtDegree";
    case CompletionStatus::IterationLimit: return "IterationLimit";
    case CompletionStatus::SizeLimit: return "SizeLimit";
    case CompletionStatus::UnitIdeal: return "UnitIdeal";
  }
  return "?";
}

Polynomial composition(const Polynomial& g, const Polynomial& h, const Overlap& o) {
  if (!g.is_monic() || !h.is_monic())
    throw std::invalid_argument("composition: generators must be monic");
  if (!(o.left * o.common == g.lm()) || !(o.common * o.right == h.lm()))
    throw std::invalid_argument("composition: overlap does not match the leading monomials");
  return sandwich(Word(), g, o.right) - sandwich(o.left, h, Word());
}

namespace {

struct CompositionTask {
  std::size_t g, h;
  Overlap overlap;
};

// Collects the overlap tasks of a self-reduced monic set, in list order with
// overlaps by increasing common length. Tasks whose overlap word would
// exceed `max_degree` are dropped and flagged.
std::vector<CompositionTask> collect_tasks(const std::vector<Polynomial>& basis,
                                           std::optional<int> max_degree, bool* skipped) {
  std::vector<CompositionTask> tasks;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      for (Overlap& o : proper_overlaps(basis[i].lm(), basis[j].lm())) {
        std::size_t t_degree = o.left.degree() + o.common.degree() + o.right.degree();
        if (max_degree && t_degree > std::size_t(*max_degree)) {
          if (skipped) *skipped = true;
          continue;
        }
        tasks.push_back(CompositionTask{i, j, std::move(o)});
      }
    }
  }
  return tasks;
}

// The data-parallel kernel: evaluate composition -> normal form -> standard
// form for every task. Results are merged by sort + dedup, so the parallel
// and serial paths produce identical output.
std::vector<Polynomial> run_tasks(const std::vector<Polynomial>& basis,
                                  const std::vector<CompositionTask>& tasks, bool parallel) {
  Reducer reducer(basis);
  std::vector<Polynomial> results(tasks.size());
  auto work = [&](std::size_t k) {
    const CompositionTask& t = tasks[k];
    Polynomial s = composition(basis[t.g], basis[t.h], t.overlap).standard_form();
    results[k] = reducer.normal_form(s).standard_form();
  };
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < long(tasks.size()); ++k) work(std::size_t(k));
  } else {
    for (std::size_t k = 0; k < tasks.size(); ++k) work(k);
  }
#else
  (void)parallel;
  for (std::size_t k = 0; k < tasks.size(); ++k) work(k);
#endif
  std::vector<Polynomial> out;
  out.reserve(results.size());
  for (Polynomial& p : results)
    if (!p.is_zero()) out.push_back(std::move(p));
  sort_unique(out);
  return out;
}

std::vector<Polynomial> compositions_bounded(const std::vector<Polynomial>& basis,
                                             std::optional<int> max_degree, bool* skipped,
                                             bool parallel) {
  return run_tasks(basis, collect_tasks(basis, max_degree, skipped), parallel);
}

bool contains_unit(const std::vector<Polynomial>& basis) {
  return basis.size() == 1 && basis[0].is_constant();
}

}  // namespace

std::vector<Polynomial> all_compositions(const std::vector<Polynomial>& basis, bool parallel) {
  return compositions_bounded(basis, std::nullopt, nullptr, parallel);
}

CompletionResult complete(const Presentation& p, const CompletionConfig& cfg) {
  CompletionResult res;
  res.basis = self_reduce(p.generators);
  if (contains_unit(res.basis)) {
    res.status = CompletionStatus::UnitIdeal;
    return res;
  }
  bool skipped_any = false;
  int iter = 0;
  while (true) {
    bool skipped = false;
    std::vector<Polynomial> comps =
        compositions_bounded(res.basis, cfg.max_degree, &skipped, cfg.parallel);
    skipped_any |= skipped;
    ++iter;
    IterationStats stats;
    stats.generators_in = res.basis.size();
    stats.distinct_nonzero_compositions = comps.size();
    if (comps.empty()) {
      stats.generators_out = res.basis.size();
      res.iterations.push_back(stats);
      if (skipped_any) {
        res.status = CompletionStatus::TruncatedAtDegree;
        res.truncation_degree = *cfg.max_degree;
      } else {
        res.status = CompletionStatus::Complete;
      }
      return res;
    }
    std::vector<Polynomial> next = res.basis;
    next.insert(next.end(), comps.begin(), comps.end());
    res.basis = self_reduce(std::move(next));
    stats.generators_out = res.basis.size();
    res.iterations.push_back(stats);
    if (cfg.record_snapshots) res.snapshots.push_back(res.basis);
    if (contains_unit(res.basis)) {
      res.status = CompletionStatus::UnitIdeal;
      return res;
    }
    if (cfg.max_iterations && iter >= *cfg.max_iterations) {
      res.status = CompletionStatus::IterationLimit;
      return res;
    }
    if (cfg.max_basis_size && res.basis.size() >= std::size_t(*cfg.max_basis_size)) {
      res.status = CompletionStatus::SizeLimit;
      return res;
    }
  }
}

bool is_groebner(const std::vector<Polynomial>& basis, bool parallel) {
  return all_compositions(basis, parallel).empty();
}

IdealCompare ideals_equal(const std::vector<Polynomial>& g1, const std::vector<Polynomial>& g2,
                          const Alphabet& alphabet, const CompletionConfig& cfg) {
  CompletionResult r1 = complete(Presentation{alphabet, g1, ""}, cfg);
  CompletionResult r2 = complete(Presentation{alphabet, g2, ""}, cfg);
  enum class Dir { Contained, NotContained, Unknown };
  auto contained = [](const std::vector<Polynomial>& gens, const CompletionResult& other) {
    bool complete_basis = other.status == CompletionStatus::Complete ||
                          other.status == CompletionStatus::UnitIdeal;
    if (other.basis.empty()) {
      bool all_zero = std::all_of(gens.begin(), gens.end(),
                                  [](const Polynomial& g) { return g.is_zero(); });
      if (all_zero) return Dir::Contained;
      return complete_basis ? Dir::NotContained : Dir::Unknown;
    }
    Reducer reducer(other.basis);
    for (const Polynomial& g : gens) {
      if (!reducer.normal_form(g).is_zero()) {
        // Zero reductions certify membership even against a truncated basis,
        // but a nonzero one is decisive only when the basis is complete.
        return complete_basis ? Dir::NotContained : Dir::Unknown;
      }
    }
    return Dir::Contained;
  };
  Dir fwd = contained(g1, r2);
  Dir bwd = contained(g2, r1);
  if (fwd == Dir::Contained && bwd == Dir::Contained) return IdealCompare::Equal;
  if (fwd == Dir::NotContained || bwd == Dir::NotContained) return IdealCompare::NotEqual;
  return IdealCompare::Inconclusive;
}

}  // namespace ncgb
