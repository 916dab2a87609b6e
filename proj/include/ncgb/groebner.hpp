// Overlap compositions and the completion loop that grows a generating set
// into a (possibly degree-truncated) Groebner basis.
#ifndef NCGB_GROEBNER_HPP
#define NCGB_GROEBNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "ncgb/reduce.hpp"

namespace ncgb {

struct Presentation {
  Alphabet alphabet;
  std::vector<Polynomial> generators;
  std::string label;
};

struct CompletionConfig {
  std::optional<int> max_degree;      // cap on the overlap word of a composition
  std::optional<int> max_iterations;
  std::optional<int> max_basis_size;
  bool record_snapshots = false;
  bool parallel = true;               // OpenMP kernel; false = serial reference
};

enum class CompletionStatus { Complete, TruncatedAtDegree, IterationLimit, SizeLimit, UnitIdeal };

std::string status_name(CompletionStatus s);

struct IterationStats {
  std::size_t generators_in = 0;
  std::size_t distinct_nonzero_compositions = 0;
  std::size_t generators_out = 0;
};

struct CompletionResult {
  std::vector<Polynomial> basis;
  CompletionStatus status = CompletionStatus::Complete;
  int truncation_degree = 0;  // meaningful when status == TruncatedAtDegree
  std::vector<IterationStats> iterations;
  // self-reduced generating set after each iteration that added elements
  std::vector<std::vector<Polynomial>> snapshots;
};

/// g * right - left * h for an overlap of LM(g) and LM(h); the shared
/// leading word left * common * right cancels exactly. Both inputs must be
/// monic and the overlap must match their leading monomials.
Polynomial composition(const Polynomial& g, const Polynomial& h, const Overlap& o);

/// Normal forms of all compositions of a self-reduced monic set against
/// itself: standard forms, zeros dropped, duplicates removed, sorted by the
/// total polynomial order. Pairs are scanned in list order (g outer, h
/// inner) with overlaps by increasing common length; with `parallel` the
/// per-composition work is distributed but the result is identical.
std::vector<Polynomial> all_compositions(const std::vector<Polynomial>& basis,
                                         bool parallel = false);

CompletionResult complete(const Presentation& p, const CompletionConfig& cfg);

/// True iff every composition reduces to zero. Expects a self-reduced monic
/// set.
bool is_groebner(const std::vector<Polynomial>& basis, bool parallel = false);

enum class IdealCompare { Equal, NotEqual, Inconclusive };

/// Completes both sides under cfg and reduces each generator against the
/// other side's basis. All-zero reductions certify equality even when a
/// completion was truncated (a truncated basis still sits inside the ideal);
/// a nonzero reduction is decisive only against a Complete basis.
IdealCompare ideals_equal(const std::vector<Polynomial>& g1, const std::vector<Polynomial>& g2,
                          const Alphabet& alphabet, const CompletionConfig& cfg);

}  // namespace ncgb

#endif
