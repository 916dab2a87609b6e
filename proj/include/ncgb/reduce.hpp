// The division algorithm: normal forms of polynomials with respect to a set
// of monic generators, with an auditable trace, plus self-reduction of
// generator sets.
#ifndef NCGB_REDUCE_HPP
#define NCGB_REDUCE_HPP

#include <cstddef>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncgb/poly.hpp"

namespace ncgb {

/// One step f <- f - coeff * left * g * right, eliminating one monomial.
struct ReductionStep {
  std::size_t term_index;   // position of the eliminated monomial in the support
  std::size_t generator;    // index into the generator list
  std::size_t occurrence;   // start of LM(g) inside the monomial
  Word left, right;         // the sandwich words
  Rational coeff;
  Polynomial subtracted;    // coeff * left * g * right
};

struct ReductionTrace {
  Polynomial input;
  Polynomial output;
  std::vector<ReductionStep> steps;
};

/// input - sum(subtracted) == output, checked exactly.
bool trace_consistent(const ReductionTrace& trace);

/// The default strategy is fully deterministic: reduce the deglex-greatest
/// reducible monomial, choose the applicable generator with the deglex
/// smallest leading monomial (ties by the total polynomial order), use the
/// leftmost occurrence. Random exists to exercise confluence in tests.
struct ReduceOptions {
  enum class Strategy { Fixed, Random };
  Strategy strategy = Strategy::Fixed;
  std::mt19937* rng = nullptr;  // required for Random
};

/// Read-only reduction engine over a fixed list of monic generators; safe to
/// share across threads once built.
class Reducer {
 public:
  explicit Reducer(std::vector<Polynomial> generators);

  const std::vector<Polynomial>& generators() const { return gens_; }

  Polynomial normal_form(const Polynomial& f, const ReduceOptions& opts = {},
                         ReductionTrace* trace = nullptr) const {
    return normal_form_prefix(f, gens_.size(), opts, trace);
  }

  /// Normal form with respect to the first `limit` generators only.
  Polynomial normal_form_prefix(const Polynomial& f, std::size_t limit,
                                const ReduceOptions& opts = {},
                                ReductionTrace* trace = nullptr) const;

 private:
  struct Hit {
    std::size_t generator;
    std::size_t occurrence;
  };
  bool find_fixed(const Word& mono, std::size_t limit, Hit* hit) const;
  void find_all(const Word& mono, std::size_t limit, std::vector<Hit>* hits) const;

  std::vector<Polynomial> gens_;
  std::size_t max_lm_degree_ = 0;
  bool any_constant_ = false;
  // exact leading monomial -> generator indices (ascending)
  std::unordered_map<std::string, std::vector<std::size_t>> lm_index_;
};

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& generators,
                       const ReduceOptions& opts = {}, ReductionTrace* trace = nullptr);

/// Fixed point of: sort by the total order, replace each element by the
/// standard form of its normal form with respect to its predecessors, drop
/// zeros. Output is self-reduced and generates the same ideal. A nonzero
/// constant collapses the result to the canonical unit-ideal set {1}.
std::vector<Polynomial> self_reduce(std::vector<Polynomial> generators,
                                    std::vector<ReductionTrace>* log = nullptr);

}  // namespace ncgb

#endif
