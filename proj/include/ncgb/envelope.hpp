// Universal-envelope presentations: generators for the two-sided ideal
// encoding the structure constants of a Lie, Jordan, or general n-ary
// system under a chosen multilinear operation, plus matrix models for
// computing structure constants and a catalog of named operations and
// systems.
#ifndef NCGB_ENVELOPE_HPP
#define NCGB_ENVELOPE_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ncgb/groebner.hpp"

namespace ncgb {

struct EnvelopeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// omega(a_1,...,a_n) = sum of coeff * a_{pattern[0]} ... a_{pattern[n-1]};
/// each pattern is a permutation of {0,...,n-1} describing one monomial.
struct MultilinearOperation {
  int arity = 0;
  std::vector<std::pair<Rational, std::vector<int>>> terms;
  std::string name;
};

/// omega(b_{i_1},...,b_{i_n}) = sum_j table[tuple][j] * b_j; tuples are
/// 0-based, absent tuples are zero.
struct StructureConstants {
  int dimension = 0;
  int arity = 0;
  std::map<std::vector<int>, std::vector<Rational>> table;
  std::string letters;  // optional custom letter names; empty = a, b, c, ...

  const std::vector<Rational>* find(const std::vector<int>& tuple) const {
    auto it = table.find(tuple);
    return it == table.end() ? nullptr : &it->second;
  }
  Alphabet alphabet() const;
};

/// A span of square rational matrices closed under the n-fold products that
/// the paired operation uses; row-major storage.
struct MatrixSystem {
  int ambient = 0;  // matrices are ambient x ambient
  std::vector<std::vector<Rational>> basis;
  std::string name;
  std::string letters;  // optional custom letter names

  int dimension() const { return int(basis.size()); }
};

/// Bracket structure constants (antisymmetric, Jacobi-validated) to the
/// d(d-1)/2 commutator generators x_i x_j - x_j x_i - [x_i, x_j], j < i.
Presentation lie_presentation(const StructureConstants& sc);

/// Symmetric product constants to the d(d+1)/2 generators
/// (x_i x_j + x_j x_i) - x_i o x_j, j <= i, in standard form. The constants
/// must use the same convention (no 1/2 factor) as the catalog's
/// jordan-product.
Presentation jordan_presentation(const StructureConstants& sc);

/// The raw d^n generators, one per index tuple in ascending order; zeros and
/// duplicates included.
std::vector<Polynomial> nary_raw_generators(const MultilinearOperation& op,
                                            const StructureConstants& sc);

/// Self-reduced presentation from the raw d^n generators.
Presentation nary_presentation(const MultilinearOperation& op, const StructureConstants& sc);

/// Evaluates the operation on every basis tuple by matrix arithmetic and
/// expresses the results over the basis (exact linear solve). Throws when a
/// product falls outside the span.
StructureConstants matrix_structure_constants(const MatrixSystem& sys,
                                              const MultilinearOperation& op);

/// Checks that every `arity`-fold associative product of basis elements
/// stays inside the span.
void validate_closure(const MatrixSystem& sys, int arity);

// --- catalog ---------------------------------------------------------------

/// Operation keys: "lie-bracket", "jordan-product" (bilinear); the twenty-two
/// trilinear operations ("symmetric-sum", "alternating-sum", "cyclic-sum",
/// "lie-inf", "lie-half", "jordan-inf", "jordan-0", "jordan-1", "jordan-half",
/// "anti-jordan-inf", "anti-jordan-neg1", "anti-jordan-half", "anti-jordan-2",
/// "fourth-inf", "fourth-0", "fourth-1", "fourth-neg1", "fourth-2",
/// "fourth-half", "cyclic-commutator", "weakly-commutative",
/// "weakly-anticommutative"); and the quadrilinear "tetrad".
std::optional<MultilinearOperation> catalog_operation(const std::string& key);
std::vector<std::string> catalog_operation_keys();

struct SystemPreset {
  std::variant<MatrixSystem, StructureConstants> payload;
  std::string default_operation;  // empty when an explicit --op is required
};

/// System keys: "sl2", "s2", "m2-units", and "a(p,q)" for the simple
/// associative triple systems supported on the two off-diagonal blocks of
/// (p+q) x (p+q) matrices.
std::optional<SystemPreset> catalog_system(const std::string& key);
std::vector<std::string> catalog_system_keys();

/// Builds the presentation for a preset/operation pair, dispatching to the
/// lie, jordan, or n-ary construction as appropriate. `op_key` may be empty
/// when the preset carries a default.
Presentation presentation_from_preset(const std::string& system_key, const std::string& op_key);

/// Same dispatch for explicit structure constants.
Presentation presentation_from_constants(const StructureConstants& sc,
                                         const MultilinearOperation& op);

/// Structure-constants file format:
///   dim 4
///   arity 3
///   1 1 2 -> x_3
///   1 2 1 -> 2*x_1 - 1/2*x_2
/// Omitted tuples are zero; indices are 1-based.
StructureConstants parse_structure_constants(std::istream& in);
StructureConstants load_structure_constants(const std::string& path);

}  // namespace ncgb

#endif
