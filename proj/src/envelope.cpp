#include "ncgb/envelope.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ncgb/parse.hpp"

namespace ncgb {

namespace {

const std::string kDefaultLetters = "abcdefghijklmnopqrstuvwxyz";

std::string letters_for(int dimension, const std::string& custom) {
  if (!custom.empty()) {
    if (int(custom.size()) != dimension)
      throw EnvelopeError("letter names do not match the dimension");
    return custom;
  }
  if (dimension > int(kDefaultLetters.size()))
    throw EnvelopeError("dimension too large for default letter names");
  return kDefaultLetters.substr(0, std::size_t(dimension));
}

Rational coefficient(const StructureConstants& sc, const std::vector<int>& tuple, int j) {
  const std::vector<Rational>* row = sc.find(tuple);
  if (row == nullptr) return 0;
  if (int(row->size()) != sc.dimension)
    throw EnvelopeError("structure constants: wrong coefficient vector length");
  return (*row)[std::size_t(j)];
}

// Linear tail sum_j c^j x_j of the generator for one tuple.
void append_tail(const StructureConstants& sc, const std::vector<int>& tuple,
                 std::vector<std::pair<Rational, Word>>* raw) {
  const std::vector<Rational>* row = sc.find(tuple);
  if (row == nullptr) return;
  if (int(row->size()) != sc.dimension)
    throw EnvelopeError("structure constants: wrong coefficient vector length");
  for (int j = 0; j < sc.dimension; ++j)
    if (!(*row)[std::size_t(j)].is_zero())
      raw->emplace_back(-(*row)[std::size_t(j)], Word::single(std::size_t(j)));
}

std::string tuple_str(const std::vector<int>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(t[i] + 1);
  }
  return s;
}

}  // namespace

Alphabet StructureConstants::alphabet() const {
  return Alphabet(letters_for(dimension, letters));
}

Presentation lie_presentation(const StructureConstants& sc) {
  if (sc.arity != 2) throw EnvelopeError("lie_presentation: arity must be 2");
  int d = sc.dimension;
  // Antisymmetry: c_ii = 0 and c_ij = -c_ji.
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      if (!coefficient(sc, {i, i}, k).is_zero())
        throw EnvelopeError("lie_presentation: [x,x] != 0 at index " + std::to_string(i + 1));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < i; ++j)
      for (int k = 0; k < d; ++k)
        if (!(coefficient(sc, {i, j}, k) + coefficient(sc, {j, i}, k)).is_zero())
          throw EnvelopeError("lie_presentation: bracket not antisymmetric at (" +
                              tuple_str({i, j}) + ")");
  // Jacobi: [[xi,xj],xk] cyclic sum vanishes; the double bracket expands
  // through the constants.
  auto jacobi_term = [&](int i, int j, int k, int l) {
    Rational sum = 0;
    for (int m = 0; m < d; ++m)
      sum += coefficient(sc, {j, k}, m) * coefficient(sc, {i, m}, l);
    return sum;
  };
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          Rational total =
              jacobi_term(i, j, k, l) + jacobi_term(j, k, i, l) + jacobi_term(k, i, j, l);
          if (!total.is_zero())
            throw EnvelopeError("lie_presentation: Jacobi identity fails on (" +
                                tuple_str({i, j, k}) + ")");
        }

  Presentation p;
  p.alphabet = sc.alphabet();
  p.label = "lie envelope";
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < i; ++j) {
      std::vector<std::pair<Rational, Word>> raw;
      raw.emplace_back(1, Word::single(std::size_t(i)) * Word::single(std::size_t(j)));
      raw.emplace_back(-1, Word::single(std::size_t(j)) * Word::single(std::size_t(i)));
      append_tail(sc, {i, j}, &raw);
      p.generators.push_back(Polynomial::from_terms(p.alphabet, std::move(raw)));
    }
  return p;
}

Presentation jordan_presentation(const StructureConstants& sc) {
  if (sc.arity != 2) throw EnvelopeError("jordan_presentation: arity must be 2");
  int d = sc.dimension;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < i; ++j)
      for (int k = 0; k < d; ++k)
        if (!(coefficient(sc, {i, j}, k) - coefficient(sc, {j, i}, k)).is_zero())
          throw EnvelopeError("jordan_presentation: product not symmetric at (" +
                              tuple_str({i, j}) + ")");
  Presentation p;
  p.alphabet = sc.alphabet();
  p.label = "jordan envelope";
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) {
      std::vector<std::pair<Rational, Word>> raw;
      raw.emplace_back(1, Word::single(std::size_t(i)) * Word::single(std::size_t(j)));
      raw.emplace_back(1, Word::single(std::size_t(j)) * Word::single(std::size_t(i)));
      append_tail(sc, {i, j}, &raw);
      Polynomial g = Polynomial::from_terms(p.alphabet, std::move(raw));
      if (!g.is_zero()) p.generators.push_back(g.standard_form());
    }
  return p;
}

std::vector<Polynomial> nary_raw_generators(const MultilinearOperation& op,
                                            const StructureConstants& sc) {
  if (op.arity != sc.arity)
    throw EnvelopeError("nary generators: operation and constants disagree on arity");
  int d = sc.dimension;
  int n = sc.arity;
  Alphabet alphabet = sc.alphabet();
  std::vector<Polynomial> out;
  std::vector<int> tuple(std::size_t(n), 0);
  while (true) {
    std::vector<std::pair<Rational, Word>> raw;
    for (const auto& [coeff, pattern] : op.terms) {
      std::string idx;
      for (int slot : pattern) idx.push_back(char(tuple[std::size_t(slot)]));
      raw.emplace_back(coeff, Word(std::move(idx)));
    }
    append_tail(sc, tuple, &raw);
    out.push_back(Polynomial::from_terms(alphabet, std::move(raw)));
    // next tuple, last index fastest
    int pos = n - 1;
    while (pos >= 0 && tuple[std::size_t(pos)] == d - 1) tuple[std::size_t(pos--)] = 0;
    if (pos < 0) break;
    ++tuple[std::size_t(pos)];
  }
  return out;
}

Presentation nary_presentation(const MultilinearOperation& op, const StructureConstants& sc) {
  Presentation p;
  p.alphabet = sc.alphabet();
  p.label = op.name + " envelope";
  p.generators = self_reduce(nary_raw_generators(op, sc));
  return p;
}

// --- matrix systems ---------------------------------------------------------

namespace {

using Matrix = std::vector<Rational>;  // row-major, m x m

Matrix mat_mul(const Matrix& a, const Matrix& b, int m) {
  Matrix out(std::size_t(m) * std::size_t(m), 0);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      const Rational& aik = a[std::size_t(i * m + k)];
      if (aik.is_zero()) continue;
      for (int j = 0; j < m; ++j) {
        const Rational& bkj = b[std::size_t(k * m + j)];
        if (!bkj.is_zero()) out[std::size_t(i * m + j)] += aik * bkj;
      }
    }
  return out;
}

// Exact coordinates of target in the span of the basis columns, or nullopt.
// Echelon data is prepared once per system and reused for every tuple.
struct SpanSolver {
  int m2;                          // ambient * ambient
  std::vector<Matrix> reduced;     // echelonized basis images
  std::vector<int> pivot;          // pivot coordinate per reduced row
  std::vector<std::vector<Rational>> combo;  // expression over original basis

  explicit SpanSolver(const MatrixSystem& sys) {
    int d = sys.dimension();
    m2 = sys.ambient * sys.ambient;
    for (int v = 0; v < d; ++v) {
      Matrix row = sys.basis[std::size_t(v)];
      if (int(row.size()) != m2) throw EnvelopeError("matrix system: wrong matrix size");
      std::vector<Rational> expr(std::size_t(d), 0);
      expr[std::size_t(v)] = 1;
      eliminate(&row, &expr);
      bool zero = std::all_of(row.begin(), row.end(),
                              [](const Rational& r) { return r.is_zero(); });
      if (zero) throw EnvelopeError("matrix system: basis is linearly dependent");
      normalize_and_store(std::move(row), std::move(expr));
    }
  }

  void eliminate(Matrix* row, std::vector<Rational>* expr) const {
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      const Rational& lead = (*row)[std::size_t(pivot[r])];
      if (lead.is_zero()) continue;
      Rational factor = lead;  // reduced rows are monic at their pivot
      for (int c = 0; c < m2; ++c) (*row)[std::size_t(c)] -= factor * reduced[r][std::size_t(c)];
      if (expr)
        for (std::size_t c = 0; c < expr->size(); ++c)
          (*expr)[c] -= factor * combo[r][c];
    }
  }

  void normalize_and_store(Matrix row, std::vector<Rational> expr) {
    int p = -1;
    for (int c = 0; c < m2; ++c)
      if (!row[std::size_t(c)].is_zero()) {
        p = c;
        break;
      }
    Rational inv = row[std::size_t(p)].inverse();
    for (Rational& r : row) r *= inv;
    for (Rational& r : expr) r *= inv;
    // Back-substitute into earlier rows to keep the echelon reduced.
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      const Rational& f = reduced[r][std::size_t(p)];
      if (f.is_zero()) continue;
      Rational factor = f;
      for (int c = 0; c < m2; ++c) reduced[r][std::size_t(c)] -= factor * row[std::size_t(c)];
      for (std::size_t c = 0; c < expr.size(); ++c) combo[r][c] -= factor * expr[c];
    }
    reduced.push_back(std::move(row));
    pivot.push_back(p);
    combo.push_back(std::move(expr));
  }

  std::optional<std::vector<Rational>> solve(Matrix target) const {
    std::vector<Rational> coords(combo.empty() ? 0 : combo[0].size(), 0);
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      const Rational& lead = target[std::size_t(pivot[r])];
      if (lead.is_zero()) continue;
      Rational factor = lead;
      for (int c = 0; c < m2; ++c) target[std::size_t(c)] -= factor * reduced[r][std::size_t(c)];
      for (std::size_t c = 0; c < coords.size(); ++c) coords[c] += factor * combo[r][c];
    }
    for (const Rational& r : target)
      if (!r.is_zero()) return std::nullopt;
    return coords;
  }
};

}  // namespace

StructureConstants matrix_structure_constants(const MatrixSystem& sys,
                                              const MultilinearOperation& op) {
  SpanSolver solver(sys);
  int d = sys.dimension();
  int n = op.arity;
  StructureConstants sc;
  sc.dimension = d;
  sc.arity = n;
  sc.letters = sys.letters;
  std::vector<int> tuple(std::size_t(n), 0);
  while (true) {
    Matrix total(std::size_t(solver.m2), 0);
    for (const auto& [coeff, pattern] : op.terms) {
      Matrix prod = sys.basis[std::size_t(tuple[std::size_t(pattern[0])])];
      for (int s = 1; s < n; ++s)
        prod = mat_mul(prod, sys.basis[std::size_t(tuple[std::size_t(pattern[std::size_t(s)])])],
                       sys.ambient);
      for (int c = 0; c < solver.m2; ++c)
        if (!prod[std::size_t(c)].is_zero()) total[std::size_t(c)] += coeff * prod[std::size_t(c)];
    }
    auto coords = solver.solve(std::move(total));
    if (!coords)
      throw EnvelopeError("matrix system '" + sys.name + "': operation result at (" +
                          tuple_str(tuple) + ") falls outside the span");
    bool nonzero = std::any_of(coords->begin(), coords->end(),
                               [](const Rational& r) { return !r.is_zero(); });
    if (nonzero) sc.table[tuple] = std::move(*coords);
    int pos = n - 1;
    while (pos >= 0 && tuple[std::size_t(pos)] == d - 1) tuple[std::size_t(pos--)] = 0;
    if (pos < 0) break;
    ++tuple[std::size_t(pos)];
  }
  return sc;
}

void validate_closure(const MatrixSystem& sys, int arity) {
  SpanSolver solver(sys);
  int d = sys.dimension();
  std::vector<int> tuple(std::size_t(arity), 0);
  while (true) {
    Matrix prod = sys.basis[std::size_t(tuple[0])];
    for (int s = 1; s < arity; ++s)
      prod = mat_mul(prod, sys.basis[std::size_t(tuple[std::size_t(s)])], sys.ambient);
    if (!solver.solve(std::move(prod)))
      throw EnvelopeError("matrix system '" + sys.name + "': not closed under " +
                          std::to_string(arity) + "-fold products at (" + tuple_str(tuple) + ")");
    int pos = arity - 1;
    while (pos >= 0 && tuple[std::size_t(pos)] == d - 1) tuple[std::size_t(pos--)] = 0;
    if (pos < 0) break;
    ++tuple[std::size_t(pos)];
  }
}

// --- catalog ----------------------------------------------------------------

namespace {

// Permutation patterns from display words over 'a','b','c',... : "acb" means
// slots (0,2,1).
MultilinearOperation make_op(const std::string& name, int arity,
                             std::initializer_list<std::pair<int, const char*>> terms) {
  MultilinearOperation op;
  op.arity = arity;
  op.name = name;
  for (const auto& [coeff, word] : terms) {
    std::vector<int> pattern;
    for (const char* c = word; *c; ++c) pattern.push_back(*c - 'a');
    op.terms.emplace_back(coeff, std::move(pattern));
  }
  return op;
}

const std::vector<std::pair<std::string, MultilinearOperation>>& operation_catalog() {
  static const std::vector<std::pair<std::string, MultilinearOperation>> ops = [] {
    std::vector<std::pair<std::string, MultilinearOperation>> v;
    auto add = [&](const std::string& key, MultilinearOperation op) {
      v.emplace_back(key, std::move(op));
    };
    add("lie-bracket", make_op("lie-bracket", 2, {{1, "ab"}, {-1, "ba"}}));
    add("jordan-product", make_op("jordan-product", 2, {{1, "ab"}, {1, "ba"}}));
    add("symmetric-sum",
        make_op("symmetric-sum", 3,
                {{1, "abc"}, {1, "acb"}, {1, "bac"}, {1, "bca"}, {1, "cab"}, {1, "cba"}}));
    add("alternating-sum",
        make_op("alternating-sum", 3,
                {{1, "abc"}, {-1, "acb"}, {-1, "bac"}, {1, "bca"}, {1, "cab"}, {-1, "cba"}}));
    add("cyclic-sum", make_op("cyclic-sum", 3, {{1, "abc"}, {1, "bca"}, {1, "cab"}}));
    add("lie-inf", make_op("lie-inf", 3, {{1, "abc"}, {-1, "acb"}, {-1, "bca"}, {1, "cba"}}));
    add("lie-half", make_op("lie-half", 3, {{1, "abc"}, {1, "acb"}, {-1, "bca"}, {-1, "cba"}}));
    add("jordan-inf", make_op("jordan-inf", 3, {{1, "abc"}, {1, "cba"}}));
    add("jordan-0", make_op("jordan-0", 3, {{1, "abc"}, {1, "bac"}}));
    add("jordan-1", make_op("jordan-1", 3, {{1, "abc"}, {1, "acb"}}));
    add("jordan-half",
        make_op("jordan-half", 3, {{1, "abc"}, {2, "acb"}, {2, "cab"}, {1, "cba"}}));
    add("anti-jordan-inf",
        make_op("anti-jordan-inf", 3, {{1, "abc"}, {-2, "acb"}, {2, "cab"}, {-1, "cba"}}));
    add("anti-jordan-neg1", make_op("anti-jordan-neg1", 3, {{1, "abc"}, {-1, "acb"}}));
    add("anti-jordan-half", make_op("anti-jordan-half", 3, {{1, "abc"}, {-1, "cba"}}));
    add("anti-jordan-2", make_op("anti-jordan-2", 3, {{1, "abc"}, {-1, "bac"}}));
    add("fourth-inf", make_op("fourth-inf", 3, {{1, "abc"}, {-1, "acb"}, {-1, "bac"}}));
    add("fourth-0", make_op("fourth-0", 3, {{1, "abc"}, {-1, "acb"}, {1, "bca"}}));
    add("fourth-1", make_op("fourth-1", 3, {{1, "abc"}, {-1, "bac"}, {1, "cab"}}));
    add("fourth-neg1", make_op("fourth-neg1", 3, {{1, "abc"}, {1, "bac"}, {1, "cab"}}));
    add("fourth-2", make_op("fourth-2", 3, {{1, "abc"}, {1, "acb"}, {1, "bca"}}));
    add("fourth-half", make_op("fourth-half", 3, {{1, "abc"}, {1, "acb"}, {1, "bac"}}));
    add("cyclic-commutator", make_op("cyclic-commutator", 3, {{1, "abc"}, {-1, "bca"}}));
    add("weakly-commutative",
        make_op("weakly-commutative", 3, {{1, "abc"}, {1, "acb"}, {1, "bac"}, {-1, "cba"}}));
    add("weakly-anticommutative",
        make_op("weakly-anticommutative", 3,
                {{1, "abc"}, {1, "acb"}, {-1, "bca"}, {-1, "cab"}}));
    add("tetrad", make_op("tetrad", 4, {{1, "abcd"}, {1, "dcba"}}));
    return v;
  }();
  return ops;
}

Matrix unit_matrix(int m, int row, int col) {
  Matrix u(std::size_t(m) * std::size_t(m), 0);
  u[std::size_t(row * m + col)] = 1;
  return u;
}

// Basis of the simple associative triple system a(p,q): the matrix units of
// the two off-diagonal blocks of a (p+q) x (p+q) matrix, row-major within
// each block.
MatrixSystem triple_system(int p, int q) {
  MatrixSystem sys;
  sys.ambient = p + q;
  sys.name = "a(" + std::to_string(p) + "," + std::to_string(q) + ")";
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) sys.basis.push_back(unit_matrix(p + q, i, p + j));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < p; ++j) sys.basis.push_back(unit_matrix(p + q, p + i, j));
  validate_closure(sys, 3);
  return sys;
}

StructureConstants sl2_constants() {
  // Basis order f, e, h with [e,f] = h, [h,f] = -2f, [h,e] = 2e.
  StructureConstants sc;
  sc.dimension = 3;
  sc.arity = 2;
  sc.letters = "feh";
  auto set = [&](int i, int j, int k, long c) {
    std::vector<Rational> row(3, 0);
    row[std::size_t(k)] = c;
    sc.table[{i, j}] = row;
    for (Rational& r : row) r = -r;
    sc.table[{j, i}] = row;
  };
  set(1, 0, 2, 1);   // [e,f] = h
  set(2, 0, 0, -2);  // [h,f] = -2f
  set(2, 1, 1, 2);   // [h,e] = 2e
  return sc;
}

StructureConstants s2_constants() {
  // Symmetric 2x2 matrices a = E11, b = E22, c = E12 + E21 under xy + yx.
  StructureConstants sc;
  sc.dimension = 3;
  sc.arity = 2;
  sc.letters = "abc";
  auto set = [&](int i, int j, std::vector<long> coeffs) {
    std::vector<Rational> row(coeffs.begin(), coeffs.end());
    sc.table[{i, j}] = row;
    sc.table[{j, i}] = row;
  };
  set(0, 0, {2, 0, 0});  // a o a = 2a
  set(0, 2, {0, 0, 1});  // a o c = c
  set(1, 1, {0, 2, 0});  // b o b = 2b
  set(1, 2, {0, 0, 1});  // b o c = c
  set(2, 2, {2, 2, 0});  // c o c = 2a + 2b
  return sc;
}

MatrixSystem m2_units() {
  MatrixSystem sys;
  sys.ambient = 2;
  sys.name = "m2-units";
  sys.basis = {unit_matrix(2, 0, 0), unit_matrix(2, 0, 1), unit_matrix(2, 1, 0),
               unit_matrix(2, 1, 1)};
  return sys;
}

}  // namespace

std::optional<MultilinearOperation> catalog_operation(const std::string& key) {
  for (const auto& [k, op] : operation_catalog())
    if (k == key) return op;
  return std::nullopt;
}

std::vector<std::string> catalog_operation_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, op] : operation_catalog()) keys.push_back(k);
  return keys;
}

std::optional<SystemPreset> catalog_system(const std::string& key) {
  if (key == "sl2") return SystemPreset{sl2_constants(), "lie-bracket"};
  if (key == "s2") return SystemPreset{s2_constants(), "jordan-product"};
  if (key == "m2-units") return SystemPreset{m2_units(), ""};
  if (key.size() >= 6 && key.rfind("a(", 0) == 0 && key.back() == ')') {
    std::string inner = key.substr(2, key.size() - 3);
    auto comma = inner.find(',');
    if (comma != std::string::npos) {
      try {
        int p = std::stoi(inner.substr(0, comma));
        int q = std::stoi(inner.substr(comma + 1));
        if (p >= 1 && q >= 1 && 2 * p * q <= int(kMaxLetters))
          return SystemPreset{triple_system(p, q), ""};
      } catch (const std::exception&) {
        return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

std::vector<std::string> catalog_system_keys() {
  return {"sl2", "s2", "m2-units", "a(p,q)"};
}

Presentation presentation_from_constants(const StructureConstants& sc,
                                         const MultilinearOperation& op) {
  if (op.name == "lie-bracket") return lie_presentation(sc);
  if (op.name == "jordan-product") return jordan_presentation(sc);
  return nary_presentation(op, sc);
}

Presentation presentation_from_preset(const std::string& system_key, const std::string& op_key) {
  auto preset = catalog_system(system_key);
  if (!preset) throw EnvelopeError("unknown system preset '" + system_key + "'");
  std::string op_name = op_key.empty() ? preset->default_operation : op_key;
  if (op_name.empty())
    throw EnvelopeError("system '" + system_key + "' needs an explicit operation key");
  auto op = catalog_operation(op_name);
  if (!op) throw EnvelopeError("unknown operation '" + op_name + "'");

  StructureConstants sc;
  if (std::holds_alternative<MatrixSystem>(preset->payload)) {
    sc = matrix_structure_constants(std::get<MatrixSystem>(preset->payload), *op);
  } else {
    sc = std::get<StructureConstants>(preset->payload);
    if (sc.arity != op->arity)
      throw EnvelopeError("operation arity does not match the preset constants");
  }
  Presentation p = presentation_from_constants(sc, *op);
  p.label = system_key + " / " + op->name;
  return p;
}

// --- structure constants files ----------------------------------------------

StructureConstants parse_structure_constants(std::istream& in) {
  StructureConstants sc;
  std::string line;
  std::size_t lineno = 0;
  bool have_dim = false, have_arity = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;
    if (first == "dim") {
      if (!(ss >> sc.dimension) || sc.dimension < 1)
        throw ParseError("bad dimension", lineno);
      have_dim = true;
    } else if (first == "arity") {
      if (!(ss >> sc.arity) || sc.arity < 2) throw ParseError("bad arity", lineno);
      have_arity = true;
    } else if (first == "letters") {
      ss >> sc.letters;
    } else {
      if (!have_dim || !have_arity)
        throw ParseError("tuple line before dim/arity headers", lineno);
      std::vector<int> tuple;
      tuple.push_back(std::stoi(first) - 1);
      for (int s = 1; s < sc.arity; ++s) {
        int v;
        if (!(ss >> v)) throw ParseError("tuple is shorter than the arity", lineno);
        tuple.push_back(v - 1);
      }
      for (int v : tuple)
        if (v < 0 || v >= sc.dimension) throw ParseError("tuple index out of range", lineno);
      std::string arrow, rest;
      if (!(ss >> arrow) || arrow != "->") throw ParseError("expected '->'", lineno);
      std::getline(ss, rest);
      // RHS is a linear expression in x_1 .. x_d; reuse the polynomial
      // grammar over a synthetic alphabet, one letter per basis index.
      std::string compact;
      for (char c : rest)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
      std::string norm;
      for (std::size_t i = 0; i < compact.size(); ++i) {
        if (compact[i] == 'x' && i + 1 < compact.size() && compact[i + 1] == '_') {
          ++i;  // drop the underscore, keep 'x'; index digits follow
          norm += 'x';
        } else {
          norm += compact[i];
        }
      }
      std::vector<Rational> row(std::size_t(sc.dimension), 0);
      if (norm != "0") {
        // Tokenize c*x<j> terms by hand; the grammar is tiny.
        std::size_t i = 0;
        bool neg = false;
        if (i < norm.size() && (norm[i] == '+' || norm[i] == '-')) neg = norm[i++] == '-';
        while (i < norm.size()) {
          std::string coeff_text;
          while (i < norm.size() && (std::isdigit(static_cast<unsigned char>(norm[i])) ||
                                     norm[i] == '/'))
            coeff_text += norm[i++];
          if (i < norm.size() && norm[i] == '*') ++i;
          if (i >= norm.size() || norm[i] != 'x')
            throw ParseError("expected x_<index> on the right-hand side", lineno);
          ++i;
          std::string idx_text;
          while (i < norm.size() && std::isdigit(static_cast<unsigned char>(norm[i])))
            idx_text += norm[i++];
          if (idx_text.empty()) throw ParseError("missing basis index", lineno);
          int j = std::stoi(idx_text) - 1;
          if (j < 0 || j >= sc.dimension)
            throw ParseError("basis index out of range", lineno);
          Rational c = coeff_text.empty() ? Rational(1) : Rational::from_string(coeff_text);
          row[std::size_t(j)] += neg ? -c : c;
          if (i == norm.size()) break;
          if (norm[i] == '+') neg = false;
          else if (norm[i] == '-') neg = true;
          else throw ParseError("expected '+' or '-'", lineno);
          ++i;
        }
      }
      bool nonzero = std::any_of(row.begin(), row.end(),
                                 [](const Rational& r) { return !r.is_zero(); });
      if (nonzero) sc.table[tuple] = std::move(row);
    }
  }
  if (!have_dim || !have_arity) throw ParseError("missing dim/arity headers", lineno);
  return sc;
}

StructureConstants load_structure_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open structure constants file '" + path + "'");
  return parse_structure_constants(in);
}

}  // namespace ncgb
