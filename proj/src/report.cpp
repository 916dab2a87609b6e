#include "ncgb/report.hpp"

#include <sstream>

namespace ncgb {

namespace {

Json polys_to_json(const std::vector<Polynomial>& polys) {
  Json arr = Json::array();
  for (const Polynomial& p : polys) arr.push_back(p.str());
  return arr;
}

}  // namespace

Json completion_to_json(const CompletionResult& res) {
  Json j;
  j["status"] = status_name(res.status);
  if (res.status == CompletionStatus::TruncatedAtDegree)
    j["truncation_degree"] = res.truncation_degree;
  j["basis"] = polys_to_json(res.basis);
  Json iters = Json::array();
  for (const IterationStats& s : res.iterations)
    iters.push_back(Json{{"generators_in", s.generators_in},
                         {"distinct_nonzero_compositions", s.distinct_nonzero_compositions},
                         {"generators_out", s.generators_out}});
  j["iterations"] = iters;
  if (!res.snapshots.empty()) {
    Json snaps = Json::array();
    for (const auto& s : res.snapshots) snaps.push_back(polys_to_json(s));
    j["snapshots"] = snaps;
  }
  return j;
}

std::string completion_to_text(const CompletionResult& res) {
  std::ostringstream out;
  out << "status: " << status_name(res.status);
  if (res.status == CompletionStatus::TruncatedAtDegree)
    out << " (degree " << res.truncation_degree << ")";
  out << "\nbasis (" << res.basis.size() << "):\n";
  for (const Polynomial& p : res.basis) out << "  " << p.str() << "\n";
  out << "iterations:\n";
  for (std::size_t i = 0; i < res.iterations.size(); ++i) {
    const IterationStats& s = res.iterations[i];
    out << "  " << (i + 1) << ": generators " << s.generators_in << ", compositions "
        << s.distinct_nonzero_compositions << " -> " << s.generators_out << "\n";
  }
  return out.str();
}

Json dims_to_json(const GradedDims& dims) {
  Json j;
  Json arr = Json::array();
  for (const mpz_class& d : dims.dims) arr.push_back(d.get_str());
  j["dims"] = arr;
  if (dims.guaranteed_upto) j["guaranteed_upto"] = *dims.guaranteed_upto;
  return j;
}

std::string dims_to_csv(const GradedDims& dims) {
  std::ostringstream out;
  out << "degree,dim\n";
  for (std::size_t d = 0; d < dims.dims.size(); ++d)
    out << d << "," << dims.dims[d].get_str() << "\n";
  return out.str();
}

std::string dims_to_line(const GradedDims& dims) {
  std::ostringstream out;
  for (std::size_t d = 0; d < dims.dims.size(); ++d) {
    if (d) out << ", ";
    out << dims.dims[d].get_str();
  }
  return out.str();
}

std::string table_entry_str(const TableEntry& entry) {
  if (!entry) return "?";
  if (entry->empty()) return "·";
  std::string out;
  for (std::size_t k = 0; k < entry->size(); ++k) {
    const auto& [idx, coeff] = (*entry)[k];
    bool neg = coeff.sign() < 0;
    if (k == 0) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    Rational c = coeff.abs();
    if (!c.is_one()) {
      out += c.str();
      out += '*';
    }
    out += std::to_string(idx + 1);
  }
  return out;
}

Json table_to_json(const MultiplicationTable& table, const Alphabet& alphabet) {
  Json j;
  Json words = Json::array();
  for (const Word& w : table.basis_words) words.push_back(w.str(alphabet));
  j["basis_words"] = words;
  std::size_t n = table.basis_words.size();
  Json rows = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < n; ++k) row.push_back(table_entry_str(table.at(i, k)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  j["windowed"] = table.windowed;
  return j;
}

std::string table_to_text(const MultiplicationTable& table, const Alphabet& alphabet) {
  std::ostringstream out;
  std::size_t n = table.basis_words.size();
  out << "basis words:";
  for (std::size_t i = 0; i < n; ++i)
    out << " " << (i + 1) << "=" << table.basis_words[i].str(alphabet);
  out << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k) out << " ";
      out << table_entry_str(table.at(i, k));
    }
    out << "\n";
  }
  return out.str();
}

Json trace_to_json(const ReductionTrace& trace) {
  const Alphabet& alphabet = trace.input.alphabet();
  Json j;
  j["input"] = trace.input.str();
  j["output"] = trace.output.str();
  Json steps = Json::array();
  for (const ReductionStep& s : trace.steps)
    steps.push_back(Json{{"term_index", s.term_index},
                         {"generator", s.generator},
                         {"occurrence", s.occurrence},
                         {"left", s.left.str(alphabet)},
                         {"right", s.right.str(alphabet)},
                         {"coeff", s.coeff.str()},
                         {"subtracted", s.subtracted.str()}});
  j["steps"] = steps;
  return j;
}

std::string trace_to_text(const ReductionTrace& trace) {
  const Alphabet& alphabet = trace.input.alphabet();
  std::ostringstream out;
  out << "input: " << trace.input.str() << "\n";
  for (const ReductionStep& s : trace.steps)
    out << "  - " << s.coeff.str() << " * " << s.left.str(alphabet) << " * g" << (s.generator + 1)
        << " * " << s.right.str(alphabet) << "\n";
  out << "output: " << trace.output.str() << "\n";
  return out.str();
}

}  // namespace ncgb
