// Rendering of results as JSON (deterministic, sorted keys) and as plain
// text in the listing style used throughout the project.
#ifndef NCGB_REPORT_HPP
#define NCGB_REPORT_HPP

#include <string>

#include <json.hpp>

#include "ncgb/groebner.hpp"
#include "ncgb/quotient.hpp"

namespace ncgb {

using Json = nlohmann::json;

Json completion_to_json(const CompletionResult& res);
std::string completion_to_text(const CompletionResult& res);

Json dims_to_json(const GradedDims& dims);
std::string dims_to_csv(const GradedDims& dims);
std::string dims_to_line(const GradedDims& dims);

/// Compact entry form over 1-based basis indices: "2+5-8", "3/2*4-1",
/// "." for zero, "?" for an out-of-window entry.
std::string table_entry_str(const TableEntry& entry);
Json table_to_json(const MultiplicationTable& table, const Alphabet& alphabet);
std::string table_to_text(const MultiplicationTable& table, const Alphabet& alphabet);

Json trace_to_json(const ReductionTrace& trace);
std::string trace_to_text(const ReductionTrace& trace);

}  // namespace ncgb

#endif
