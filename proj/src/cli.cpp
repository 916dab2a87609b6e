#include "ncgb/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "ncgb/envelope.hpp"
#include "ncgb/parse.hpp"
#include "ncgb/report.hpp"

namespace ncgb {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct CommonFlags {
  std::string file;
  std::string preset;
  std::string sc_file;
  std::string op_key;
  std::optional<int> max_degree;
  std::optional<int> max_iter;
  std::optional<int> max_size;
  bool snapshots = false;
  bool serial = false;
  std::string json_path;
};

void add_completion_flags(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--max-degree", flags->max_degree,
                  "skip compositions whose overlap word exceeds this degree");
  cmd->add_option("--max-iter", flags->max_iter, "stop after this many iterations");
  cmd->add_option("--max-size", flags->max_size, "stop once the basis reaches this size");
  cmd->add_flag("--serial", flags->serial, "run the serial reference kernels");
}

void add_input_flags(CLI::App* cmd, CommonFlags* flags, bool allow_file) {
  if (allow_file)
    cmd->add_option("file", flags->file, "presentation file");
  cmd->add_option("--preset", flags->preset, "catalog system key (sl2, s2, m2-units, a(p,q))");
  cmd->add_option("--sc", flags->sc_file, "structure constants file");
  cmd->add_option("--op", flags->op_key, "catalog operation key");
}

// When no bound was requested at all, cap degree at 20 and iterations at 50
// so inputs with non-terminating completions still return.
CompletionConfig make_config(const CommonFlags& flags) {
  CompletionConfig cfg;
  cfg.max_degree = flags.max_degree;
  cfg.max_iterations = flags.max_iter;
  cfg.max_basis_size = flags.max_size;
  if (!flags.max_degree && !flags.max_iter && !flags.max_size) {
    cfg.max_degree = 20;
    cfg.max_iterations = 50;
  }
  cfg.record_snapshots = flags.snapshots;
  cfg.parallel = !flags.serial;
  return cfg;
}

Presentation resolve_presentation(const CommonFlags& flags) {
  int sources = int(!flags.file.empty()) + int(!flags.preset.empty()) + int(!flags.sc_file.empty());
  if (sources != 1)
    throw std::runtime_error("give exactly one input: a presentation file, --preset, or --sc");
  if (!flags.file.empty()) return load_presentation(flags.file);
  if (!flags.preset.empty()) return presentation_from_preset(flags.preset, flags.op_key);
  StructureConstants sc = load_structure_constants(flags.sc_file);
  if (flags.op_key.empty())
    throw std::runtime_error("--sc input needs an --op operation key");
  auto op = catalog_operation(flags.op_key);
  if (!op) throw std::runtime_error("unknown operation '" + flags.op_key + "'");
  return presentation_from_constants(sc, *op);
}

bool hit_bound(const CompletionResult& res) {
  return res.status == CompletionStatus::TruncatedAtDegree ||
         res.status == CompletionStatus::IterationLimit ||
         res.status == CompletionStatus::SizeLimit;
}

Json base_report(const std::vector<std::string>& args, const CompletionConfig& cfg) {
  Json j;
  j["schema"] = 1;
  std::string echo;
  for (const std::string& a : args) {
    if (!echo.empty()) echo += ' ';
    echo += a;
  }
  j["command"] = echo;
  Json c;
  c["max_degree"] = cfg.max_degree ? Json(*cfg.max_degree) : Json(nullptr);
  c["max_iterations"] = cfg.max_iterations ? Json(*cfg.max_iterations) : Json(nullptr);
  c["max_basis_size"] = cfg.max_basis_size ? Json(*cfg.max_basis_size) : Json(nullptr);
  c["snapshots"] = cfg.record_snapshots;
  c["parallel"] = cfg.parallel;
  j["config"] = c;
  return j;
}

void write_json(const std::string& path, const Json& j, std::ostream& out) {
  if (path == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << j.dump(2) << "\n";
}

Json quotient_summary(const CompletionResult& res, int window, GradedDims* dims_out,
                      std::vector<Word>* words_out) {
  Json q;
  if (res.status == CompletionStatus::UnitIdeal) {
    q["finite"] = true;
    q["dimension"] = "0";
    return q;
  }
  std::vector<Word> lms;
  for (const Polynomial& g : res.basis) lms.push_back(g.lm());
  const Alphabet& alphabet = res.basis.empty() ? Alphabet() : res.basis[0].alphabet();
  auto automaton = NormalWordAutomaton::build(alphabet, lms);
  bool finite = automaton.is_finite();
  q["finite"] = finite;
  if (finite) {
    std::vector<Word> words = automaton.all_normal_words();
    q["dimension"] = std::to_string(words.size());
    if (words_out) *words_out = words;
    if (dims_out) *dims_out = automaton.graded_dims(words.empty() ? 0 : words.back().degree());
  } else {
    GradedDims dims = automaton.graded_dims(std::size_t(window));
    if (res.status == CompletionStatus::TruncatedAtDegree)
      dims.guaranteed_upto = res.truncation_degree - 1;
    q["dims_window"] = dims_to_json(dims);
    if (dims_out) *dims_out = dims;
  }
  return q;
}

int cmd_groebner(const std::vector<std::string>& args, const CommonFlags& flags,
                 std::ostream& out) {
  auto start = Clock::now();
  Presentation p = load_presentation(flags.file);
  CompletionConfig cfg = make_config(flags);
  CompletionResult res = complete(p, cfg);
  out << completion_to_text(res);
  if (!flags.json_path.empty()) {
    Json j = base_report(args, cfg);
    j["completion"] = completion_to_json(res);
    j["timings"] = Json{{"total_ms", ms_since(start)}};
    write_json(flags.json_path, j, out);
  }
  return hit_bound(res) ? 2 : 0;
}

int cmd_nf(const std::vector<std::string>& args, const CommonFlags& flags,
           const std::string& poly_text, bool raw, const std::string& trace_path,
           std::ostream& out) {
  (void)args;
  Presentation p = load_presentation(flags.file);
  Polynomial f = parse_polynomial(poly_text, p.alphabet);
  int code = 0;
  std::vector<Polynomial> basis;
  if (raw) {
    for (const Polynomial& g : p.generators)
      if (!g.is_zero()) basis.push_back(g.standard_form());
  } else {
    CompletionResult res = complete(p, make_config(flags));
    if (hit_bound(res)) code = 2;
    basis = std::move(res.basis);
  }
  ReductionTrace trace;
  Polynomial nf = normal_form(f, basis, {}, &trace);
  out << nf.str() << "\n";
  if (!trace_path.empty()) write_json(trace_path, trace_to_json(trace), out);
  return code;
}

int cmd_envelope(const std::vector<std::string>& args, const CommonFlags& flags,
                 std::ostream& out) {
  auto start = Clock::now();
  Presentation p = resolve_presentation(flags);
  CompletionConfig cfg = make_config(flags);
  CompletionResult res = complete(p, cfg);
  if (!p.label.empty()) out << "label: " << p.label << "\n";
  out << "generators: " << p.generators.size() << "\n";
  out << completion_to_text(res);
  GradedDims dims;
  Json q = quotient_summary(res, 10, &dims, nullptr);
  if (q["finite"].get<bool>()) {
    out << "quotient: finite, dimension " << q["dimension"].get<std::string>() << "\n";
  } else {
    out << "quotient: infinite; dims 0..10: " << dims_to_line(dims) << "\n";
  }
  if (!flags.json_path.empty()) {
    Json j = base_report(args, cfg);
    j["completion"] = completion_to_json(res);
    j["quotient"] = q;
    j["timings"] = Json{{"total_ms", ms_since(start)}};
    write_json(flags.json_path, j, out);
  }
  return hit_bound(res) ? 2 : 0;
}

int cmd_dims(const std::vector<std::string>& args, const CommonFlags& flags, int to,
             const std::string& csv_path, std::ostream& out) {
  auto start = Clock::now();
  Presentation p = resolve_presentation(flags);
  CompletionConfig cfg = make_config(flags);
  CompletionResult res = complete(p, cfg);
  GradedDims dims;
  if (res.status == CompletionStatus::UnitIdeal) {
    dims.dims.assign(std::size_t(to) + 1, 0);
  } else {
    std::vector<Word> lms;
    for (const Polynomial& g : res.basis) lms.push_back(g.lm());
    auto automaton = NormalWordAutomaton::build(p.alphabet, lms);
    dims = automaton.graded_dims(std::size_t(to));
    if (res.status == CompletionStatus::TruncatedAtDegree)
      dims.guaranteed_upto = res.truncation_degree - 1;
  }
  out << dims_to_line(dims) << "\n";
  if (dims.guaranteed_upto)
    out << "basis truncated; dims guaranteed up to degree " << *dims.guaranteed_upto << "\n";
  if (!csv_path.empty()) {
    std::ofstream f(csv_path);
    if (!f) throw std::runtime_error("cannot write '" + csv_path + "'");
    f << dims_to_csv(dims);
  }
  if (!flags.json_path.empty()) {
    Json j = base_report(args, cfg);
    j["completion"] = completion_to_json(res);
    j["dims"] = dims_to_json(dims);
    j["timings"] = Json{{"total_ms", ms_since(start)}};
    write_json(flags.json_path, j, out);
  }
  return hit_bound(res) ? 2 : 0;
}

int cmd_multable(const std::vector<std::string>& args, const CommonFlags& flags,
                 std::ostream& out, std::ostream& err) {
  auto start = Clock::now();
  Presentation p = resolve_presentation(flags);
  CompletionConfig cfg = make_config(flags);
  CompletionResult res = complete(p, cfg);
  if (hit_bound(res)) {
    out << completion_to_text(res);
    err << "completion stopped at a bound (" << status_name(res.status)
        << "); cannot certify the quotient\n";
    return 2;
  }
  if (res.status == CompletionStatus::UnitIdeal) {
    out << "unit ideal: the quotient is zero\n";
    return 0;
  }
  std::vector<Word> lms;
  for (const Polynomial& g : res.basis) lms.push_back(g.lm());
  auto automaton = NormalWordAutomaton::build(p.alphabet, lms);
  if (!automaton.is_finite()) {
    err << "the quotient is infinite dimensional; no finite multiplication table\n";
    return 3;
  }
  MultiplicationTable table =
      multiplication_table(res.basis, automaton.all_normal_words(), cfg.parallel);
  out << table_to_text(table, p.alphabet);
  if (!flags.json_path.empty()) {
    Json j = base_report(args, cfg);
    j["completion"] = completion_to_json(res);
    j["table"] = table_to_json(table, p.alphabet);
    j["timings"] = Json{{"total_ms", ms_since(start)}};
    write_json(flags.json_path, j, out);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact noncommutative Groebner bases and universal envelopes"};
  app.require_subcommand(1);

  CommonFlags g_flags, nf_flags, env_flags, dims_flags, mt_flags;
  std::string nf_poly, nf_trace;
  bool nf_raw = false;
  int dims_to = 10;
  std::string dims_csv;

  CLI::App* c_groebner = app.add_subcommand("groebner", "complete a presentation");
  c_groebner->add_option("file", g_flags.file, "presentation file")->required();
  c_groebner->add_flag("--snapshots", g_flags.snapshots, "record per-iteration generator sets");
  c_groebner->add_option("--json", g_flags.json_path, "write a JSON report ('-' for stdout)");
  add_completion_flags(c_groebner, &g_flags);

  CLI::App* c_nf = app.add_subcommand("nf", "normal form of a polynomial");
  c_nf->add_option("file", nf_flags.file, "presentation file")->required();
  c_nf->add_option("--poly", nf_poly, "polynomial expression")->required();
  c_nf->add_flag("--raw", nf_raw, "reduce against the file's generators, not the completed basis");
  c_nf->add_option("--trace", nf_trace, "write the reduction trace as JSON ('-' for stdout)");
  add_completion_flags(c_nf, &nf_flags);

  CLI::App* c_env = app.add_subcommand("envelope", "build and analyze an envelope presentation");
  add_input_flags(c_env, &env_flags, false);
  c_env->add_option("--json", env_flags.json_path, "write a JSON report ('-' for stdout)");
  add_completion_flags(c_env, &env_flags);

  CLI::App* c_dims = app.add_subcommand("dims", "graded dimensions of the quotient");
  add_input_flags(c_dims, &dims_flags, true);
  c_dims->add_option("--to", dims_to, "largest degree to report")->required();
  c_dims->add_option("--csv", dims_csv, "write degree,dim lines to a file");
  c_dims->add_option("--json", dims_flags.json_path, "write a JSON report ('-' for stdout)");
  add_completion_flags(c_dims, &dims_flags);

  CLI::App* c_mt = app.add_subcommand("multable", "multiplication table of a finite quotient");
  add_input_flags(c_mt, &mt_flags, true);
  c_mt->add_option("--json", mt_flags.json_path, "write a JSON report ('-' for stdout)");
  add_completion_flags(c_mt, &mt_flags);

  std::vector<const char*> argv;
  argv.push_back("ncgb");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (c_groebner->parsed()) return cmd_groebner(args, g_flags, out);
    if (c_nf->parsed()) return cmd_nf(args, nf_flags, nf_poly, nf_raw, nf_trace, out);
    if (c_env->parsed()) return cmd_envelope(args, env_flags, out);
    if (c_dims->parsed()) return cmd_dims(args, dims_flags, dims_to, dims_csv, out);
    if (c_mt->parsed()) return cmd_multable(args, mt_flags, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 1;
}

}  // namespace ncgb
