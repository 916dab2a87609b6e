// Compares the serial reference kernels against the OpenMP ones on the
// heavier fixtures. Both paths must produce identical results; the timings
// show what the parallel composition and table kernels buy.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ncgb/envelope.hpp"
#include "ncgb/quotient.hpp"

using namespace ncgb;

namespace {

double time_ms(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool same) {
  std::printf("%-34s %9.1f ms %9.1f ms   x%.2f   %s\n", name.c_str(), serial_ms, parallel_ms,
              serial_ms / parallel_ms, same ? "results identical" : "RESULTS DIFFER");
}

std::vector<Word> lms(const std::vector<Polynomial>& basis) {
  std::vector<Word> out;
  for (const Polynomial& g : basis) out.push_back(g.lm());
  return out;
}

void bench_completion(const std::string& name, const Presentation& p) {
  CompletionConfig serial_cfg, parallel_cfg;
  serial_cfg.parallel = false;
  parallel_cfg.parallel = true;
  CompletionResult serial_res, parallel_res;
  double s = time_ms([&] { serial_res = complete(p, serial_cfg); });
  double par = time_ms([&] { parallel_res = complete(p, parallel_cfg); });
  report("complete " + name, s, par, serial_res.basis == parallel_res.basis);
}

void bench_compositions(const std::string& name, const std::vector<Polynomial>& basis,
                        int repeats) {
  std::vector<Polynomial> serial_out, parallel_out;
  double s = time_ms([&] {
    for (int r = 0; r < repeats; ++r) serial_out = all_compositions(basis, false);
  });
  double par = time_ms([&] {
    for (int r = 0; r < repeats; ++r) parallel_out = all_compositions(basis, true);
  });
  report("compositions " + name, s, par, serial_out == parallel_out);
}

void bench_table(const std::string& name, const std::vector<Polynomial>& basis,
                 const Alphabet& alphabet, int repeats) {
  auto words = NormalWordAutomaton::build(alphabet, lms(basis)).all_normal_words();
  MultiplicationTable serial_out, parallel_out;
  double s = time_ms([&] {
    for (int r = 0; r < repeats; ++r) serial_out = multiplication_table(basis, words, false);
  });
  double par = time_ms([&] {
    for (int r = 0; r < repeats; ++r) parallel_out = multiplication_table(basis, words, true);
  });
  report("table " + name, s, par,
         serial_out.entries == parallel_out.entries && !serial_out.windowed);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run the serial path\n");
#endif
  std::printf("%-34s %12s %12s\n", "", "serial", "parallel");

  Presentation tetrad = presentation_from_preset("m2-units", "tetrad");
  bench_compositions("tetrad (136 generators)", tetrad.generators, 5);
  bench_completion("tetrad", tetrad);

  Presentation triple = presentation_from_preset("m2-units", "jordan-inf");
  bench_completion("jordan triple system", triple);

  Presentation a3 = presentation_from_preset("a(1,3)", "jordan-inf");
  bench_completion("a(1,3) jordan triple", a3);

  CompletionResult done = complete(tetrad, {});
  bench_table("tetrad quotient (25 words)", done.basis, tetrad.alphabet, 20);
  return 0;
}
