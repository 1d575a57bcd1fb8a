// Benchmark comparing the serial reference kernels against the OpenMP
// versions: representation search, numeric torsion sampling, and the check
// suite. Results must agree exactly; timings are wall-clock.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <omp.h>

#include "alextor/check_suite.hpp"
#include "alextor/knot_table.hpp"
#include "alextor/numeric_torsion.hpp"
#include "alextor/rep_search.hpp"

#ifndef ALEXTOR_DATA_DIR
#define ALEXTOR_DATA_DIR "data"
#endif

using namespace alextor;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-34s %10.1f ms %10.1f ms   x%.2f   results %s\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms, equal ? "equal" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  std::string data_dir = argc > 1 ? argv[1] : ALEXTOR_DATA_DIR;
  KnotTable table = load_table(data_dir + "/knot_table.json");
  std::printf("threads: %d\n", omp_get_max_threads());

  {
    const KnotRecord* rec = table.find("8_18");
    GroupPresentation p = rec->build();
    RepSearchOptions o;
    o.budget = 64;
    o.parallel = false;
    auto t0 = clock_type::now();
    auto serial = rep_search_sl2_fp(p, 7, o);
    double ts = ms_since(t0);
    o.parallel = true;
    t0 = clock_type::now();
    auto par = rep_search_sl2_fp(p, 7, o);
    double tp = ms_since(t0);
    bool equal = serial.size() == par.size();
    for (size_t i = 0; equal && i < serial.size(); ++i)
      equal = representation_to_json(serial[i], p.generators) ==
              representation_to_json(par[i], p.generators);
    row("rep search 8_18 over F7", ts, tp, equal);
  }

  {
    const KnotRecord* rec = table.find("4_1");
    GroupPresentation p = rec->build();
    std::ifstream in(data_dir + "/reps/fig8_parabolic.json");
    std::stringstream ss;
    ss << in.rdbuf();
    Representation alpha = representation_from_json(ss.str(), p);
    auto t0 = clock_type::now();
    auto serial = twisted_torsion_numeric(p, alpha, 4096, false);
    double ts = ms_since(t0);
    t0 = clock_type::now();
    auto par = twisted_torsion_numeric(p, alpha, 4096, true);
    double tp = ms_since(t0);
    row("numeric torsion 4_1, 4096 samples", ts, tp, serial.str() == par.str());
  }

  {
    auto t0 = clock_type::now();
    CheckReport serial = run_check_suite(table, Suite::All, 0, false);
    double ts = ms_since(t0);
    t0 = clock_type::now();
    CheckReport par = run_check_suite(table, Suite::All, 0, true);
    double tp = ms_since(t0);
    row("check suite (all)", ts, tp, serial.render() == par.render());
  }
  return 0;
}
