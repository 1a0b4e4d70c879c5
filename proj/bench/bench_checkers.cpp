// Timing comparison between the serial reference engine and the OpenMP
// engine, plus the counting primitives they are built on. Run manually:
//   ./bench/cubeiso_bench [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cubeiso/checkers.hpp"
#include "cubeiso/family.hpp"
#include "cubeiso/reports.hpp"

using namespace cubeiso;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename Fn>
double time_best_of(int repeats, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, seconds_since(start));
    }
    return best;
}

void row(const char* name, double serial, double parallel, bool match) {
    std::printf("%-28s %10.4fs %10.4fs %7.2fx  %s\n", name, serial, parallel, serial / parallel,
                match ? "outputs-match" : "OUTPUTS-DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-28s %11s %11s %8s\n", "workload", "serial", "parallel", "speedup");

    {
        CheckOptions o;
        o.n = 4;
        std::string serial_text, parallel_text;
        const double s = time_best_of(repeats, [&] { serial_text = to_text(ref::check_theorem2(o)); });
        const double p = time_best_of(repeats, [&] { parallel_text = to_text(check_theorem2(o)); });
        row("thm2 exhaustive n=4", s, p, serial_text == parallel_text);
    }
    {
        CheckOptions o;
        o.n = 5;
        std::string serial_text, parallel_text;
        const double s = time_best_of(repeats, [&] { serial_text = to_text(ref::check_theorem1(o)); });
        const double p = time_best_of(repeats, [&] { parallel_text = to_text(check_theorem1(o)); });
        row("thm1 exhaustive n=5", s, p, serial_text == parallel_text);
    }
    {
        CheckOptions o;
        o.n = 9;
        o.mode = Mode::Sampled;
        o.budget = 20000;
        std::string serial_text, parallel_text;
        const double s = time_best_of(repeats, [&] { serial_text = to_text(ref::check_theorem1(o)); });
        const double p = time_best_of(repeats, [&] { parallel_text = to_text(check_theorem1(o)); });
        row("thm1 sampled n=9 20k", s, p, serial_text == parallel_text);
    }
    {
        CheckOptions o;
        o.n = 10;
        o.mode = Mode::Sampled;
        o.budget = 5000;
        std::string serial_text, parallel_text;
        const double s = time_best_of(repeats, [&] { serial_text = to_text(ref::check_lemma6(o)); });
        const double p = time_best_of(repeats, [&] { parallel_text = to_text(check_lemma6(o)); });
        row("lemma6 sampled n=10 5k", s, p, serial_text == parallel_text);
    }
    {
        const Family fam = random_family(12, 7);
        const bool match = ref::internal_edges(fam) == internal_edges(fam);
        volatile uint64_t sink = 0;
        const double s = time_best_of(repeats, [&] {
            for (int i = 0; i < 2000; ++i) sink = sink + ref::internal_edges(fam);
        });
        const double p = time_best_of(repeats, [&] {
            for (int i = 0; i < 2000; ++i) sink = sink + internal_edges(fam);
        });
        row("internal_edges n=12 x2000", s, p, match);
    }
    return 0;
}
