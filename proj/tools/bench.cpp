// Compares the serial reference implementations of the search kernels with
// their OpenMP counterparts and checks that both return identical results.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "chordalkit/asteroidal.hpp"
#include "chordalkit/families.hpp"
#include "chordalkit/graph6.hpp"
#include "chordalkit/sun_system.hpp"

using namespace chordalkit;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_of(F&& work) {
    auto start = Clock::now();
    work();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-34s %9.3fs %9.3fs %7.2fx   %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, equal ? "identical" : "DIFFER");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled at build time\n");
#endif
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

    { // bad-sun-system search over a random batch
        std::vector<Graph> batch;
        for (std::uint64_t seed = 0; seed < 40; ++seed)
            batch.push_back(random_chordal(12, 7, seed * 31 + 5));
        std::vector<std::string> serial_out, parallel_out;
        auto run = [&](Exec exec, std::vector<std::string>& sink) {
            SunSearchOptions opts;
            opts.exec = exec;
            for (const Graph& g : batch) {
                auto found = find_bad_sun_system(g, opts);
                sink.push_back(found ? to_string(found->system.rays) : "-");
            }
        };
        double s = time_of([&] { run(Exec::serial, serial_out); });
        double p = time_of([&] { run(Exec::parallel, parallel_out); });
        report("bad-sun-system, 40 random n=12", s, p, serial_out == parallel_out);
    }

    { // bad-sun-system search on the sixteen-vertex f11 instance
        Graph f = f11_4k(4);
        SunSearchOptions serial{16, Exec::serial};
        SunSearchOptions parallel{16, Exec::parallel};
        std::optional<BadSunSystem> a, b;
        double s = time_of([&] { a = find_bad_sun_system(f, serial); });
        double p = time_of([&] { b = find_bad_sun_system(f, parallel); });
        bool equal = a.has_value() == b.has_value() &&
                     (!a || (a->system.rays == b->system.rays && a->odd_cycle == b->odd_cycle));
        report("bad-sun-system, f11 n=16", s, p, equal);
    }

    { // induced odd sun scan
        Graph f = f11_4k(4);
        OddSunResult a, b;
        double s = time_of([&] { a = contains_induced_odd_sun(f, Exec::serial); });
        double p = time_of([&] { b = contains_induced_odd_sun(f, Exec::parallel); });
        report("odd-sun scan, f11 n=16", s, p,
               a.found == b.found && a.vertices == b.vertices && a.k == b.k);
    }

    { // connected chordal corpus enumeration
        std::vector<Graph> a, b;
        double s = time_of([&] { a = enumerate_small_chordal(7, Exec::serial); });
        double p = time_of([&] { b = enumerate_small_chordal(7, Exec::parallel); });
        bool equal = a.size() == b.size();
        for (std::size_t i = 0; equal && i < a.size(); ++i) equal = a[i] == b[i];
        report("chordal corpus, n=7", s, p, equal);
    }

    return 0;
}
