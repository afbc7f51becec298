// Benchmark: serial smallest-prime-factor sieve vs the blocked OpenMP sieve,
// with an equality check between the two.
//
//   ./sieve_bench [X] [r]        (defaults: X = 1e6, r = inf)

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "grouppart/sieve.hpp"

using namespace grouppart;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t x = 1000000;
    RowBound r = RowBound::inf();
    if (argc > 1) x = std::stoull(argv[1]);
    if (argc > 2) r = parse_row_bound(argv[2]);

    std::printf("sieve_a_r benchmark: x = %llu, r = %s\n",
                static_cast<unsigned long long>(x), to_string(r).c_str());

    auto t0 = clock_type::now();
    const auto serial = sieve_a_r_serial(x, r, x);
    const double t_serial = seconds_since(t0);
    std::printf("  serial (SPF reference)   %8.3f s\n", t_serial);

#ifdef _OPENMP
    for (int threads : {1, 2, 4}) {
        if (threads > omp_get_num_procs() * 2) break;
        omp_set_num_threads(threads);
        t0 = clock_type::now();
        const auto parallel = sieve_a_r(x, r, x);
        const double t_par = seconds_since(t0);
        const bool equal = parallel.values == serial.values;
        std::printf("  blocked, %d thread(s)     %8.3f s   speedup %5.2fx   match=%s\n", threads,
                    t_par, t_serial / t_par, equal ? "yes" : "NO");
        if (!equal) return 1;
    }
#else
    t0 = clock_type::now();
    const auto parallel = sieve_a_r(x, r, x);
    const double t_par = seconds_since(t0);
    const bool equal = parallel.values == serial.values;
    std::printf("  blocked (no OpenMP)      %8.3f s   match=%s\n", t_par, equal ? "yes" : "NO");
    if (!equal) return 1;
#endif
    return 0;
}
