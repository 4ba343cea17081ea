// Timing comparison of the OpenMP drivers against their serial references:
// Monte Carlo trials (parallel vs serial driver) and the two correlation routes.

#include "pcradar/codes.hpp"
#include "pcradar/correlator.hpp"
#include "pcradar/monte_carlo.hpp"
#include "pcradar/rng.hpp"
#include "pcradar/scenario.hpp"

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace pcradar;
using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

cvec random_vector(int n, SplitMix64& rng) {
    cvec out(static_cast<std::size_t>(n));
    for (auto& x : out) {
        auto [re, im] = rng.gaussian_pair();
        x = {re, im};
    }
    return out;
}

void bench_xcorr(int n, int reps) {
    SplitMix64 rng(7);
    const cvec x = random_vector(n, rng);
    const cvec ref = random_vector(n, rng);

    volatile double sink = 0.0;
    auto t0 = clock_type::now();
    for (int r = 0; r < reps; ++r) sink = sink + circular_xcorr_fft(x, ref)[0].real();
    const double fft_s = seconds_since(t0);

    t0 = clock_type::now();
    for (int r = 0; r < reps; ++r) sink = sink + circular_xcorr_direct(x, ref)[0].real();
    const double direct_s = seconds_since(t0);

    std::printf("xcorr N=%-5d %6d reps   fft %8.2f us/op   direct %8.2f us/op   ratio %.1fx\n",
                n, reps, 1e6 * fft_s / reps, 1e6 * direct_s / reps, direct_s / fft_s);
}

Scenario bench_scenario(int trials) {
    Scenario scenario;
    scenario.label = "bench";
    scenario.params.sample_rate = 10e6;
    scenario.channel.targets = {{240.0, 0.6}, {480.0, 0.4}};
    scenario.channel.noise_sigma = 0.05;
    scenario.channel.seed = 1;
    scenario.trials = trials;
    scenario.threshold = 0.25;
    return scenario;
}

void bench_monte_carlo(int trials) {
    const Scenario scenario = bench_scenario(trials);

    auto t0 = clock_type::now();
    const RunResult serial = run_monte_carlo_serial(scenario);
    const double serial_s = seconds_since(t0);

    t0 = clock_type::now();
    const RunResult parallel = run_monte_carlo(scenario);
    const double parallel_s = seconds_since(t0);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("monte carlo %d trials   serial %7.1f ms   openmp(%d thr) %7.1f ms   "
                "speedup %.2fx   outputs identical: %s\n",
                trials, 1e3 * serial_s, threads, 1e3 * parallel_s, serial_s / parallel_s,
                serial.summary.reproducibility_hash == parallel.summary.reproducibility_hash
                    ? "yes"
                    : "NO");
}

} // namespace

int main(int argc, char** argv) {
    int trials = 5000;
    if (argc > 1) trials = std::stoi(argv[1]);

    bench_xcorr(128, 2000);
    bench_xcorr(512, 500);
    bench_xcorr(2048, 50);
    bench_monte_carlo(trials);
    return 0;
}
