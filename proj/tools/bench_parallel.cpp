// Compares the serial reference path (jobs = 1) of the sweep engine against
// the OpenMP-parallel one on a medium campaign and checks the outputs agree.

#include <chrono>
#include <iostream>

#include "bbox/harness/experiment.hpp"

using namespace bbox;
using Clock = std::chrono::steady_clock;

int main() {
    harness::ExperimentConfig cfg;
    cfg.algorithm = "mst-binary";
    cfg.family = "random";
    cfg.weights = "distinct";
    cfg.sizes = {{17, 32}, {33, 64}, {65, 128}, {129, 256}};
    cfg.seeds = 24;

    cfg.jobs = 1;
    auto t0 = Clock::now();
    auto serial = harness::run_experiment(cfg);
    auto t1 = Clock::now();
    cfg.jobs = 0; // all threads
    auto parallel = harness::run_experiment(cfg);
    auto t2 = Clock::now();

    auto ms = [](auto d) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    };
    bool identical = serial.size() == parallel.size();
    for (std::size_t i = 0; identical && i < serial.size(); ++i)
        identical = csv_row(serial[i]) == csv_row(parallel[i]);

    std::cout << "runs:            " << serial.size() << "\n";
    std::cout << "serial (jobs=1): " << ms(t1 - t0) << " ms\n";
    std::cout << "parallel:        " << ms(t2 - t1) << " ms\n";
    std::cout << "speedup:         "
              << (ms(t2 - t1) > 0 ? static_cast<double>(ms(t1 - t0)) /
                                        static_cast<double>(ms(t2 - t1))
                                  : 0.0)
              << "x\n";
    std::cout << "rows identical:  " << (identical ? "yes" : "NO") << "\n";
    return identical ? 0 : 1;
}
