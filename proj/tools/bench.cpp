// Serial vs OpenMP timings for the two heavy kernels: the exhaustive
// chamber sweep and the bounded configuration search.  Results must agree
// exactly; the speedup is whatever the machine gives.

#include <omp.h>

#include <cstdio>

#include "rbd/fixtures.hpp"
#include "rbd/swcalc.hpp"

using namespace rbd;

int main(int argc, char** argv) {
    int b_max = argc > 1 ? std::atoi(argv[1]) : 9;
    int bound = argc > 2 ? std::atoi(argv[2]) : 7;

    std::printf("threads: %d\n", omp_get_max_threads());

    double t0 = omp_get_wtime();
    ChamberSweepResult serial = chamber_sweep_serial(b_max, bound);
    double t1 = omp_get_wtime();
    ChamberSweepResult parallel = chamber_sweep(b_max, bound);
    double t2 = omp_get_wtime();

    bool same = serial.candidates == parallel.candidates &&
                serial.admissible == parallel.admissible &&
                serial.nonpositive_square == parallel.nonpositive_square &&
                serial.negative_square == parallel.negative_square;
    std::printf("chamber sweep (b<=%d, bound %d): %lld classes\n", b_max, bound,
                serial.candidates);
    std::printf("  serial   %.3fs\n", t1 - t0);
    std::printf("  openmp   %.3fs   (x%.2f, results %s)\n", t2 - t1,
                (t2 - t1) > 0 ? (t1 - t0) / (t2 - t1) : 0.0, same ? "identical" : "DIFFER");

    std::map<int, HomologyClass> fixed{
        {1, fixtures::cycle_leg_sphere()},
        {3, fixtures::smoothed_fishtail_sphere()},
    };
    PlumbingGraph tree = wahl_tree(Int(2));
    BlowupLattice lat = fixtures::rational_surface(13);

    t0 = omp_get_wtime();
    auto found_serial = find_configuration_serial(tree, lat, fixed);
    t1 = omp_get_wtime();
    auto found_parallel = find_configuration(tree, lat, fixed);
    t2 = omp_get_wtime();

    bool search_same = found_serial.has_value() == found_parallel.has_value() &&
                       (!found_serial || found_serial->classes == found_parallel->classes);
    std::printf("completion search (bound 3, rank 14):\n");
    std::printf("  serial   %.3fs\n", t1 - t0);
    std::printf("  openmp   %.3fs   (x%.2f, results %s)\n", t2 - t1,
                (t2 - t1) > 0 ? (t1 - t0) / (t2 - t1) : 0.0,
                search_same ? "identical" : "DIFFER");

    return same && search_same ? 0 : 1;
}
