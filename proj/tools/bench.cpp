// Times the serial reference path against the OpenMP path on identical
// inputs and checks the outputs match: scan2 over a prime bound, plus the
// theta lattice scan for one prime pair.

#include <chrono>
#include <cstdio>
#include <thread>

#include "CLI11.hpp"
#include "triplesym/cubic.hpp"
#include "triplesym/redei.hpp"

using namespace triplesym;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool same_rows(const std::vector<ScanRow>& a, const std::vector<ScanRow>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].p1 != b[i].p1 || a[i].p2 != b[i].p2 || a[i].p3 != b[i].p3 ||
            !(a[i].value == b[i].value) || a[i].verified != b[i].verified)
            return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    unsigned long bound = 300;
    int jobs = (int)std::thread::hardware_concurrency();
    if (jobs < 2) jobs = 2;
    long q1 = 17, q2 = 53;
    bool no_theta = false;

    CLI::App app{"serial vs parallel kernel comparison"};
    app.add_option("--bound", bound, "scan2 prime bound");
    app.add_option("--jobs", jobs, "threads for the parallel runs")->check(CLI::PositiveNumber);
    app.add_option("--q1", q1, "first prime of the theta pair");
    app.add_option("--q2", q2, "second prime of the theta pair");
    app.add_flag("--no-theta", no_theta, "skip the theta search comparison");
    CLI11_PARSE(app, argc, argv);

    std::printf("scan2 bound=%lu\n", bound);
    auto t0 = Clock::now();
    std::vector<ScanRow> serial = scan2(bound, 1);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    std::vector<ScanRow> parallel = scan2(bound, jobs);
    double tp = seconds_since(t0);
    std::printf("  serial   %8.3fs  (%zu rows)\n", ts, serial.size());
    std::printf("  jobs=%-3d %8.3fs  speedup %.2fx\n", jobs, tp, tp > 0 ? ts / tp : 0.0);
    std::printf("  identical rows: %s\n", same_rows(serial, parallel) ? "yes" : "NO");

    if (!no_theta) {
        PrimaryPrime p1(primary_associate(prime_above(OddPrime(q1))));
        PrimaryPrime p2(primary_associate(prime_above(OddPrime(q2))));
        std::printf("theta_search pair=(%ld,%ld)\n", q1, q2);
        ThetaSearchOptions opt;
        t0 = Clock::now();
        opt.jobs = 1;
        ThetaElement a = theta_search(p1, p2, opt);
        ts = seconds_since(t0);
        t0 = Clock::now();
        opt.jobs = jobs;
        ThetaElement b = theta_search(p1, p2, opt);
        tp = seconds_since(t0);
        std::printf("  serial   %8.3fs\n", ts);
        std::printf("  jobs=%-3d %8.3fs  speedup %.2fx\n", jobs, tp, tp > 0 ? ts / tp : 0.0);
        bool same = true;
        for (int i = 0; i < 3; ++i)
            if (a.c[i] != b.c[i]) same = false;
        std::printf("  identical theta: %s\n", same ? "yes" : "NO");
    }
    return 0;
}
