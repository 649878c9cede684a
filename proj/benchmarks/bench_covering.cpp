// Times the coverage engine against the direct per-vector reference, and the
// single-thread kernel against the OpenMP one, on a few representative
// instances. Run manually; not part of the test suite.

#include "ffrunner/covering.hpp"
#include "ffrunner/verify.hpp"

#include <chrono>
#include <optional>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ffr;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename F>
double timed(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return seconds(t0);
}

void bench_instance(const std::string& label, std::vector<Poly> speeds, int k, int D, int threads) {
    CoverOptions serial;
    serial.k = k;
    serial.D = D;
    CoverOptions parallel = serial;
    parallel.threads = threads;

    CoverReport engine_rep, par_rep;
    double t_engine = timed([&] { engine_rep = covers(speeds, serial); });
    double t_par = timed([&] { par_rep = covers(speeds, parallel); });

    bool same = engine_rep.covers_all == par_rep.covers_all &&
                engine_rep.covered_count == par_rep.covered_count &&
                engine_rep.witness == par_rep.witness &&
                engine_rep.per_polynomial_new == par_rep.per_polynomial_new;

    std::printf("%-34s |F|=%3zu q=%llu D=%d k=%d  engine %8.3fs  omp(%d) %8.3fs  speedup %4.2fx  %s\n",
                label.c_str(), engine_rep.speeds.size(), (unsigned long long)engine_rep.q, engine_rep.D,
                k, t_engine, threads, t_par, t_engine / (t_par > 0 ? t_par : 1e-9),
                same ? "identical" : "MISMATCH");
}

void bench_reference(const std::string& label, std::vector<Poly> speeds, int k, int D) {
    CoverOptions opts;
    opts.k = k;
    opts.D = D;
    CoverReport engine_rep, ref_rep;
    double t_engine = timed([&] { engine_rep = covers(speeds, opts); });
    double t_ref = timed([&] { ref_rep = covers_reference(speeds, opts); });
    bool same = engine_rep.covers_all == ref_rep.covers_all &&
                engine_rep.covered_count == ref_rep.covered_count &&
                engine_rep.witness == ref_rep.witness &&
                engine_rep.per_polynomial_new == ref_rep.per_polynomial_new;
    std::printf("%-34s |F|=%3zu q=%llu D=%d k=%d  engine %8.3fs  reference %8.3fs  speedup %6.1fx  %s\n",
                label.c_str(), engine_rep.speeds.size(), (unsigned long long)engine_rep.q, engine_rep.D,
                k, t_engine, t_ref, t_ref / (t_engine > 0 ? t_engine : 1e-9),
                same ? "identical" : "MISMATCH");
}

void bench_direct(const std::string& label, std::vector<Poly> speeds, int threads) {
    DirectOptions serial;
    DirectOptions par;
    par.threads = threads;
    std::optional<DirectResult> a, b;
    double t_serial = timed([&] { a = loneliness_direct(speeds, serial); });
    double t_par = timed([&] { b = loneliness_direct(speeds, par); });
    LonelinessResult via_cover = loneliness(speeds);
    bool same = a->exponent_k == b->exponent_k && a->witness.index() == b->witness.index() &&
                a->exponent_k == via_cover.exponent_k;
    std::printf("%-34s |F|=%3zu  direct %8.3fs  direct-omp(%d) %8.3fs  covering agrees: %s\n",
                label.c_str(), speeds.size(), t_serial, threads, t_par, same ? "yes" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int threads = 2;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    if (argc > 1) threads = std::atoi(argv[1]);

    std::printf("== engine vs direct reference (exact same reports expected) ==\n");
    {
        Field f8(2, 3);
        bench_reference("full monic deg<=2 over F_8, D=3", monic_up_to_degree(f8, 2), 2, 3);
        Field f3(3, 1);
        bench_reference("full monic deg<=3 over F_3, D=7", monic_up_to_degree(f3, 3), 2, 7);
    }

    std::printf("\n== single-thread engine vs OpenMP engine ==\n");
    {
        Field f2(2, 1);
        std::mt19937_64 rng(7);
        auto pool = monic_of_degree(f2, 12);
        std::vector<Poly> fam;
        while (fam.size() < 24) {
            const Poly& cand = pool[rng() % pool.size()];
            bool seen = false;
            for (const Poly& g : fam)
                if (g == cand) seen = true;
            if (!seen) fam.push_back(cand);
        }
        CoverOptions big;
        big.k = 2;
        big.D = 22;  // 2^24 bitmap, ~16.7M kernel points per speed
        CoverOptions bigp = big;
        bigp.threads = threads;
        CoverReport a, b;
        double t1 = timed([&] { a = covers(fam, big); });
        double t2 = timed([&] { b = covers(fam, bigp); });
        bool same = a.covered_count == b.covered_count && a.witness == b.witness &&
                    a.per_polynomial_new == b.per_polynomial_new;
        std::printf("%-34s |F|=%3zu q=2 D=%d k=2  engine %8.3fs  omp(%d) %8.3fs  speedup %4.2fx  %s\n",
                    "random deg-12 speeds, big ambient", fam.size(), big.D, t1, threads, t2,
                    t1 / (t2 > 0 ? t2 : 1e-9), same ? "identical" : "MISMATCH");

        Field f3(3, 1);
        bench_instance("full monic deg<=3 over F_3, D=9", monic_up_to_degree(f3, 3), 2, 9, threads);
    }

    std::printf("\n== tail enumeration oracle ==\n");
    {
        Field f2(2, 1);
        bench_direct("full monic deg<=3 over F_2", monic_up_to_degree(f2, 3), threads);
        Field f3(3, 1);
        bench_direct("full monic deg<=2 over F_3", monic_up_to_degree(f3, 2), threads);
    }
    return 0;
}
