/*
   Copyright 2026 The nilcheck Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Serial vs OpenMP timings for the orbit-sum and dense-multiplication kernels.
// Thread count follows NILCHECK_THREADS / OMP_NUM_THREADS.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <CLI11.hpp>

#include "nilcheck/kernels.hpp"
#include "nilcheck/parallel.hpp"
#include "nilcheck/reflection_group.hpp"
#include "nilcheck/sampling.hpp"

using namespace nilcheck;
using Clock = std::chrono::steady_clock;

namespace {

double best_of(int repeat, const std::function<void()>& body) {
    double best = 1e300;
    for (int r = 0; r < repeat; ++r) {
        const auto start = Clock::now();
        body();
        best = std::min(best, std::chrono::duration<double>(Clock::now() - start).count());
    }
    return best;
}

void row(const std::string& name, double serial, double parallel, bool same) {
    std::printf("%-34s serial %9.4fs  parallel %9.4fs  speedup %5.2fx  %s\n", name.c_str(), serial, parallel,
                serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kernel benchmarks"};
    int repeat = 3;
    std::uint64_t seed = 0xbe4c;
    app.add_option("--repeat", repeat, "timing repetitions (best is reported)")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "sampling seed");
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d\n", thread_budget());
    Sampler sampler(seed);
    bool ok = true;

    struct OrbitCase {
        unsigned rank;
        std::uint32_t p;
        unsigned degree;
    };
    for (const auto& c : {OrbitCase{3, 11, 10}, OrbitCase{3, 31, 20}, OrbitCase{4, 31, 6}}) {
        const auto group = build_coxeter_h(c.rank, c.p);
        const PrimeField field(c.p);
        const auto f = kernels::to_dense(sampler.homogeneous(t_context(c.rank), c.p, c.degree, 6));
        kernels::DenseForm s, q;
        const double ts = best_of(repeat, [&] { s = kernels::orbit_sum_serial(group.elements(), f, field); });
        const double tp = best_of(repeat, [&] { q = kernels::orbit_sum_parallel(group.elements(), f, field); });
        ok = ok && s.c == q.c;
        row("orbit_sum " + group.label() + " deg " + std::to_string(c.degree), ts, tp, s.c == q.c);
    }

    struct MulCase {
        std::size_t vars;
        unsigned da, db;
    };
    for (const auto& c : {MulCase{4, 20, 20}, MulCase{6, 10, 10}, MulCase{8, 6, 6}}) {
        const std::uint32_t p = 37;
        auto dense = [&](unsigned d) {
            auto g = sampler.homogeneous(t_context(c.vars), p, d, 400);
            return kernels::to_dense(g);
        };
        const auto a = dense(c.da), b = dense(c.db);
        kernels::DenseForm s, q;
        const double ts = best_of(repeat, [&] { s = kernels::dense_mul_serial(a, b, p); });
        const double tp = best_of(repeat, [&] { q = kernels::dense_mul_parallel(a, b, p); });
        ok = ok && s.c == q.c;
        row("dense_mul n=" + std::to_string(c.vars) + " " + std::to_string(c.da) + "x" + std::to_string(c.db), ts, tp,
            s.c == q.c);
    }
    return ok ? 0 : 1;
}
