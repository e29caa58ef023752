// Times the OpenMP batch kernels against their serial references.

#include <chrono>
#include <cstdio>
#include <vector>

#include "hmeans/experiments.hpp"
#include "hmeans/gridmap.hpp"
#include "hmeans/identities.hpp"

using namespace hmeans;

namespace {

template <class F>
double time_ms(F&& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

template <class F, class G>
void report(const char* label, F&& serial, G&& parallel) {
    serial();  // warm up allocators and tables
    double ts = time_ms(serial);
    double tp = time_ms(parallel);
    std::printf("%-32s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx\n", label, ts, tp,
                ts / tp);
}

struct ProbeInputs {
    double p1, p2, a, b, x;
    int m1, m2;
};

std::vector<ProbeInputs> probe_inputs(int count) {
    std::vector<ProbeInputs> inputs;
    std::uint64_t state = 99;
    auto uniform = [&](double lo, double hi) {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z ^= (z >> 31);
        return lo + (hi - lo) * (static_cast<double>(z >> 11) * 0x1.0p-53);
    };
    while (static_cast<int>(inputs.size()) < count) {
        ProbeInputs in{};
        in.m1 = 1 + static_cast<int>(uniform(0, 3.999));
        in.m2 = static_cast<int>(uniform(0, in.m1 - 0.001));
        in.p1 = uniform(2.1, 6.0) + 0.3;
        in.p2 = in.p1 + uniform(0.5, 2.0);
        in.a = uniform(0.3, 3.0);
        in.b = in.a + uniform(0.2, 3.0);
        in.x = in.a + (in.b - in.a) * uniform(0.1, 0.9);
        inputs.push_back(in);
    }
    return inputs;
}

} // namespace

int main() {
    {
        IdentityGrid grid;
        grid.max_m = 10;
        report(
            "identity battery (max_m=10)",
            [&] { run_identity_grid(grid, Execution::serial); },
            [&] { run_identity_grid(grid, Execution::parallel); });
    }
    {
        report(
            "harmonic suite (root solves)",
            [] { run_theorem_suite(TheoremSuite::harmonic, Execution::serial); },
            [] { run_theorem_suite(TheoremSuite::harmonic, Execution::parallel); });
    }
    {
        auto inputs = probe_inputs(4000);
        std::vector<double> gaps(inputs.size());
        auto body = [&](std::size_t i) {
            const ProbeInputs& in = inputs[i];
            CauchyPair z = lemma_L3_probe(in.p1, in.p2, in.m1, in.m2, in.a, in.b, in.x);
            gaps[i] = z.zeta_q - z.zeta_p;
        };
        report(
            "mean-value probe (4000 cases)",
            [&] { for_each_index(inputs.size(), Execution::serial, body); },
            [&] { for_each_index(inputs.size(), Execution::parallel, body); });
    }
    return 0;
}
