#pragma once

#include <cstddef>

namespace hmeans {

/// How batch layers (identity grids, theorem-suite grids, probe sweeps) run
/// their independent cases. Results are always written by case index, so the
/// two modes produce identical output.
enum class Execution { serial, parallel };

template <class F>
void for_each_index(std::size_t count, Execution exec, F&& body) {
#ifdef _OPENMP
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < count; ++i) body(i);
}

} // namespace hmeans
