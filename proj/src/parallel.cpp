#include "mip/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mip {

namespace {
bool g_parallel =
#ifdef _OPENMP
    true;
#else
    false;
#endif
}

void set_parallel(bool on) {
#ifdef _OPENMP
    g_parallel = on;
#else
    (void)on;
    g_parallel = false;
#endif
}

bool parallel_enabled() { return g_parallel; }

int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace mip
