#include "mpkc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace mpkc {

int worker_budget() {
    if (const char* env = std::getenv("MPKC_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (...) {
        }
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace mpkc
