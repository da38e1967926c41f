#include "rlii/parallel.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace rlii {

int hardware_threads() noexcept {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace rlii
