#include "landau/parallel.hpp"

#include <omp.h>

namespace landau {

int max_threads() { return omp_get_max_threads(); }

}  // namespace landau
