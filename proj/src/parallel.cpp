#include "unram/parallel.hpp"

#include <omp.h>

namespace unram {

int max_threads() { return omp_get_max_threads(); }

}  // namespace unram
