#ifndef ICETAB_THREADS_HPP
#define ICETAB_THREADS_HPP

#ifdef _OPENMP
#include <omp.h>
#endif

namespace icetab {

// requested <= 0 means "use all available"; without OpenMP everything
// runs on one thread.
inline int resolve_threads(int requested) {
#ifdef _OPENMP
  return requested <= 0 ? omp_get_max_threads() : requested;
#else
  (void)requested;
  return 1;
#endif
}

}  // namespace icetab

#endif
