#ifndef PAMONA_PARALLEL_HPP_
#define PAMONA_PARALLEL_HPP_

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pamona {

// Worker count used by the parallel kernels.  0 = library default
// (whatever OpenMP picks), 1 = force the serial reference path.
// Every parallel kernel merges per-thread results in canonical order,
// so outputs are identical for any job count.
inline int& job_count() {
  static int jobs = 0;
  return jobs;
}

inline void set_jobs(int jobs) { job_count() = jobs < 0 ? 0 : jobs; }

inline int effective_jobs() {
#ifdef _OPENMP
  int j = job_count();
  return j == 0 ? omp_get_max_threads() : j;
#else
  return 1;
#endif
}

inline bool parallel_enabled() { return effective_jobs() > 1; }

}  // namespace pamona

#endif  // PAMONA_PARALLEL_HPP_
