#include "pamona/kernels.hpp"

#include <limits>

#include "pamona/parallel.hpp"

namespace pamona {
namespace kernels {

TripleResult first_nonassociative_serial(std::vector<int32_t> const& table,
                                         int n) {
  auto at = [&](int a, int b) { return table[a * n + b]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int ij = at(i, j);
      for (int k = 0; k < n; ++k) {
        if (at(ij, k) != at(i, at(j, k))) {
          return {i, j, k};
        }
      }
    }
  }
  return {};
}

TripleResult first_nonassociative_parallel(std::vector<int32_t> const& table,
                                           int n) {
  auto at = [&](int a, int b) { return table[a * n + b]; };
  long best = std::numeric_limits<long>::max();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : best) \
    num_threads(effective_jobs())
#endif
  for (int i = 0; i < n; ++i) {
    long row_best = std::numeric_limits<long>::max();
    for (int j = 0; j < n && row_best == std::numeric_limits<long>::max();
         ++j) {
      int ij = at(i, j);
      for (int k = 0; k < n; ++k) {
        if (at(ij, k) != at(i, at(j, k))) {
          row_best = (long(i) * n + j) * n + k;
          break;
        }
      }
    }
    if (row_best < best) {
      best = row_best;
    }
  }
  if (best == std::numeric_limits<long>::max()) {
    return {};
  }
  int k = int(best % n);
  int j = int((best / n) % n);
  int i = int(best / n / n);
  return {i, j, k};
}

TripleResult first_nonassociative(std::vector<int32_t> const& table, int n) {
  if (parallel_enabled() && n >= 64) {
    return first_nonassociative_parallel(table, n);
  }
  return first_nonassociative_serial(table, n);
}

}  // namespace kernels
}  // namespace pamona
