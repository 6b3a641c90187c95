#ifndef PAMONA_KERNELS_HPP_
#define PAMONA_KERNELS_HPP_

#include <cstdint>
#include <vector>

namespace pamona {
namespace kernels {

// Hot inner loops, each in a serial reference version and an
// OpenMP-parallel version.  The parallel versions must produce
// bit-identical results for any job count; tests compare them and
// tools/bench times them.  Dispatch helpers pick a version from the
// global job count.

// First associativity failure (i, j, k) in row-major scan order over a
// flat n*n table, or (-1,-1,-1) if the table is associative.
struct TripleResult {
  int i = -1, j = -1, k = -1;
  bool ok() const { return i == -1; }
};

TripleResult first_nonassociative_serial(std::vector<int32_t> const& table,
                                         int n);
TripleResult first_nonassociative_parallel(std::vector<int32_t> const& table,
                                           int n);
TripleResult first_nonassociative(std::vector<int32_t> const& table, int n);

}  // namespace kernels
}  // namespace pamona

#endif  // PAMONA_KERNELS_HPP_
