#ifndef PAMONA_SEMIGROUP_HPP_
#define PAMONA_SEMIGROUP_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pamona/bitset.hpp"
#include "pamona/error.hpp"

namespace pamona {

// A validated finite semigroup: a square Cayley table over element
// indices 0..n-1.  Construction goes through validate(), which checks
// associativity for every triple; no unvalidated instance can exist.
// Instances are immutable and safe to share across threads.
class Semigroup {
 public:
  // Throws OutOfRange on a bad entry, NotAssociative naming the first
  // failing triple in row-major (i, j, k) scan order.
  static Semigroup validate(std::vector<std::vector<int>> const& table,
                            std::vector<std::string> labels = {});

  // Same checks, flat row-major table.
  static Semigroup validate_flat(int order, std::vector<int32_t> table,
                                 std::vector<std::string> labels = {});

  int order() const { return _order; }
  int product(int i, int j) const { return _table[i * _order + j]; }

  bool has_labels() const { return !_labels.empty(); }
  std::string label(int i) const;
  std::vector<std::string> const& labels() const { return _labels; }
  Semigroup with_labels(std::vector<std::string> labels) const;

  std::vector<int32_t> const& table() const { return _table; }

  // FNV hash of order + table; identifies the carrier of a
  // PartialBijection so that cross-carrier mixups are caught.
  uint32_t carrier_tag() const { return _tag; }

  bool same_table(Semigroup const& o) const {
    return _order == o._order && _table == o._table;
  }

 private:
  Semigroup(int order, std::vector<int32_t> table,
            std::vector<std::string> labels);

  int _order;
  std::vector<int32_t> _table;
  std::vector<std::string> _labels;
  uint32_t _tag;
};

// o(x) = ind(x) + period(x) - 1 always; carriers are finite, so there is
// no infinite-order case.
struct ElementProfile {
  int element;
  int order;
  int index;
  int period;
  bool idempotent;
  bool regular;
  std::vector<int> inverses;
};

// The five Green's partitions plus the principal-ideal orders.
// Class ids are canonical: classes are numbered by their least element.
struct GreenData {
  std::vector<int> h, l, r, d, j;  // class id per element
  int n_h, n_l, n_r, n_d, n_j;

  // leq[a][b]: class a lies below class b in the principal-ideal order
  std::vector<std::vector<bool>> j_leq, l_leq, r_leq;

  std::vector<std::vector<int>> classes_of(std::vector<int> const& ids,
                                           int count) const;
};

// Natural partial order of an inverse semigroup: x <= y iff x = (x x^-1) y.
struct NaturalOrder {
  std::vector<std::vector<bool>> leq;
  bool below(int x, int y) const { return leq[x][y]; }
};

std::vector<int> idempotents(Semigroup const& s);
std::vector<int> regular_elements(Semigroup const& s);
std::vector<int> inverses_of(Semigroup const& s, int x);

bool is_regular_semigroup(Semigroup const& s);
bool is_idempotent_commutative(Semigroup const& s);

// Regular + idempotent-commutative.  Cross-checked against the
// class-theoretic criterion (each L- and R-class holds exactly one
// idempotent); disagreement would be a library bug and throws.
bool is_inverse_semigroup(Semigroup const& s);

// Unique inverse of x in an inverse semigroup.
int unique_inverse(Semigroup const& s, int x);

GreenData green(Semigroup const& s);

NaturalOrder natural_order(Semigroup const& s);

ElementProfile element_profile(Semigroup const& s, int x);

std::vector<int> monogenic(Semigroup const& s, int x);
std::vector<int> monogenic_inverse(Semigroup const& s, int x);

// Elements whose monogenic subsemigroup has a unique generator.
// Computed directly and via the index/order criterion; the two must agree.
std::vector<int> m_set(Semigroup const& s);
// Elements lying in no subgroup.
std::vector<int> n_set(Semigroup const& s);

bool is_combinatorial(Semigroup const& s);
bool is_group(Semigroup const& s);
bool is_semilattice(Semigroup const& s);
bool is_chain_semilattice(Semigroup const& s);
bool is_commutative(Semigroup const& s);

// Identity element index, or -1.
int identity_of(Semigroup const& s);
// Zero (absorbing) element index, or -1.
int zero_of(Semigroup const& s);

// Least closed superset of the given subset (empty stays empty).
Bitset subsemigroup_closure(Semigroup const& s, Bitset seed);
bool is_closed(Semigroup const& s, Bitset const& subset);
// Closed under product and, in an inverse semigroup, under inversion.
bool is_inverse_closed(Semigroup const& s, Bitset const& subset);

Semigroup opposite(Semigroup const& s);

// Re-index a closed subset as a semigroup of its own.  Second component
// maps local index -> global index.
std::pair<Semigroup, std::vector<int>> induced_subsemigroup(
    Semigroup const& s, Bitset const& subset);

}  // namespace pamona

#endif  // PAMONA_SEMIGROUP_HPP_
