#ifndef PAMONA_PARTIAL_BIJECTION_HPP_
#define PAMONA_PARTIAL_BIJECTION_HPP_

#include <cstdint>
#include <vector>

#include "pamona/bitset.hpp"
#include "pamona/semigroup.hpp"

namespace pamona {

// An injective partial map between element index sets, possibly across
// two different carriers.  Carrier sizes and tags travel with the map;
// composing maps whose carriers do not line up throws rather than
// producing silent nonsense.
//
// Composition is "apply left, then right" (maps act on the right), so
// x (a * b) = (x a) b and dom(a * b) = (ran a  meet  dom b) a^-1.
class PartialBijection {
 public:
  PartialBijection() : _src_n(0), _dst_n(0), _src_tag(0), _dst_tag(0) {}

  PartialBijection(int src_n, int dst_n, uint32_t src_tag, uint32_t dst_tag,
                   std::vector<int> img);

  static PartialBijection empty_map(int src_n, int dst_n, uint32_t src_tag,
                                    uint32_t dst_tag);
  static PartialBijection empty_map(Semigroup const& s);
  static PartialBijection total_identity(Semigroup const& s);
  static PartialBijection identity_on(Semigroup const& s, Bitset const& dom);

  int src_size() const { return _src_n; }
  int dst_size() const { return _dst_n; }
  uint32_t src_tag() const { return _src_tag; }
  uint32_t dst_tag() const { return _dst_tag; }

  bool defined(int x) const { return _img[x] != -1; }
  int image(int x) const { return _img[x]; }
  std::vector<int> const& raw() const { return _img; }

  int dom_count() const { return _count; }
  Bitset domain() const;
  Bitset range() const;

  bool is_empty() const { return _count == 0; }
  bool is_total() const { return _count == _src_n; }
  // x -> x on its domain; requires matching carriers on both sides
  bool is_identity_map() const;

  PartialBijection inverse() const;

  bool operator==(PartialBijection const& o) const = default;

  size_t hash() const;

 private:
  int _src_n, _dst_n;
  uint32_t _src_tag, _dst_tag;
  std::vector<int> _img;  // -1 = undefined
  int _count = 0;
};

// a then b; throws ContractViolation when b's source is not a's target.
PartialBijection compose(PartialBijection const& a, PartialBijection const& b);

// theta^-1 . alpha . theta for a total bijection theta: dom alpha's
// carrier -> another carrier.  dom(result) = (dom alpha) theta.
PartialBijection transport(PartialBijection const& theta,
                           PartialBijection const& alpha);

// Total bijection S -> T from an image vector.
PartialBijection total_map(Semigroup const& s, Semigroup const& t,
                           std::vector<int> const& img);

// dom and ran are closed subsets and the map is multiplicative on dom.
bool is_partial_automorphism(Semigroup const& s,
                             PartialBijection const& alpha);

// Canonical order: (|dom|, dom bits, then image values along the domain).
bool canonical_less(PartialBijection const& a, PartialBijection const& b);

struct PartialBijectionHash {
  size_t operator()(PartialBijection const& p) const { return p.hash(); }
};

}  // namespace pamona

#endif  // PAMONA_PARTIAL_BIJECTION_HPP_
