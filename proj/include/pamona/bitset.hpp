#ifndef PAMONA_BITSET_HPP_
#define PAMONA_BITSET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace pamona {

// Dynamic bitset over element indices 0..n-1.  Used for subsemigroups,
// ideals and partial-map domains.  The canonical ordering is
// (popcount, then smallest differing element belongs to the smaller set),
// which gives the member ordering used throughout.
class Bitset {
 public:
  Bitset() : _n(0) {}
  explicit Bitset(int n) : _n(n), _w((n + 63) / 64, 0) {}

  int universe() const { return _n; }

  void set(int i) { _w[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { _w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (_w[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto w : _w) {
      c += std::popcount(w);
    }
    return c;
  }

  bool none() const {
    for (auto w : _w) {
      if (w != 0) {
        return false;
      }
    }
    return true;
  }

  bool is_subset_of(Bitset const& o) const {
    for (size_t i = 0; i < _w.size(); ++i) {
      if (_w[i] & ~o._w[i]) {
        return false;
      }
    }
    return true;
  }

  Bitset operator&(Bitset const& o) const {
    Bitset r(_n);
    for (size_t i = 0; i < _w.size(); ++i) {
      r._w[i] = _w[i] & o._w[i];
    }
    return r;
  }

  Bitset operator|(Bitset const& o) const {
    Bitset r(_n);
    for (size_t i = 0; i < _w.size(); ++i) {
      r._w[i] = _w[i] | o._w[i];
    }
    return r;
  }

  bool operator==(Bitset const& o) const = default;

  // first set index >= from, or -1
  int next(int from = 0) const {
    for (int i = from; i < _n;) {
      uint64_t w = _w[i >> 6] >> (i & 63);
      if (w != 0) {
        return i + std::countr_zero(w);
      }
      i = ((i >> 6) + 1) << 6;
    }
    return -1;
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    for (int i = next(0); i != -1; i = next(i + 1)) {
      out.push_back(i);
    }
    return out;
  }

  static Bitset of(int n, std::vector<int> const& idx) {
    Bitset b(n);
    for (int i : idx) {
      b.set(i);
    }
    return b;
  }

  static Bitset full(int n) {
    Bitset b(n);
    for (int i = 0; i < n; ++i) {
      b.set(i);
    }
    return b;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (auto w : _w) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

  std::vector<uint64_t> const& words() const { return _w; }

 private:
  int _n;
  std::vector<uint64_t> _w;
};

// Canonical member order: smaller sets first; among equal sizes the set
// containing the smallest differing element comes first.
inline bool canonical_less(Bitset const& a, Bitset const& b) {
  int ca = a.count(), cb = b.count();
  if (ca != cb) {
    return ca < cb;
  }
  for (size_t i = 0; i < a.words().size(); ++i) {
    uint64_t wa = a.words()[i], wb = b.words()[i];
    if (wa != wb) {
      uint64_t diff = wa ^ wb;
      uint64_t low = diff & (~diff + 1);
      return (wa & low) != 0;
    }
  }
  return false;
}

struct BitsetHash {
  size_t operator()(Bitset const& b) const { return b.hash(); }
};

}  // namespace pamona

#endif  // PAMONA_BITSET_HPP_
