#include "pamona/partial_bijection.hpp"

#include <algorithm>

#include "pamona/error.hpp"

namespace pamona {

PartialBijection::PartialBijection(int src_n, int dst_n, uint32_t src_tag,
                                   uint32_t dst_tag, std::vector<int> img)
    : _src_n(src_n),
      _dst_n(dst_n),
      _src_tag(src_tag),
      _dst_tag(dst_tag),
      _img(std::move(img)) {
  if (int(_img.size()) != src_n) {
    throw InvalidArgument("partial bijection image vector has wrong length");
  }
  std::vector<bool> hit(dst_n, false);
  for (int x = 0; x < src_n; ++x) {
    int y = _img[x];
    if (y == -1) {
      continue;
    }
    if (y < 0 || y >= dst_n) {
      throw InvalidArgument("partial bijection image out of range");
    }
    if (hit[y]) {
      throw InvalidArgument("partial bijection is not injective");
    }
    hit[y] = true;
    ++_count;
  }
}

PartialBijection PartialBijection::empty_map(int src_n, int dst_n,
                                             uint32_t src_tag,
                                             uint32_t dst_tag) {
  return PartialBijection(src_n, dst_n, src_tag, dst_tag,
                          std::vector<int>(src_n, -1));
}

PartialBijection PartialBijection::empty_map(Semigroup const& s) {
  return empty_map(s.order(), s.order(), s.carrier_tag(), s.carrier_tag());
}

PartialBijection PartialBijection::total_identity(Semigroup const& s) {
  return identity_on(s, Bitset::full(s.order()));
}

PartialBijection PartialBijection::identity_on(Semigroup const& s,
                                               Bitset const& dom) {
  std::vector<int> img(s.order(), -1);
  for (int x = dom.next(0); x != -1; x = dom.next(x + 1)) {
    img[x] = x;
  }
  return PartialBijection(s.order(), s.order(), s.carrier_tag(),
                          s.carrier_tag(), std::move(img));
}

Bitset PartialBijection::domain() const {
  Bitset b(_src_n);
  for (int x = 0; x < _src_n; ++x) {
    if (_img[x] != -1) {
      b.set(x);
    }
  }
  return b;
}

Bitset PartialBijection::range() const {
  Bitset b(_dst_n);
  for (int x = 0; x < _src_n; ++x) {
    if (_img[x] != -1) {
      b.set(_img[x]);
    }
  }
  return b;
}

bool PartialBijection::is_identity_map() const {
  if (_src_n != _dst_n || _src_tag != _dst_tag) {
    return false;
  }
  for (int x = 0; x < _src_n; ++x) {
    if (_img[x] != -1 && _img[x] != x) {
      return false;
    }
  }
  return true;
}

PartialBijection PartialBijection::inverse() const {
  std::vector<int> img(_dst_n, -1);
  for (int x = 0; x < _src_n; ++x) {
    if (_img[x] != -1) {
      img[_img[x]] = x;
    }
  }
  return PartialBijection(_dst_n, _src_n, _dst_tag, _src_tag, std::move(img));
}

size_t PartialBijection::hash() const {
  size_t h = 1469598103934665603ull;
  auto mix = [&](size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(size_t(_src_n));
  mix(size_t(_dst_n));
  mix(size_t(_src_tag));
  mix(size_t(_dst_tag));
  for (int v : _img) {
    mix(size_t(uint32_t(v)));
  }
  return h;
}

PartialBijection compose(PartialBijection const& a, PartialBijection const& b) {
  if (a.dst_size() != b.src_size() || a.dst_tag() != b.src_tag()) {
    throw ContractViolation(
        "composing partial bijections over mismatched carriers");
  }
  std::vector<int> img(a.src_size(), -1);
  for (int x = 0; x < a.src_size(); ++x) {
    int y = a.image(x);
    if (y != -1 && b.defined(y)) {
      img[x] = b.image(y);
    }
  }
  return PartialBijection(a.src_size(), b.dst_size(), a.src_tag(),
                          b.dst_tag(), std::move(img));
}

PartialBijection transport(PartialBijection const& theta,
                           PartialBijection const& alpha) {
  if (!theta.is_total() || theta.dom_count() != theta.dst_size()) {
    throw InvalidArgument("transport requires a total bijection");
  }
  if (alpha.src_size() != theta.src_size()
      || alpha.src_tag() != theta.src_tag()
      || alpha.dst_size() != theta.src_size()
      || alpha.dst_tag() != theta.src_tag()) {
    throw ContractViolation("transport: alpha does not live on theta's source");
  }
  std::vector<int> img(theta.dst_size(), -1);
  for (int x = 0; x < alpha.src_size(); ++x) {
    if (alpha.defined(x)) {
      img[theta.image(x)] = theta.image(alpha.image(x));
    }
  }
  return PartialBijection(theta.dst_size(), theta.dst_size(), theta.dst_tag(),
                          theta.dst_tag(), std::move(img));
}

PartialBijection total_map(Semigroup const& s, Semigroup const& t,
                           std::vector<int> const& img) {
  PartialBijection p(s.order(), t.order(), s.carrier_tag(), t.carrier_tag(),
                     img);
  if (!p.is_total() || p.dom_count() != t.order()) {
    throw InvalidArgument("expected a total bijection");
  }
  return p;
}

bool is_partial_automorphism(Semigroup const& s,
                             PartialBijection const& alpha) {
  if (alpha.src_size() != s.order() || alpha.src_tag() != s.carrier_tag()
      || alpha.dst_size() != s.order()
      || alpha.dst_tag() != s.carrier_tag()) {
    return false;
  }
  Bitset dom = alpha.domain();
  if (!is_closed(s, dom) || !is_closed(s, alpha.range())) {
    return false;
  }
  for (int x = dom.next(0); x != -1; x = dom.next(x + 1)) {
    for (int y = dom.next(0); y != -1; y = dom.next(y + 1)) {
      int p = s.product(x, y);
      if (!dom.test(p)) {
        return false;  // dom not closed; unreachable after is_closed
      }
      if (alpha.image(p) != s.product(alpha.image(x), alpha.image(y))) {
        return false;
      }
    }
  }
  return true;
}

bool canonical_less(PartialBijection const& a, PartialBijection const& b) {
  if (a.dom_count() != b.dom_count()) {
    return a.dom_count() < b.dom_count();
  }
  Bitset da = a.domain(), db = b.domain();
  if (!(da == db)) {
    return canonical_less(da, db);
  }
  return a.raw() < b.raw();
}

}  // namespace pamona
