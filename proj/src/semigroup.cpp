#include "pamona/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "pamona/kernels.hpp"

namespace pamona {

namespace {

uint32_t fnv_tag(int order, std::vector<int32_t> const& table) {
  uint32_t h = 2166136261u;
  auto mix = [&](uint32_t v) {
    h ^= v;
    h *= 16777619u;
  };
  mix(uint32_t(order));
  for (int32_t v : table) {
    mix(uint32_t(v));
  }
  return h;
}

}  // namespace

Semigroup::Semigroup(int order, std::vector<int32_t> table,
                     std::vector<std::string> labels)
    : _order(order),
      _table(std::move(table)),
      _labels(std::move(labels)),
      _tag(fnv_tag(order, _table)) {}

Semigroup Semigroup::validate_flat(int order, std::vector<int32_t> table,
                                   std::vector<std::string> labels) {
  if (order <= 0) {
    throw InvalidArgument("semigroup order must be positive");
  }
  if (int64_t(table.size()) != int64_t(order) * order) {
    throw InvalidArgument("table is not square");
  }
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      int32_t v = table[i * order + j];
      if (v < 0 || v >= order) {
        throw OutOfRange(i, j);
      }
    }
  }
  auto fail = kernels::first_nonassociative(table, order);
  if (!fail.ok()) {
    throw NotAssociative(fail.i, fail.j, fail.k);
  }
  if (!labels.empty() && int(labels.size()) != order) {
    throw InvalidArgument("label count does not match order");
  }
  return Semigroup(order, std::move(table), std::move(labels));
}

Semigroup Semigroup::validate(std::vector<std::vector<int>> const& table,
                              std::vector<std::string> labels) {
  int n = int(table.size());
  std::vector<int32_t> flat;
  flat.reserve(size_t(n) * n);
  for (int i = 0; i < n; ++i) {
    if (int(table[i].size()) != n) {
      throw InvalidArgument("table is not square");
    }
    for (int j = 0; j < n; ++j) {
      flat.push_back(int32_t(table[i][j]));
    }
  }
  return validate_flat(n, std::move(flat), std::move(labels));
}

std::string Semigroup::label(int i) const {
  if (has_labels()) {
    return _labels[i];
  }
  return "x" + std::to_string(i);
}

Semigroup Semigroup::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && int(labels.size()) != _order) {
    throw InvalidArgument("label count does not match order");
  }
  Semigroup s = *this;
  s._labels = std::move(labels);
  return s;
}

std::vector<int> idempotents(Semigroup const& s) {
  std::vector<int> out;
  for (int e = 0; e < s.order(); ++e) {
    if (s.product(e, e) == e) {
      out.push_back(e);
    }
  }
  return out;
}

std::vector<int> inverses_of(Semigroup const& s, int x) {
  std::vector<int> out;
  for (int y = 0; y < s.order(); ++y) {
    if (s.product(s.product(x, y), x) == x
        && s.product(s.product(y, x), y) == y) {
      out.push_back(y);
    }
  }
  return out;
}

std::vector<int> regular_elements(Semigroup const& s) {
  std::vector<int> out;
  for (int x = 0; x < s.order(); ++x) {
    for (int y = 0; y < s.order(); ++y) {
      if (s.product(s.product(x, y), x) == x) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

bool is_regular_semigroup(Semigroup const& s) {
  return int(regular_elements(s).size()) == s.order();
}

bool is_idempotent_commutative(Semigroup const& s) {
  auto es = idempotents(s);
  if (es.empty()) {
    return false;
  }
  for (int e : es) {
    for (int f : es) {
      if (s.product(e, f) != s.product(f, e)) {
        return false;
      }
    }
  }
  return true;
}

bool is_inverse_semigroup(Semigroup const& s) {
  bool by_definition = is_regular_semigroup(s) && is_idempotent_commutative(s);

  // Equivalent criterion: every L-class and every R-class contains
  // exactly one idempotent.
  GreenData g = green(s);
  auto one_idempotent_per_class = [&](std::vector<int> const& cls, int count) {
    std::vector<int> seen(count, 0);
    for (int e : idempotents(s)) {
      seen[cls[e]] += 1;
    }
    for (int c = 0; c < count; ++c) {
      if (seen[c] != 1) {
        return false;
      }
    }
    return true;
  };
  bool by_classes = one_idempotent_per_class(g.l, g.n_l)
                    && one_idempotent_per_class(g.r, g.n_r);
  if (by_definition != by_classes) {
    throw ContractViolation(
        "inverse-semigroup criteria disagree (library bug)");
  }
  return by_definition;
}

int unique_inverse(Semigroup const& s, int x) {
  auto inv = inverses_of(s, x);
  if (inv.size() != 1) {
    throw NotInverse("element x" + std::to_string(x)
                     + " does not have a unique inverse");
  }
  return inv[0];
}

namespace {

// class ids numbered by least element, given per-element keys
template <typename Key>
std::pair<std::vector<int>, int> classes_by_key(std::vector<Key> const& key) {
  int n = int(key.size());
  std::vector<int> id(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (id[x] != -1) {
      continue;
    }
    id[x] = next;
    for (int y = x + 1; y < n; ++y) {
      if (id[y] == -1 && key[y] == key[x]) {
        id[y] = next;
      }
    }
    ++next;
  }
  return {id, next};
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<int>> GreenData::classes_of(
    std::vector<int> const& ids, int count) const {
  std::vector<std::vector<int>> out(count);
  for (int x = 0; x < int(ids.size()); ++x) {
    out[ids[x]].push_back(x);
  }
  return out;
}

GreenData green(Semigroup const& s) {
  int n = s.order();
  std::vector<Bitset> left(n, Bitset(n)), right(n, Bitset(n)),
      two(n, Bitset(n));
  for (int x = 0; x < n; ++x) {
    left[x].set(x);
    right[x].set(x);
    for (int a = 0; a < n; ++a) {
      left[x].set(s.product(a, x));
      right[x].set(s.product(x, a));
    }
    // S^1 x S^1 = {x} + Sx + xS + SxS
    two[x] = left[x] | right[x];
    for (int a = 0; a < n; ++a) {
      int ax = s.product(a, x);
      for (int b = 0; b < n; ++b) {
        two[x].set(s.product(ax, b));
      }
    }
  }

  GreenData g;
  std::tie(g.l, g.n_l) = classes_by_key(left);
  std::tie(g.r, g.n_r) = classes_by_key(right);
  std::tie(g.j, g.n_j) = classes_by_key(two);

  // H = L meet R
  std::vector<std::pair<int, int>> hk(n);
  for (int x = 0; x < n; ++x) {
    hk[x] = {g.l[x], g.r[x]};
  }
  std::tie(g.h, g.n_h) = classes_by_key(hk);

  // D = transitive closure of L + R (join of equivalences)
  DisjointSets ds(n);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (g.l[x] == g.l[y] || g.r[x] == g.r[y]) {
        ds.unite(x, y);
      }
    }
  }
  std::vector<int> droot(n);
  for (int x = 0; x < n; ++x) {
    droot[x] = ds.find(x);
  }
  std::tie(g.d, g.n_d) = classes_by_key(droot);

  // classical finiteness fact, asserted
  if (g.d != g.j) {
    throw ContractViolation("D != J on a finite semigroup (library bug)");
  }

  auto order_of = [&](std::vector<int> const& ids, int count,
                      std::vector<Bitset> const& ideal) {
    std::vector<int> repr(count, -1);
    for (int x = n - 1; x >= 0; --x) {
      repr[ids[x]] = x;
    }
    std::vector<std::vector<bool>> leq(count, std::vector<bool>(count, false));
    for (int a = 0; a < count; ++a) {
      for (int b = 0; b < count; ++b) {
        leq[a][b] = ideal[repr[a]].is_subset_of(ideal[repr[b]]);
      }
    }
    return leq;
  };
  g.j_leq = order_of(g.j, g.n_j, two);
  g.l_leq = order_of(g.l, g.n_l, left);
  g.r_leq = order_of(g.r, g.n_r, right);
  return g;
}

NaturalOrder natural_order(Semigroup const& s) {
  if (!is_inverse_semigroup(s)) {
    throw NotInverse();
  }
  int n = s.order();
  NaturalOrder no;
  no.leq.assign(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    int xi = unique_inverse(s, x);
    int xx = s.product(x, xi);
    for (int y = 0; y < n; ++y) {
      no.leq[x][y] = (x == s.product(xx, y));
    }
  }
  for (int x = 0; x < n; ++x) {
    if (!no.leq[x][x]) {
      throw ContractViolation("natural order not reflexive (library bug)");
    }
    for (int y = 0; y < n; ++y) {
      if (x != y && no.leq[x][y] && no.leq[y][x]) {
        throw ContractViolation("natural order not antisymmetric");
      }
      for (int z = 0; z < n; ++z) {
        if (no.leq[x][y] && no.leq[y][z] && !no.leq[x][z]) {
          throw ContractViolation("natural order not transitive");
        }
      }
    }
  }
  return no;
}

ElementProfile element_profile(Semigroup const& s, int x) {
  ElementProfile p;
  p.element = x;
  std::vector<int> first_seen(s.order(), -1);
  int cur = x;
  int step = 1;
  first_seen[x] = 1;
  for (;;) {
    cur = s.product(cur, x);
    ++step;
    if (first_seen[cur] != -1) {
      p.index = first_seen[cur];
      p.period = step - first_seen[cur];
      break;
    }
    first_seen[cur] = step;
  }
  p.order = p.index + p.period - 1;
  p.idempotent = (s.product(x, x) == x);
  p.inverses = inverses_of(s, x);
  p.regular = !p.inverses.empty();
  return p;
}

std::vector<int> monogenic(Semigroup const& s, int x) {
  std::vector<int> powers;
  std::vector<bool> seen(s.order(), false);
  int cur = x;
  while (!seen[cur]) {
    seen[cur] = true;
    powers.push_back(cur);
    cur = s.product(cur, x);
  }
  std::sort(powers.begin(), powers.end());
  return powers;
}

std::vector<int> monogenic_inverse(Semigroup const& s, int x) {
  if (!is_inverse_semigroup(s)) {
    throw NotInverse();
  }
  Bitset seed(s.order());
  seed.set(x);
  seed.set(unique_inverse(s, x));
  return subsemigroup_closure(s, seed).to_indices();
}

std::vector<int> m_set(Semigroup const& s) {
  int n = s.order();
  std::vector<std::vector<int>> gen_sets(n);
  for (int x = 0; x < n; ++x) {
    gen_sets[x] = monogenic(s, x);
  }
  std::vector<int> direct;
  for (int x = 0; x < n; ++x) {
    int generators = 0;
    for (int g : gen_sets[x]) {
      if (gen_sets[g] == gen_sets[x]) {
        ++generators;
      }
    }
    if (generators == 1) {
      direct.push_back(x);
    }
  }
  std::vector<int> by_criterion;
  for (int x = 0; x < n; ++x) {
    auto p = element_profile(s, x);
    if ((p.index == 1 && p.order <= 2) || p.index > 1) {
      by_criterion.push_back(x);
    }
  }
  if (direct != by_criterion) {
    throw ContractViolation("M_S criteria disagree (library bug)");
  }
  return direct;
}

std::vector<int> n_set(Semigroup const& s) {
  GreenData g = green(s);
  std::vector<bool> group_class(g.n_h, false);
  for (int e : idempotents(s)) {
    group_class[g.h[e]] = true;
  }
  std::vector<int> out;
  for (int x = 0; x < s.order(); ++x) {
    if (!group_class[g.h[x]]) {
      out.push_back(x);
    }
  }
  return out;
}

bool is_combinatorial(Semigroup const& s) {
  GreenData g = green(s);
  return g.n_h == s.order();
}

int identity_of(Semigroup const& s) {
  for (int e = 0; e < s.order(); ++e) {
    bool ok = true;
    for (int x = 0; x < s.order() && ok; ++x) {
      ok = s.product(e, x) == x && s.product(x, e) == x;
    }
    if (ok) {
      return e;
    }
  }
  return -1;
}

int zero_of(Semigroup const& s) {
  for (int z = 0; z < s.order(); ++z) {
    bool ok = true;
    for (int x = 0; x < s.order() && ok; ++x) {
      ok = s.product(z, x) == z && s.product(x, z) == z;
    }
    if (ok) {
      return z;
    }
  }
  return -1;
}

bool is_group(Semigroup const& s) {
  int e = identity_of(s);
  if (e == -1) {
    return false;
  }
  for (int x = 0; x < s.order(); ++x) {
    bool has_inverse = false;
    for (int y = 0; y < s.order(); ++y) {
      if (s.product(x, y) == e && s.product(y, x) == e) {
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) {
      return false;
    }
  }
  return true;
}

bool is_commutative(Semigroup const& s) {
  for (int x = 0; x < s.order(); ++x) {
    for (int y = x + 1; y < s.order(); ++y) {
      if (s.product(x, y) != s.product(y, x)) {
        return false;
      }
    }
  }
  return true;
}

bool is_semilattice(Semigroup const& s) {
  if (!is_commutative(s)) {
    return false;
  }
  return int(idempotents(s).size()) == s.order();
}

bool is_chain_semilattice(Semigroup const& s) {
  if (!is_semilattice(s)) {
    return false;
  }
  for (int x = 0; x < s.order(); ++x) {
    for (int y = 0; y < s.order(); ++y) {
      int m = s.product(x, y);
      if (m != x && m != y) {
        return false;
      }
    }
  }
  return true;
}

Bitset subsemigroup_closure(Semigroup const& s, Bitset seed) {
  std::vector<int> work = seed.to_indices();
  std::vector<int> members = work;
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (size_t i = 0; i < members.size(); ++i) {
      int y = members[i];
      for (int p : {s.product(x, y), s.product(y, x)}) {
        if (!seed.test(p)) {
          seed.set(p);
          members.push_back(p);
          work.push_back(p);
        }
      }
    }
  }
  return seed;
}

bool is_closed(Semigroup const& s, Bitset const& subset) {
  for (int x = subset.next(0); x != -1; x = subset.next(x + 1)) {
    for (int y = subset.next(0); y != -1; y = subset.next(y + 1)) {
      if (!subset.test(s.product(x, y))) {
        return false;
      }
    }
  }
  return true;
}

bool is_inverse_closed(Semigroup const& s, Bitset const& subset) {
  if (!is_closed(s, subset)) {
    return false;
  }
  for (int x = subset.next(0); x != -1; x = subset.next(x + 1)) {
    if (!subset.test(unique_inverse(s, x))) {
      return false;
    }
  }
  return true;
}

Semigroup opposite(Semigroup const& s) {
  int n = s.order();
  std::vector<int32_t> t(size_t(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t[i * n + j] = int32_t(s.product(j, i));
    }
  }
  return Semigroup::validate_flat(n, std::move(t), s.labels());
}

std::pair<Semigroup, std::vector<int>> induced_subsemigroup(
    Semigroup const& s, Bitset const& subset) {
  if (!is_closed(s, subset)) {
    throw InvalidArgument("subset is not closed under the product");
  }
  std::vector<int> global = subset.to_indices();
  std::vector<int> local(s.order(), -1);
  for (int i = 0; i < int(global.size()); ++i) {
    local[global[i]] = i;
  }
  int m = int(global.size());
  if (m == 0) {
    throw InvalidArgument("cannot re-index the empty subsemigroup");
  }
  std::vector<int32_t> t(size_t(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      t[i * m + j] = int32_t(local[s.product(global[i], global[j])]);
    }
  }
  std::vector<std::string> labels;
  if (s.has_labels()) {
    for (int g : global) {
      labels.push_back(s.label(g));
    }
  }
  return {Semigroup::validate_flat(m, std::move(t), std::move(labels)),
          global};
}

}  // namespace pamona
