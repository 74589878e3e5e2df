#include <tdlc/finite_group.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace tdlc {

std::uint16_t FiniteGroupTable::power(std::uint16_t x, long n) const {
  std::uint16_t base = n >= 0 ? x : inv(x);
  long e = n >= 0 ? n : -n;
  std::uint16_t acc = identity;
  for (long i = 0; i < e; ++i) acc = mul(acc, base);
  return acc;
}

void FiniteGroupTable::validate() const {
  if (order == 0 || order > 512) throw BadInput("group order must be in 1..512");
  if (product.size() != static_cast<std::size_t>(order) * order)
    throw BadInput("product table has wrong size");
  if (inverse.size() != order) throw BadInput("inverse table has wrong size");
  for (std::uint32_t i = 0; i < order; ++i) {
    if (mul(identity, static_cast<std::uint16_t>(i)) != i ||
        mul(static_cast<std::uint16_t>(i), identity) != i)
      throw BadInput("identity is not two-sided neutral");
    std::uint16_t j = inv(static_cast<std::uint16_t>(i));
    if (j >= order) throw BadInput("inverse out of range");
    if (mul(static_cast<std::uint16_t>(i), j) != identity ||
        mul(j, static_cast<std::uint16_t>(i)) != identity)
      throw BadInput("inverse table is wrong");
  }
  for (std::uint32_t i = 0; i < order; ++i)
    for (std::uint32_t j = 0; j < order; ++j) {
      if (mul(static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)) >= order)
        throw BadInput("product out of range");
      for (std::uint32_t k = 0; k < order; ++k) {
        auto a = mul(mul(static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)),
                     static_cast<std::uint16_t>(k));
        auto b = mul(static_cast<std::uint16_t>(i),
                     mul(static_cast<std::uint16_t>(j), static_cast<std::uint16_t>(k)));
        if (a != b) throw BadInput("product is not associative");
      }
    }
}

FiniteGroupTable FiniteGroupTable::cyclic(unsigned n) {
  if (n == 0 || n > 512) throw BadInput("cyclic order out of range");
  FiniteGroupTable t;
  t.order = n;
  t.identity = 0;
  t.label = "Z" + std::to_string(n);
  t.product.resize(static_cast<std::size_t>(n) * n);
  t.inverse.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    t.inverse[i] = static_cast<std::uint16_t>((n - i) % n);
    for (unsigned j = 0; j < n; ++j)
      t.product[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::uint16_t>((i + j) % n);
  }
  return t;
}

FiniteGroupTable FiniteGroupTable::symmetric(unsigned n) {
  if (n == 0 || n > 4) throw BadInput("symmetric preset supports n <= 4");
  // Elements are the permutations of {0..n-1} in lexicographic order; the
  // identity permutation is index 0. (s*t)(x) = s(t(x)).
  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const auto m = static_cast<std::uint32_t>(perms.size());
  auto index_of = [&](const std::vector<std::uint8_t>& q) {
    return static_cast<std::uint16_t>(
        std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  FiniteGroupTable t;
  t.order = m;
  t.identity = 0;
  t.label = "S" + std::to_string(n);
  t.product.resize(static_cast<std::size_t>(m) * m);
  t.inverse.resize(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    std::vector<std::uint8_t> inv(n);
    for (unsigned x = 0; x < n; ++x) inv[perms[i][x]] = static_cast<std::uint8_t>(x);
    t.inverse[i] = index_of(inv);
    for (std::uint32_t j = 0; j < m; ++j) {
      std::vector<std::uint8_t> comp(n);
      for (unsigned x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      t.product[static_cast<std::size_t>(i) * m + j] = index_of(comp);
    }
  }
  return t;
}

FiniteGroupTable FiniteGroupTable::from_product(std::string label, std::uint32_t order,
                                                std::vector<std::uint16_t> product) {
  FiniteGroupTable t;
  t.order = order;
  t.label = std::move(label);
  t.product = std::move(product);
  if (t.product.size() != static_cast<std::size_t>(order) * order)
    throw BadInput("product table has wrong size");
  // Locate the identity, then fill inverses.
  bool found = false;
  for (std::uint32_t e = 0; e < order && !found; ++e) {
    bool ok = true;
    for (std::uint32_t i = 0; i < order && ok; ++i)
      ok = t.product[static_cast<std::size_t>(e) * order + i] == i &&
           t.product[static_cast<std::size_t>(i) * order + e] == i;
    if (ok) {
      t.identity = static_cast<std::uint16_t>(e);
      found = true;
    }
  }
  if (!found) throw BadInput("table has no identity element");
  t.inverse.assign(order, 0);
  for (std::uint32_t i = 0; i < order; ++i) {
    bool ok = false;
    for (std::uint32_t j = 0; j < order; ++j)
      if (t.mul(static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)) ==
              t.identity &&
          t.mul(static_cast<std::uint16_t>(j), static_cast<std::uint16_t>(i)) ==
              t.identity) {
        t.inverse[i] = static_cast<std::uint16_t>(j);
        ok = true;
        break;
      }
    if (!ok) throw BadInput("element without two-sided inverse");
  }
  t.validate();
  return t;
}

TablePtr preset_table(const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'z')) {
    unsigned n = static_cast<unsigned>(std::stoul(name.substr(1)));
    return std::make_shared<FiniteGroupTable>(FiniteGroupTable::cyclic(n));
  }
  if (name.size() >= 2 && (name[0] == 'S' || name[0] == 's')) {
    unsigned n = static_cast<unsigned>(std::stoul(name.substr(1)));
    return std::make_shared<FiniteGroupTable>(FiniteGroupTable::symmetric(n));
  }
  throw BadInput("unknown group preset: " + name);
}

bool same_table(const TablePtr& a, const TablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->order == b->order && a->identity == b->identity && a->product == b->product;
}

namespace fset {

ElemSet trivial(const FiniteGroupTable& F) { return {F.identity}; }

ElemSet full(const FiniteGroupTable& F) {
  ElemSet s(F.order);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

bool contains(const ElemSet& s, std::uint16_t x) {
  return std::binary_search(s.begin(), s.end(), x);
}

bool subset(const ElemSet& a, const ElemSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_subgroup(const FiniteGroupTable& F, const ElemSet& s) {
  if (s.empty() || !contains(s, F.identity)) return false;
  for (auto x : s) {
    if (!contains(s, F.inv(x))) return false;
    for (auto y : s)
      if (!contains(s, F.mul(x, y))) return false;
  }
  return true;
}

ElemSet closure(const FiniteGroupTable& F, const ElemSet& generators) {
  std::set<std::uint16_t> seen{F.identity};
  std::vector<std::uint16_t> todo{F.identity};
  for (auto g : generators) {
    if (g >= F.order) throw BadInput("generator index out of range");
    if (seen.insert(g).second) todo.push_back(g);
  }
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    if (seen.insert(F.inv(x)).second) todo.push_back(F.inv(x));
    for (auto g : generators) {
      auto y = F.mul(x, g);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return ElemSet(seen.begin(), seen.end());
}

ElemSet intersect(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElemSet product(const FiniteGroupTable& F, const ElemSet& a, const ElemSet& b) {
  std::set<std::uint16_t> out;
  for (auto x : a)
    for (auto y : b) out.insert(F.mul(x, y));
  return ElemSet(out.begin(), out.end());
}

ElemSet conjugate(const FiniteGroupTable& F, std::uint16_t g, const ElemSet& s) {
  std::set<std::uint16_t> out;
  auto gi = F.inv(g);
  for (auto x : s) out.insert(F.mul(F.mul(g, x), gi));
  return ElemSet(out.begin(), out.end());
}

std::string render(const ElemSet& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

}  // namespace fset

}  // namespace tdlc
