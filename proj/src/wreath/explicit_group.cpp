#include "perdyn/wreath/explicit_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "perdyn/error.hpp"

namespace perdyn {

namespace {

Permutation compose(const Permutation &a, const Permutation &b) {
  // (a o b)(x) = a(b(x))
  Permutation r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    r[x] = a[b[x]];
  return r;
}

Permutation inverse(const Permutation &a) {
  Permutation r(a.size());
  for (std::uint32_t x = 0; x < a.size(); ++x)
    r[a[x]] = x;
  return r;
}

int fixed_points(const Permutation &a) {
  int n = 0;
  for (std::uint32_t x = 0; x < a.size(); ++x)
    n += a[x] == x;
  return n;
}

// Calls visit(perm) for every element of top[bottom].
template <class Visit>
void for_each_wreath_element(const ExplicitGroup &top,
                             const std::vector<Permutation> &bottom,
                             int bottom_degree, Visit visit) {
  const auto l = static_cast<std::size_t>(top.degree());
  const auto m = static_cast<std::size_t>(bottom_degree);
  std::vector<std::size_t> choice(l, 0);
  Permutation sigma(l * m);
  for (const auto &pi : top.elements()) {
    std::fill(choice.begin(), choice.end(), 0);
    for (;;) {
      for (std::size_t i = 0; i < l; ++i) {
        const Permutation &tau = bottom[choice[i]];
        for (std::size_t j = 0; j < m; ++j)
          sigma[i * m + j] = static_cast<std::uint32_t>(pi[i] * m + tau[j]);
      }
      visit(sigma);
      std::size_t pos = 0;
      while (pos < l && ++choice[pos] == bottom.size())
        choice[pos++] = 0;
      if (pos == l)
        break;
    }
  }
}

} // namespace

ExplicitGroup::ExplicitGroup(std::vector<Permutation> elements) {
  if (elements.empty())
    throw Error(ErrorCode::Domain, "group must have at least one element");
  degree_ = static_cast<int>(elements.front().size());
  std::set<Permutation> unique;
  for (auto &e : elements) {
    if (static_cast<int>(e.size()) != degree_)
      throw Error(ErrorCode::Domain, "permutations of different degrees");
    Permutation sorted = e;
    std::sort(sorted.begin(), sorted.end());
    for (std::uint32_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i)
        throw Error(ErrorCode::Domain, "element is not a permutation");
    unique.insert(std::move(e));
  }
  Permutation id(static_cast<std::size_t>(degree_));
  std::iota(id.begin(), id.end(), 0U);
  if (!unique.count(id))
    throw Error(ErrorCode::Domain, "group does not contain the identity");
  for (const auto &a : unique) {
    if (!unique.count(inverse(a)))
      throw Error(ErrorCode::Domain, "group not closed under inverses");
    for (const auto &b : unique)
      if (!unique.count(compose(a, b)))
        throw Error(ErrorCode::Domain, "group not closed under composition");
  }
  elements_.assign(unique.begin(), unique.end());
}

ExplicitGroup ExplicitGroup::symmetric(int d) {
  if (d < 1 || d > 8)
    throw Error(ErrorCode::Resource, "explicit S_d limited to 1 <= d <= 8");
  Permutation p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0U);
  std::vector<Permutation> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return ExplicitGroup(std::move(all));
}

ExplicitGroup ExplicitGroup::cyclic(int d) {
  if (d < 1)
    throw Error(ErrorCode::Domain, "C_d needs d >= 1");
  std::vector<Permutation> all;
  for (int s = 0; s < d; ++s) {
    Permutation p(static_cast<std::size_t>(d));
    for (int x = 0; x < d; ++x)
      p[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>((x + s) % d);
    all.push_back(std::move(p));
  }
  return ExplicitGroup(std::move(all));
}

FixedPointSpectrum ExplicitGroup::spectrum() const {
  std::map<int, BigInt> counts;
  for (const auto &e : elements_)
    counts[fixed_points(e)] += 1;
  return FixedPointSpectrum(degree_, std::move(counts));
}

std::vector<Permutation> wreath_elements(const ExplicitGroup &top,
                                         const std::vector<Permutation> &bottom,
                                         int bottom_degree) {
  std::vector<Permutation> out;
  for_each_wreath_element(top, bottom, bottom_degree,
                          [&](const Permutation &s) { out.push_back(s); });
  return out;
}

FixedPointSpectrum enumerate_wreath(const ExplicitGroup &g, int n,
                                    std::uint64_t budget) {
  if (n < 1)
    throw Error(ErrorCode::Domain, "enumerate_wreath needs n >= 1");
  // |[G]^n| = |G|^(1 + d + ... + d^(n-1))
  const auto order = static_cast<long double>(g.elements().size());
  long double total = 1, nodes = 1;
  for (int level = 0; level < n; ++level) {
    for (long double k = 0; k < nodes; ++k) {
      total *= order;
      if (total > static_cast<long double>(budget))
        throw Error(ErrorCode::Resource, "|[G]^" + std::to_string(n) +
                                             "| exceeds budget " +
                                             std::to_string(budget));
    }
    nodes *= g.degree();
  }
  if (n == 1)
    return g.spectrum();

  std::vector<Permutation> level = g.elements();
  int leaves = g.degree();
  for (int k = 2; k < n; ++k) {
    level = wreath_elements(g, level, leaves);
    leaves *= g.degree();
  }
  std::map<int, BigInt> counts;
  for_each_wreath_element(g, level, leaves, [&](const Permutation &s) {
    counts[fixed_points(s)] += 1;
  });
  return FixedPointSpectrum(leaves * g.degree(), std::move(counts));
}

} // namespace perdyn
