#include "coarsetr/grp/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "coarsetr/error.hpp"

namespace coarsetr::grp {

Group::Group(std::size_t order, std::vector<Element> mult, Element identity,
             std::string name)
    : order_(order),
      mult_(std::move(mult)),
      identity_(identity),
      name_(std::move(name)) {
  if (order_ == 0) throw ValidationError("group order must be positive");
  if (mult_.size() != order_ * order_)
    throw ValidationError("multiplication table must have order^2 entries");
  if (identity_ >= order_) throw ValidationError("identity out of range");
  for (Element v : mult_)
    if (v >= order_) throw ValidationError("multiplication table not closed");

  for (Element a = 0; a < order_; ++a)
    if (mul(identity_, a) != a || mul(a, identity_) != a)
      throw ValidationError("identity is not a two-sided unit for element " +
                            std::to_string(a));

  inverse_.assign(order_, static_cast<Element>(order_));
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] == order_)
      throw ValidationError("element " + std::to_string(a) +
                            " has no inverse");
  }

  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b) {
      Element ab = mul(a, b);
      for (Element c = 0; c < order_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c)))
          throw ValidationError("multiplication is not associative at (" +
                                std::to_string(a) + "," + std::to_string(b) +
                                "," + std::to_string(c) + ")");
    }
}

bool same_group(GroupPtr const& a, GroupPtr const& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

using Perm = std::vector<std::uint32_t>;

Perm compose(Perm const& a, Perm const& b) {
  // (a*b)(x) = a(b(x)), i.e. apply b first.
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
  return r;
}

bool is_even(Perm const& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

GroupPtr from_permutations(std::set<Perm> const& elements, std::string name) {
  std::vector<Perm> sorted(elements.begin(), elements.end());
  std::map<Perm, Element> index;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    index.emplace(sorted[i], static_cast<Element>(i));
  std::size_t n = sorted.size();
  std::vector<Element> mult(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mult[a * n + b] = index.at(compose(sorted[a], sorted[b]));
  Perm id(sorted.front().size());
  std::iota(id.begin(), id.end(), 0u);
  return std::make_shared<const Group>(n, std::move(mult), index.at(id),
                                       std::move(name));
}

std::set<Perm> all_permutations(std::size_t n) {
  std::set<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  do {
    out.insert(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

GroupPtr permutation_group(std::vector<std::vector<std::uint32_t>> const& gens,
                           std::string name) {
  if (gens.empty()) throw ValidationError("need at least one generator");
  std::size_t degree = gens.front().size();
  for (auto const& g : gens) {
    if (g.size() != degree)
      throw ValidationError("generators must have equal degree");
    std::vector<bool> hit(degree, false);
    for (auto v : g) {
      if (v >= degree || hit[v])
        throw ValidationError("generator is not a permutation");
      hit[v] = true;
    }
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto const& p : frontier)
      for (auto const& g : gens) {
        Perm q = compose(g, p);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return from_permutations(seen, std::move(name));
}

GroupPtr trivial_group() {
  return std::make_shared<const Group>(1, std::vector<Element>{0}, 0, "1");
}

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) throw ValidationError("cyclic group order must be positive");
  std::vector<Element> mult(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mult[a * n + b] = static_cast<Element>((a + b) % n);
  return std::make_shared<const Group>(n, std::move(mult), 0,
                                       "C" + std::to_string(n));
}

GroupPtr dihedral_group(std::size_t n) {
  if (n < 1) throw ValidationError("dihedral group needs n >= 1");
  // Elements r^k s^e encoded as k + n*e.
  std::size_t order = 2 * n;
  std::vector<Element> mult(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      std::size_t ka = a % n, ea = a / n, kb = b % n, eb = b / n;
      // r^ka s^ea r^kb s^eb = r^(ka +- kb) s^(ea+eb)
      std::size_t k = ea == 0 ? (ka + kb) % n : (ka + n - kb) % n;
      std::size_t e = (ea + eb) % 2;
      mult[a * order + b] = static_cast<Element>(k + n * e);
    }
  return std::make_shared<const Group>(order, std::move(mult), 0,
                                       "D" + std::to_string(order));
}

GroupPtr symmetric_group(std::size_t n) {
  if (n == 0 || n > 5) throw ValidationError("symmetric group needs 1<=n<=5");
  return from_permutations(all_permutations(n), "S" + std::to_string(n));
}

GroupPtr alternating_group(std::size_t n) {
  if (n == 0 || n > 5)
    throw ValidationError("alternating group needs 1<=n<=5");
  std::set<Perm> even;
  for (auto const& p : all_permutations(n))
    if (is_even(p)) even.insert(p);
  return from_permutations(even, "A" + std::to_string(n));
}

GroupPtr klein_four_group() {
  std::vector<Element> mult(16);
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) mult[a * 4 + b] = a ^ b;
  return std::make_shared<const Group>(4, std::move(mult), 0, "V4");
}

}  // namespace coarsetr::grp
