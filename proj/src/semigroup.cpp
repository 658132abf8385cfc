#include "sgbetti/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <utility>

namespace sgb {

namespace {

// Practical ceiling for the Apery table; the table has `multiplicity` entries,
// so an enormous multiplicity would exhaust memory long before any overflow.
constexpr i64 kMaxMultiplicity = 20'000'000;

// Least element of the semigroup in each residue class modulo the smallest
// generator, by Dijkstra over the residue graph: from residue r, adding a
// generator g costs g and moves to (r+g) mod mult.  Exact and needs no a
// priori sieve bound.
std::vector<i64> apery_by_shortest_path(const std::vector<i64>& gens) {
  const i64 mult = gens.front();
  std::vector<i64> dist(static_cast<std::size_t>(mult), -1);
  using Node = std::pair<i64, i64>;  // (distance, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> heap;
  heap.emplace(0, 0);
  while (!heap.empty()) {
    auto [d, r] = heap.top();
    heap.pop();
    auto& dr = dist[static_cast<std::size_t>(r)];
    if (dr != -1) continue;  // already settled with a smaller distance
    dr = d;
    for (i64 g : gens) {
      const i64 nd = checked_add(d, g);
      const i64 nr = (r + g % mult) % mult;
      if (dist[static_cast<std::size_t>(nr)] == -1) heap.emplace(nd, nr);
    }
  }
  return dist;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<i64> raw_generators) {
  if (raw_generators.empty()) throw EmptyInput("generator list is empty");
  for (i64 g : raw_generators) {
    if (g < 1) throw NonPositiveEntry("generator " + std::to_string(g) + " is not positive");
  }
  std::sort(raw_generators.begin(), raw_generators.end());
  raw_generators.erase(std::unique(raw_generators.begin(), raw_generators.end()),
                       raw_generators.end());
  i64 g = 0;
  for (i64 v : raw_generators) g = std::gcd(g, v);
  if (g != 1) throw GcdNotOne("generators share the common factor " + std::to_string(g));
  if (raw_generators.front() > kMaxMultiplicity)
    throw Error("multiplicity " + std::to_string(raw_generators.front()) +
                " is too large for the Apery table");

  // The Apery table describes the semigroup itself, so computing it from the
  // possibly redundant input list is already correct.
  apery_ = apery_by_shortest_path(raw_generators);
  const i64 mult = raw_generators.front();
  frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - mult;
  genus_ = 0;
  for (i64 r = 0; r < mult; ++r) genus_ += (apery_[static_cast<std::size_t>(r)] - r) / mult;

  // Drop generators that are sums of two members: s stays minimal exactly when
  // no split s = a + (s-a) with both parts nonzero members exists.
  gens_.clear();
  for (i64 s : raw_generators) {
    bool redundant = false;
    for (i64 a = mult; a + mult <= s; ++a) {
      if (contains(a) && contains(s - a)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(s);
  }
}

bool NumericalSemigroup::contains(i64 x) const {
  if (x < 0) return false;
  const i64 mult = multiplicity();
  return x >= apery_[static_cast<std::size_t>(x % mult)];
}

std::vector<i64> NumericalSemigroup::gaps() const {
  std::vector<i64> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (i64 x = 1; x <= frobenius_; ++x) {
    if (!contains(x)) out.push_back(x);
  }
  return out;
}

bool NumericalSemigroup::is_symmetric() const {
  return frobenius_ % 2 != 0 && genus_ * 2 == frobenius_ + 1;
}

bool NumericalSemigroup::is_symmetric_pointwise() const {
  for (i64 x = 0; x <= frobenius_; ++x) {
    if (contains(x) == contains(frobenius_ - x)) return false;
  }
  return true;
}

}  // namespace sgb
