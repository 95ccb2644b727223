#include "mvalg/ideals.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace mvalg {

Ideal::Ideal(std::vector<char> mask) : mask_(std::move(mask)) {
  for (Element x = 0; x < mask_.size(); ++x) {
    if (mask_[x]) members_.push_back(x);
  }
}

bool Ideal::is_subset_of(const Ideal& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](Element x) { return other.contains(x); });
}

bool is_ideal(const FiniteMVAlgebra& algebra, std::span<const Element> members) {
  std::vector<char> in(algebra.size(), 0);
  for (Element x : members) {
    if (x >= algebra.size()) return false;
    in[x] = 1;
  }
  if (!in[algebra.zero()]) return false;
  for (Element x = 0; x < algebra.size(); ++x) {
    if (!in[x]) continue;
    for (Element y = 0; y < algebra.size(); ++y) {
      if (in[y] && !in[algebra.oplus(x, y)]) return false;
      if (!in[y] && algebra.leq(y, x)) return false;
    }
  }
  return true;
}

Ideal Ideal::from_members(const FiniteMVAlgebra& algebra, std::span<const Element> members) {
  if (!is_ideal(algebra, members)) throw PreconditionError("element set is not an ideal");
  std::vector<char> mask(algebra.size(), 0);
  for (Element x : members) mask[x] = 1;
  return Ideal(std::move(mask));
}

Ideal generated_ideal(const FiniteMVAlgebra& algebra, std::span<const Element> seed) {
  const std::size_t n = algebra.size();
  std::vector<char> mask(n, 0);
  std::vector<Element> found;
  std::deque<Element> pending;
  auto add = [&](Element x) {
    if (!mask[x]) {
      mask[x] = 1;
      found.push_back(x);
      pending.push_back(x);
    }
  };
  add(algebra.zero());
  for (Element s : seed) {
    if (s >= n) throw PreconditionError("seed element out of range");
    add(s);
  }
  // Each new member is summed with every member known at that moment and
  // pushed down; later members pair with it when they are processed.
  while (!pending.empty()) {
    const Element m = pending.front();
    pending.pop_front();
    for (Element y = 0; y < n; ++y) {
      if (!mask[y] && algebra.leq(y, m)) add(y);
    }
    for (std::size_t i = 0; i < found.size(); ++i) add(algebra.oplus(m, found[i]));
  }
  return Ideal(std::move(mask));
}

std::vector<Ideal> all_ideals(const FiniteMVAlgebra& algebra, std::size_t max_size) {
  check_size_cap(algebra, max_size);
  std::vector<Ideal> ideals;
  // a and its stable multiple k.a generate the same ideal, so one closure
  // per distinct stable multiple suffices.
  std::vector<char> seen(algebra.size(), 0);
  for (Element a = 0; a < algebra.size(); ++a) {
    const Element stable = algebra.multiple(a, algebra.size());
    if (seen[stable]) continue;
    seen[stable] = 1;
    Ideal candidate = generated_ideal(algebra, std::span<const Element>(&stable, 1));
    if (std::find(ideals.begin(), ideals.end(), candidate) == ideals.end()) {
      ideals.push_back(std::move(candidate));
    }
  }
  std::sort(ideals.begin(), ideals.end());
  return ideals;
}

Ideal intersect(const FiniteMVAlgebra& algebra, std::span<const Ideal> ideals) {
  std::vector<char> mask(algebra.size(), 1);
  for (const Ideal& ideal : ideals) {
    for (Element x = 0; x < algebra.size(); ++x) mask[x] = mask[x] && ideal.contains(x);
  }
  std::vector<Element> members;
  for (Element x = 0; x < algebra.size(); ++x) {
    if (mask[x]) members.push_back(x);
  }
  return Ideal::from_members(algebra, members);
}

IdealClassification classify(const FiniteMVAlgebra& algebra, const Ideal& ideal) {
  IdealClassification c;
  const std::size_t n = algebra.size();

  Element generator = algebra.zero();
  for (Element x : ideal.members()) generator = algebra.join(generator, x);
  c.principal_generator = generator;

  c.proper = !ideal.contains(algebra.one());
  if (!c.proper) return c;

  c.prime = true;
  for (Element x = 0; x < n && c.prime; ++x) {
    if (ideal.contains(x)) continue;
    for (Element y = 0; y < n; ++y) {
      if (!ideal.contains(y) && ideal.contains(algebra.meet(x, y))) {
        c.prime = false;
        break;
      }
    }
  }
  if (!c.prime) return c;

  // M is maximal iff A/M is simple, i.e. has exactly the two trivial ideals.
  const Quotient q = quotient(algebra, ideal);
  c.maximal = all_ideals(q.algebra, q.algebra.size()).size() == 2;
  if (c.maximal) c.rank = static_cast<int>(q.algebra.size());
  return c;
}

Quotient quotient(const FiniteMVAlgebra& algebra, const Ideal& ideal) {
  const std::size_t n = algebra.size();
  constexpr Element unassigned = std::numeric_limits<Element>::max();
  std::vector<Element> cls(n, unassigned);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (cls[x] != unassigned) continue;
    cls[x] = reps.size();
    for (Element y = x + 1; y < n; ++y) {
      if (cls[y] == unassigned && ideal.contains(algebra.distance(x, y))) cls[y] = reps.size();
    }
    reps.push_back(x);
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if ((cls[x] == cls[y]) != ideal.contains(algebra.distance(x, y))) {
        throw InternalError("congruence induced by the ideal is not an equivalence");
      }
    }
  }

  const std::size_t k = reps.size();
  std::vector<std::vector<Element>> table(k, std::vector<Element>(k));
  std::vector<Element> negs(k);
  std::vector<std::string> labels(k);
  for (Element i = 0; i < k; ++i) {
    negs[i] = cls[algebra.neg(reps[i])];
    labels[i] = "[" + algebra.label(reps[i]) + "]";
    for (Element j = 0; j < k; ++j) table[i][j] = cls[algebra.oplus(reps[i], reps[j])];
  }
  for (Element x = 0; x < n; ++x) {
    if (cls[algebra.neg(x)] != negs[cls[x]]) throw InternalError("neg is not well defined on classes");
    for (Element y = 0; y < n; ++y) {
      if (cls[algebra.oplus(x, y)] != table[cls[x]][cls[y]]) {
        throw InternalError("oplus is not well defined on classes");
      }
    }
  }
  return {FiniteMVAlgebra::from_tables(k, cls[algebra.zero()], table, std::move(negs), std::move(labels)),
          std::move(cls)};
}

std::vector<Ideal> maximal_decomposition(const FiniteMVAlgebra& algebra, const Ideal& ideal) {
  if (ideal.contains(algebra.one())) {
    throw PreconditionError("maximal decomposition needs a proper ideal");
  }
  const Quotient q = quotient(algebra, ideal);
  const Decomposition d = decompose(q.algebra);
  std::vector<Ideal> result;
  for (std::size_t k = 0; k < d.eta.size(); ++k) {
    std::vector<Element> kernel;
    for (Element a = 0; a < algebra.size(); ++a) {
      if (d.iso[q.projection[a]][k] == 0) kernel.push_back(a);
    }
    result.push_back(Ideal::from_members(algebra, kernel));
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool is_regular(const FiniteMVAlgebra& algebra) {
  const EmbeddedAlgebra center = center_algebra(algebra);
  for (const Ideal& n : all_ideals(center.algebra)) {
    if (!classify(center.algebra, n).prime) continue;
    std::vector<Element> seed;
    for (Element local : n.members()) seed.push_back(center.carrier[local]);
    if (!classify(algebra, generated_ideal(algebra, seed)).prime) return false;
  }
  return true;
}

}  // namespace mvalg
