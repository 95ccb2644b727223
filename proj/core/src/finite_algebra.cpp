#include "mvalg/finite_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "mvalg/chain.hpp"

namespace mvalg {

namespace {

// Builds x -> (x meet a_1, ..., x meet a_r) over the central atoms straight
// from the tables and checks that it is a bijection onto a product of chains
// preserving 0, oplus and neg. Success proves the tables form an MV-algebra
// in O(n^2 r), so the cubic checks are only needed to name a failure.
bool chain_product_certificate(const FiniteMVAlgebra& a) {
  const std::size_t n = a.size();
  const Element zero = a.zero();
  if (n == 1) return true;

  std::vector<Element> center;
  for (Element x = 0; x < n; ++x) {
    if (a.meet(x, a.neg(x)) == zero) center.push_back(x);
  }
  std::vector<Element> atoms;
  for (Element c : center) {
    if (c == zero) continue;
    const bool minimal = std::none_of(center.begin(), center.end(), [&](Element b) {
      return b != zero && b != c && a.leq(b, c);
    });
    if (minimal) atoms.push_back(c);
  }
  const std::size_t r = atoms.size();
  if (r == 0) return false;

  // pos[i][x]: height of x inside the chain [0, atoms[i]], or -1 outside it.
  std::vector<std::vector<long>> pos(r, std::vector<long>(n, -1));
  std::vector<std::size_t> order(r), stride(r, 1);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Element> interval;
    for (Element x = 0; x < n; ++x) {
      if (a.leq(x, atoms[i])) interval.push_back(x);
    }
    const std::size_t m = interval.size();
    std::vector<char> used(m, 0);
    for (Element x : interval) {
      std::size_t below = 0;
      for (Element y : interval) below += a.leq(y, x) ? 1 : 0;
      if (below == 0 || used[below - 1]) return false;
      used[below - 1] = 1;
      pos[i][x] = static_cast<long>(below - 1);
    }
    for (Element x : interval) {
      for (Element y : interval) {
        if (a.leq(x, y) != (pos[i][x] <= pos[i][y])) return false;
      }
    }
    order[i] = m;
  }
  for (std::size_t i = r - 1; i-- > 0;) stride[i] = stride[i + 1] * order[i + 1];
  if (stride[0] * order[0] != n) return false;

  std::vector<long> digit(n * r);
  std::vector<char> hit(n, 0);
  for (Element x = 0; x < n; ++x) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < r; ++i) {
      const long d = pos[i][a.meet(x, atoms[i])];
      if (d < 0) return false;
      digit[x * r + i] = d;
      code += static_cast<std::size_t>(d) * stride[i];
    }
    if (hit[code]) return false;
    hit[code] = 1;
  }
  for (std::size_t i = 0; i < r; ++i) {
    const long top = static_cast<long>(order[i]) - 1;
    if (digit[zero * r + i] != 0) return false;
    for (Element x = 0; x < n; ++x) {
      if (digit[a.neg(x) * r + i] != top - digit[x * r + i]) return false;
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y <= x; ++y) {
      const Element s = a.oplus(x, y);
      for (std::size_t i = 0; i < r; ++i) {
        const long top = static_cast<long>(order[i]) - 1;
        if (digit[s * r + i] != std::min(digit[x * r + i] + digit[y * r + i], top)) return false;
      }
    }
  }
  return true;
}

void check_axioms(const FiniteMVAlgebra& a) {
  const std::size_t n = a.size();
  const Element zero = a.zero();

  for (Element x = 0; x < n; ++x) {
    if (a.oplus(zero, x) != x || a.oplus(x, zero) != x) throw AxiomViolation("zero_identity", {x});
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < x; ++y) {
      if (a.oplus(x, y) != a.oplus(y, x)) throw AxiomViolation("oplus_commutative", {x, y});
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (a.neg(a.neg(x)) != x) throw AxiomViolation("neg_involution", {x});
  }
  const Element top = a.neg(zero);
  for (Element x = 0; x < n; ++x) {
    if (a.oplus(top, x) != top) throw AxiomViolation("mv_axiom_1", {x});
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y <= x; ++y) {
      if (a.join(y, x) != a.join(x, y)) throw AxiomViolation("mv_axiom_2", {x, y});
    }
  }

  if (chain_product_certificate(a)) return;

  // Something is wrong; the exhaustive checks find out what.
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = a.oplus(x, y);
      for (Element z = 0; z < n; ++z) {
        if (a.oplus(xy, z) != a.oplus(x, a.oplus(y, z))) {
          throw AxiomViolation("oplus_associative", {x, y, z});
        }
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (!a.leq(x, x)) throw AxiomViolation("lattice_order", {x});
    for (Element y = 0; y < x; ++y) {
      if (a.leq(x, y) && a.leq(y, x)) throw AxiomViolation("lattice_order", {x, y});
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element j = a.join(x, y);
      const Element m = a.meet(x, y);
      if (!a.leq(x, j) || !a.leq(y, j) || !a.leq(m, x) || !a.leq(m, y)) {
        throw AxiomViolation("lattice_order", {x, y});
      }
      const bool xy = a.leq(x, y);
      for (Element z = 0; z < n; ++z) {
        if (xy && a.leq(y, z) && !a.leq(x, z)) throw AxiomViolation("lattice_order", {x, y, z});
        if (a.leq(x, z) && a.leq(y, z) && !a.leq(j, z)) throw AxiomViolation("lattice_order", {x, y, z});
        if (a.meet(x, a.join(y, z)) != a.join(m, a.meet(x, z))) {
          throw AxiomViolation("lattice_distributive", {x, y, z});
        }
      }
    }
  }
  // Every finite MV-algebra is a product of chains, so reaching this line
  // means the certificate is wrong, not the input.
  throw InternalError("tables pass every axiom but not the chain-product certificate");
}

std::string tuple_label(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out + ")";
}

}  // namespace

FiniteMVAlgebra FiniteMVAlgebra::from_tables(std::size_t size, Element zero,
                                             const std::vector<std::vector<Element>>& oplus_table,
                                             std::vector<Element> neg_table,
                                             std::vector<std::string> labels) {
  if (size == 0) throw StructuralError("carrier must be nonempty");
  if (zero >= size) throw StructuralError("zero index out of range");
  if (oplus_table.size() != size) throw StructuralError("oplus table must have `size` rows");
  if (neg_table.size() != size) throw StructuralError("neg table must have `size` entries");
  if (!labels.empty() && labels.size() != size) throw StructuralError("labels must have `size` entries");

  FiniteMVAlgebra a;
  a.zero_ = zero;
  a.oplus_.reserve(size * size);
  for (std::size_t r = 0; r < size; ++r) {
    if (oplus_table[r].size() != size) {
      throw StructuralError("oplus row " + std::to_string(r) + " must have `size` entries");
    }
    for (Element v : oplus_table[r]) {
      if (v >= size) throw StructuralError("oplus entry out of range in row " + std::to_string(r));
      a.oplus_.push_back(v);
    }
  }
  for (Element v : neg_table) {
    if (v >= size) throw StructuralError("neg entry out of range");
  }
  a.neg_ = std::move(neg_table);
  if (labels.empty()) {
    labels.reserve(size);
    for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
  }
  a.labels_ = std::move(labels);

  check_axioms(a);
  return a;
}

FiniteMVAlgebra FiniteMVAlgebra::trivial() { return from_tables(1, 0, {{0}}, {0}, {"0"}); }

Element FiniteMVAlgebra::multiple(Element x, std::size_t k) const {
  Element acc = zero_;
  for (std::size_t i = 0; i < k; ++i) {
    const Element next = oplus(acc, x);
    if (next == acc) break;
    acc = next;
  }
  return acc;
}

std::vector<std::vector<Element>> FiniteMVAlgebra::oplus_table() const {
  const std::size_t n = size();
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t r = 0; r < n; ++r) {
    std::copy_n(oplus_.begin() + static_cast<std::ptrdiff_t>(r * n), n, t[r].begin());
  }
  return t;
}

FiniteMVAlgebra chain_algebra(int order) {
  const Chain chain(order);
  const auto n = static_cast<std::size_t>(order);
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<Element> negs(n);
  std::vector<std::string> labels(n);
  for (int x = 0; x < order; ++x) {
    const ChainElement ex(chain, x);
    negs[x] = static_cast<Element>(neg(ex).numerator());
    labels[x] = ex.label();
    for (int y = 0; y < order; ++y) {
      table[x][y] = static_cast<Element>(oplus(ex, ChainElement(chain, y)).numerator());
    }
  }
  return FiniteMVAlgebra::from_tables(n, 0, table, std::move(negs), std::move(labels));
}

FiniteMVAlgebra product(std::span<const FiniteMVAlgebra> factors) {
  if (factors.empty()) return FiniteMVAlgebra::trivial();
  if (factors.size() == 1) return factors.front();

  const std::size_t k = factors.size();
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t i = k - 1; i-- > 0;) stride[i] = stride[i + 1] * factors[i + 1].size();
  const std::size_t n = stride[0] * factors[0].size();

  auto digit = [&](Element x, std::size_t i) { return (x / stride[i]) % factors[i].size(); };

  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<Element> negs(n);
  std::vector<std::string> labels(n);
  Element zero = 0;
  for (std::size_t i = 0; i < k; ++i) zero += factors[i].zero() * stride[i];

  for (Element x = 0; x < n; ++x) {
    std::vector<std::string> parts(k);
    Element nx = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const Element xi = digit(x, i);
      parts[i] = factors[i].label(xi);
      nx += factors[i].neg(xi) * stride[i];
    }
    negs[x] = nx;
    labels[x] = tuple_label(parts);
    for (Element y = 0; y < n; ++y) {
      Element s = 0;
      for (std::size_t i = 0; i < k; ++i) s += factors[i].oplus(digit(x, i), digit(y, i)) * stride[i];
      table[x][y] = s;
    }
  }
  return FiniteMVAlgebra::from_tables(n, zero, table, std::move(negs), std::move(labels));
}

FiniteMVAlgebra product_of_chains(std::span<const int> orders) {
  std::vector<FiniteMVAlgebra> chains;
  chains.reserve(orders.size());
  for (int n : orders) chains.push_back(chain_algebra(n));
  return product(chains);
}

FiniteMVAlgebra relabel(const FiniteMVAlgebra& algebra, std::span<const Element> permutation) {
  const std::size_t n = algebra.size();
  if (permutation.size() != n) throw StructuralError("relabeling must cover the carrier");
  std::vector<char> seen(n, 0);
  for (Element p : permutation) {
    if (p >= n || seen[p]) throw StructuralError("relabeling is not a bijection");
    seen[p] = 1;
  }
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<Element> negs(n);
  std::vector<std::string> labels(n);
  for (Element x = 0; x < n; ++x) {
    negs[permutation[x]] = permutation[algebra.neg(x)];
    labels[permutation[x]] = algebra.label(x);
    for (Element y = 0; y < n; ++y) {
      table[permutation[x]][permutation[y]] = permutation[algebra.oplus(x, y)];
    }
  }
  return FiniteMVAlgebra::from_tables(n, permutation[algebra.zero()], table, std::move(negs),
                                      std::move(labels));
}

Element EmbeddedAlgebra::local_index(Element ambient) const {
  const auto it = std::lower_bound(carrier.begin(), carrier.end(), ambient);
  if (it == carrier.end() || *it != ambient) return carrier.size();
  return static_cast<Element>(it - carrier.begin());
}

BooleanCenter boolean_center(const FiniteMVAlgebra& algebra) {
  BooleanCenter center;
  std::vector<char> in(algebra.size(), 0);
  for (Element a = 0; a < algebra.size(); ++a) {
    if (algebra.meet(a, algebra.neg(a)) == algebra.zero()) {
      center.members.push_back(a);
      in[a] = 1;
    }
  }
  for (Element a : center.members) {
    if (!in[algebra.neg(a)]) throw InternalError("Boolean center not closed under neg");
    for (Element b : center.members) {
      if (!in[algebra.oplus(a, b)]) throw InternalError("Boolean center not closed under oplus");
    }
  }
  for (Element a : center.members) {
    if (a == algebra.zero()) continue;
    const bool minimal = std::none_of(center.members.begin(), center.members.end(), [&](Element b) {
      return b != a && b != algebra.zero() && algebra.leq(b, a);
    });
    if (minimal) center.atoms.push_back(a);
  }
  return center;
}

EmbeddedAlgebra subalgebra(const FiniteMVAlgebra& algebra, std::span<const Element> members) {
  std::vector<Element> carrier(members.begin(), members.end());
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());

  EmbeddedAlgebra probe{FiniteMVAlgebra::trivial(), carrier};
  const std::size_t n = carrier.size();
  const Element zero = probe.local_index(algebra.zero());
  if (zero == n) throw PreconditionError("subalgebra must contain zero");

  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<Element> negs(n);
  std::vector<std::string> labels(n);
  for (Element i = 0; i < n; ++i) {
    negs[i] = probe.local_index(algebra.neg(carrier[i]));
    if (negs[i] == n) throw PreconditionError("subset not closed under neg");
    labels[i] = algebra.label(carrier[i]);
    for (Element j = 0; j < n; ++j) {
      table[i][j] = probe.local_index(algebra.oplus(carrier[i], carrier[j]));
      if (table[i][j] == n) throw PreconditionError("subset not closed under oplus");
    }
  }
  return {FiniteMVAlgebra::from_tables(n, zero, table, std::move(negs), std::move(labels)),
          std::move(carrier)};
}

EmbeddedAlgebra center_algebra(const FiniteMVAlgebra& algebra) {
  return subalgebra(algebra, boolean_center(algebra).members);
}

EmbeddedAlgebra interval_algebra(const FiniteMVAlgebra& algebra, Element a) {
  if (a >= algebra.size()) throw PreconditionError("element out of range");
  if (algebra.meet(a, algebra.neg(a)) != algebra.zero()) {
    throw PreconditionError("interval algebra requires an element of the Boolean center");
  }
  std::vector<Element> carrier;
  for (Element x = 0; x < algebra.size(); ++x) {
    if (algebra.leq(x, a)) carrier.push_back(x);
  }
  EmbeddedAlgebra probe{FiniteMVAlgebra::trivial(), carrier};
  const std::size_t n = carrier.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<Element> negs(n);
  std::vector<std::string> labels(n);
  for (Element i = 0; i < n; ++i) {
    negs[i] = probe.local_index(algebra.meet(algebra.neg(carrier[i]), a));
    labels[i] = algebra.label(carrier[i]);
    for (Element j = 0; j < n; ++j) {
      table[i][j] = probe.local_index(algebra.meet(algebra.oplus(carrier[i], carrier[j]), a));
    }
  }
  return {FiniteMVAlgebra::from_tables(n, probe.local_index(algebra.zero()), table, std::move(negs),
                                       std::move(labels)),
          std::move(carrier)};
}

Element Decomposition::element_of(std::span<const int> tuple) const {
  if (tuple.size() != eta.size()) throw PreconditionError("tuple arity does not match eta");
  std::size_t code = 0;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (tuple[i] < 0 || tuple[i] >= eta[i]) throw PreconditionError("tuple entry outside its chain");
    code = code * static_cast<std::size_t>(eta[i]) + static_cast<std::size_t>(tuple[i]);
  }
  return iso_inverse[code];
}

Decomposition decompose(const FiniteMVAlgebra& algebra) {
  if (algebra.is_trivial()) {
    throw PreconditionError("the trivial algebra is the empty product and has no chain factors");
  }
  const std::size_t n = algebra.size();
  const BooleanCenter center = boolean_center(algebra);

  struct Factor {
    Element atom;
    std::vector<Element> chain;  // [0, atom] in ascending order
  };
  std::vector<Factor> factors;
  for (Element atom : center.atoms) {
    std::vector<Element> chain;
    for (Element x = 0; x < n; ++x) {
      if (algebra.leq(x, atom)) chain.push_back(x);
    }
    for (Element x : chain) {
      for (Element y : chain) {
        if (!algebra.leq(x, y) && !algebra.leq(y, x)) {
          throw InternalError("not a product of chains: [0," + algebra.label(atom) +
                              "] is not totally ordered");
        }
      }
    }
    std::sort(chain.begin(), chain.end(), [&](Element x, Element y) { return x != y && algebra.leq(x, y); });
    factors.push_back({atom, std::move(chain)});
  }
  std::sort(factors.begin(), factors.end(), [](const Factor& l, const Factor& r) {
    return std::pair(l.chain.size(), l.atom) < std::pair(r.chain.size(), r.atom);
  });

  Decomposition d;
  for (const auto& f : factors) {
    d.eta.push_back(static_cast<int>(f.chain.size()));
    d.atoms.push_back(f.atom);
  }
  const std::size_t r = factors.size();

  d.iso.assign(n, std::vector<int>(r));
  for (Element x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < r; ++i) {
      const Element y = algebra.meet(x, factors[i].atom);
      const auto& chain = factors[i].chain;
      d.iso[x][i] = static_cast<int>(std::find(chain.begin(), chain.end(), y) - chain.begin());
    }
  }

  std::size_t total = 1;
  for (int order : d.eta) total *= static_cast<std::size_t>(order);
  if (total != n) throw InternalError("not a product of chains: factor sizes do not multiply to |A|");
  d.iso_inverse.assign(total, n);
  for (Element x = 0; x < n; ++x) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < r; ++i) code = code * static_cast<std::size_t>(d.eta[i]) + d.iso[x][i];
    if (d.iso_inverse[code] != n) throw InternalError("not a product of chains: map is not injective");
    d.iso_inverse[code] = x;
  }

  for (Element x = 0; x < n; ++x) {
    const auto& nx = d.iso[algebra.neg(x)];
    for (std::size_t i = 0; i < r; ++i) {
      if (nx[i] != d.eta[i] - 1 - d.iso[x][i]) {
        throw InternalError("not a product of chains: map does not preserve neg");
      }
    }
    for (Element y = 0; y < n; ++y) {
      const auto& s = d.iso[algebra.oplus(x, y)];
      for (std::size_t i = 0; i < r; ++i) {
        if (s[i] != std::min(d.iso[x][i] + d.iso[y][i], d.eta[i] - 1)) {
          throw InternalError("not a product of chains: map does not preserve oplus");
        }
      }
    }
  }
  return d;
}

bool are_isomorphic(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b) {
  if (a.size() != b.size()) return false;
  if (a.is_trivial()) return true;
  return decompose(a).eta == decompose(b).eta;
}

bool is_homomorphism(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b,
                     std::span<const Element> map) {
  if (map.size() != a.size()) return false;
  for (Element m : map) {
    if (m >= b.size()) return false;
  }
  if (map[a.zero()] != b.zero()) return false;
  for (Element x = 0; x < a.size(); ++x) {
    if (map[a.neg(x)] != b.neg(map[x])) return false;
    for (Element y = 0; y < a.size(); ++y) {
      if (map[a.oplus(x, y)] != b.oplus(map[x], map[y])) return false;
    }
  }
  return true;
}

void check_size_cap(const FiniteMVAlgebra& algebra, std::size_t max_size) {
  if (algebra.size() > max_size) {
    throw ResourceError("algebra of size " + std::to_string(algebra.size()) + " exceeds cap " +
                            std::to_string(max_size),
                        max_size);
  }
}

}  // namespace mvalg
