#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mvalg/error.hpp"

namespace mvalg {

/// Index of an element in a finite carrier {0, ..., size-1}.
using Element = std::size_t;

/// A finite MV-algebra given by its oplus and negation tables.
///
/// Instances are only obtainable through validating factories, so every
/// FiniteMVAlgebra satisfies the monoid, involution and both MV axioms, and
/// its derived order is a distributive lattice. Immutable after
/// construction.
class FiniteMVAlgebra {
 public:
  /// Validates the tables exhaustively and builds the algebra.
  ///
  /// Throws StructuralError on malformed tables and AxiomViolation naming
  /// the first failed axiom with a witness. Axioms are checked in the order
  /// zero_identity, oplus_commutative, neg_involution, mv_axiom_1
  /// (neg 0 + x = neg 0), mv_axiom_2, then oplus_associative, lattice_order,
  /// lattice_distributive. Pairs are scanned as (x, y) with y <= x.
  ///
  /// After the quadratic checks, a chain-product certificate (a bijective
  /// homomorphism onto a product of chains, built from the central atoms)
  /// settles the rest in O(n^2 r); the cubic checks run only when it fails.
  static FiniteMVAlgebra from_tables(std::size_t size, Element zero,
                                     const std::vector<std::vector<Element>>& oplus_table,
                                     std::vector<Element> neg_table,
                                     std::vector<std::string> labels = {});

  /// The one-element algebra.
  static FiniteMVAlgebra trivial();

  std::size_t size() const noexcept { return neg_.size(); }
  bool is_trivial() const noexcept { return size() == 1; }
  Element zero() const noexcept { return zero_; }
  Element one() const noexcept { return neg_[zero_]; }

  Element oplus(Element x, Element y) const { return oplus_[x * size() + y]; }
  Element neg(Element x) const { return neg_[x]; }
  Element odot(Element x, Element y) const { return neg(oplus(neg(x), neg(y))); }
  Element join(Element x, Element y) const { return oplus(neg(oplus(neg(x), y)), y); }
  Element meet(Element x, Element y) const { return neg(join(neg(x), neg(y))); }
  bool leq(Element x, Element y) const { return oplus(neg(x), y) == one(); }
  Element distance(Element x, Element y) const {
    return oplus(neg(oplus(neg(x), y)), neg(oplus(x, neg(y))));
  }
  /// x + x + ... + x with k copies (0 for k = 0).
  Element multiple(Element x, std::size_t k) const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Element x) const { return labels_.at(x); }

  std::vector<std::vector<Element>> oplus_table() const;
  const std::vector<Element>& neg_table() const noexcept { return neg_; }

 private:
  FiniteMVAlgebra() = default;

  Element zero_ = 0;
  std::vector<Element> oplus_;  // row-major size x size
  std::vector<Element> neg_;
  std::vector<std::string> labels_;
};

/// Tables of the n-element Lukasiewicz chain; element k is k/(n-1).
FiniteMVAlgebra chain_algebra(int order);

/// Componentwise product. Elements are encoded in mixed radix with the
/// first factor most significant; the empty product is the trivial algebra.
FiniteMVAlgebra product(std::span<const FiniteMVAlgebra> factors);

/// Product of chains of the given orders.
FiniteMVAlgebra product_of_chains(std::span<const int> orders);

/// Rebuilds the tables of `algebra` under a relabeling: element x of the
/// input becomes element permutation[x] of the output.
FiniteMVAlgebra relabel(const FiniteMVAlgebra& algebra, std::span<const Element> permutation);

/// An algebra whose carrier sits inside a larger one. carrier[i] is the
/// element of the ambient algebra represented by element i of `algebra`.
struct EmbeddedAlgebra {
  FiniteMVAlgebra algebra;
  std::vector<Element> carrier;

  /// Local index of an ambient element, or size() if absent.
  Element local_index(Element ambient) const;
};

struct BooleanCenter {
  std::vector<Element> members;  // ascending
  std::vector<Element> atoms;    // ascending
};

/// B(A) = {a : a meet neg(a) = 0} and its atoms.
BooleanCenter boolean_center(const FiniteMVAlgebra& algebra);

/// B(A) as an MV-algebra in its own right (a subalgebra of A).
EmbeddedAlgebra center_algebra(const FiniteMVAlgebra& algebra);

/// The subalgebra on a subset closed under oplus and neg and containing 0.
EmbeddedAlgebra subalgebra(const FiniteMVAlgebra& algebra, std::span<const Element> members);

/// [0,a] with x +' y = (x + y) meet a and neg' x = neg x meet a.
/// Throws PreconditionError unless a is in the Boolean center.
EmbeddedAlgebra interval_algebra(const FiniteMVAlgebra& algebra, Element a);

/// Decomposition of a nontrivial finite MV-algebra into a product of chains.
struct Decomposition {
  /// Chain orders, ascending; eta[i] is the order of [0, atoms[i]].
  std::vector<int> eta;
  std::vector<Element> atoms;
  /// iso[x][i] is the numerator of x meet atoms[i] inside [0, atoms[i]].
  std::vector<std::vector<int>> iso;
  /// Inverse of iso, indexed by the mixed-radix code of the tuple.
  std::vector<Element> iso_inverse;

  Element element_of(std::span<const int> tuple) const;
};

/// Throws PreconditionError for the trivial algebra and InternalError when
/// the tables do not describe a product of chains.
Decomposition decompose(const FiniteMVAlgebra& algebra);

/// Equality of eta multisets; the trivial algebra is only isomorphic to
/// itself.
bool are_isomorphic(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b);

/// True when `map` (A -> B) preserves oplus, neg and zero on every pair.
bool is_homomorphism(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b,
                     std::span<const Element> map);

/// Throws ResourceError if the algebra is larger than `max_size`.
void check_size_cap(const FiniteMVAlgebra& algebra, std::size_t max_size);

}  // namespace mvalg
