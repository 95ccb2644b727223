#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "mvalg/finite_algebra.hpp"

namespace mvalg {

/// An ideal of a finite MV-algebra: contains 0, closed under oplus and
/// downward closed. Stored as a sorted member list over a fixed carrier.
class Ideal {
 public:
  /// Validates both ideal clauses; throws PreconditionError otherwise.
  static Ideal from_members(const FiniteMVAlgebra& algebra, std::span<const Element> members);

  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Element x) const { return x < mask_.size() && mask_[x]; }
  bool is_subset_of(const Ideal& other) const;

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.members_ == b.members_; }
  /// Lexicographic on the sorted member lists.
  friend std::strong_ordering operator<=>(const Ideal& a, const Ideal& b) {
    return a.members_ <=> b.members_;
  }

 private:
  friend Ideal generated_ideal(const FiniteMVAlgebra&, std::span<const Element>);
  Ideal(std::vector<char> mask);

  std::vector<Element> members_;
  std::vector<char> mask_;
};

/// True iff `members` satisfies the ideal clauses in `algebra`.
bool is_ideal(const FiniteMVAlgebra& algebra, std::span<const Element> members);

/// Least ideal containing `seed`, by alternating oplus-closure and
/// downward closure until nothing changes.
Ideal generated_ideal(const FiniteMVAlgebra& algebra, std::span<const Element> seed);

/// Every ideal of `algebra`, sorted by member list. Uses principality: the
/// ideals are exactly the ideals generated by single elements.
std::vector<Ideal> all_ideals(const FiniteMVAlgebra& algebra, std::size_t max_size = kDefaultMaxSize);

struct IdealClassification {
  bool proper = false;
  bool prime = false;
  bool maximal = false;
  /// |A/M| when maximal, otherwise empty.
  std::optional<int> rank;
  /// Join of the members. Always present for finite algebras.
  std::optional<Element> principal_generator;
};

IdealClassification classify(const FiniteMVAlgebra& algebra, const Ideal& ideal);

struct Quotient {
  FiniteMVAlgebra algebra;
  /// projection[a] is the class [a] in `algebra`.
  std::vector<Element> projection;
};

/// A/I under x ~ y iff d(x,y) in I. Classes are numbered in order of their
/// least member.
Quotient quotient(const FiniteMVAlgebra& algebra, const Ideal& ideal);

/// Maximal ideals M_1..M_r with I equal to their intersection, obtained by
/// pulling back the chain projection kernels of A/I. Sorted by member list.
/// Throws PreconditionError for the improper ideal.
std::vector<Ideal> maximal_decomposition(const FiniteMVAlgebra& algebra, const Ideal& ideal);

/// Intersection of ideals over the same carrier; the whole algebra for an
/// empty list.
Ideal intersect(const FiniteMVAlgebra& algebra, std::span<const Ideal> ideals);

/// Every prime ideal of B(A) generates a prime ideal of A.
bool is_regular(const FiniteMVAlgebra& algebra);

}  // namespace mvalg
