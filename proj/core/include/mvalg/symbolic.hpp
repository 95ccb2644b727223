#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mvalg/finite_algebra.hpp"
#include "mvalg/rational.hpp"

namespace mvalg {

// Symbolic presentations of full products prod_{x in X} L_{n_x} with X = {0..N-1}
// or X = {0, 1, 2, ...}. Chain orders are eventually periodic in the residue
// x mod period; a residue class either has a constant order or an order that
// grows affinely along the class.

/// Every index in the residue class has the same chain order.
struct ConstLaw {
  int order = 2;
  friend bool operator==(const ConstLaw&, const ConstLaw&) = default;
};

/// The k-th index of the class (k = 0, 1, ...) has order slope*k + offset.
struct UnboundedLaw {
  int slope = 1;
  int offset = 2;
  friend bool operator==(const UnboundedLaw&, const UnboundedLaw&) = default;
};

using ClassLaw = std::variant<ConstLaw, UnboundedLaw>;

using Index = std::int64_t;

struct IndexSpec {
  int period = 1;
  /// One law per residue 0..period-1.
  std::vector<ClassLaw> classes;
  /// Finitely many indices whose order replaces the class law.
  std::map<Index, int> prefix_overrides;
  /// Size N of a finite index set {0..N-1}; empty for the natural numbers.
  std::optional<Index> finite_limit;
  /// Free text carried through serialization.
  std::string description;

  bool is_infinite() const noexcept { return !finite_limit.has_value(); }
  bool contains(Index x) const noexcept { return x >= 0 && (is_infinite() || x < *finite_limit); }

  /// Throws PreconditionError on an inconsistent presentation.
  void validate() const;

  friend bool operator==(const IndexSpec&, const IndexSpec&) = default;
};

/// A finite index set {0..N-1} carrying exactly the given chain orders.
IndexSpec finite_spec_from_orders(const std::vector<int>& orders);

/// n_x. Throws PreconditionError for indices outside the index set.
int chain_order_at(const IndexSpec& spec, Index x);

/// Value of a symbolic element on the tail of an unbounded class.
enum class Extreme { Zero, Top };

/// Numerator over a ConstLaw class (value k/(n-1)), or an extreme over an
/// UnboundedLaw class.
using ClassValue = std::variant<int, Extreme>;

/// An eventually periodic element of the product: explicit values on a
/// finite prefix, then one value per residue class mod `modulus`.
///
/// A class value k over ConstLaw(n) denotes the rational k/(n-1) at every
/// index of the class outside `prefix`; at an overridden index that rational
/// must be representable in the overriding chain.
struct SymbolicElement {
  int modulus = 1;
  std::map<Index, int> prefix;
  std::vector<ClassValue> class_values;

  friend bool operator==(const SymbolicElement&, const SymbolicElement&) = default;
};

void validate(const IndexSpec& spec, const SymbolicElement& f);

/// Numerator of f(x) in L_{n_x}.
int numerator_at(const IndexSpec& spec, const SymbolicElement& f, Index x);
Rational value_at(const IndexSpec& spec, const SymbolicElement& f, Index x);

/// Same element presented with a larger modulus (a multiple of f.modulus).
SymbolicElement refine(const SymbolicElement& f, int modulus);

/// Pointwise operations. Moduli are refined to their lcm.
SymbolicElement oplus(const IndexSpec& spec, const SymbolicElement& f, const SymbolicElement& g);
SymbolicElement neg(const IndexSpec& spec, const SymbolicElement& f);

SymbolicElement zero_element(const IndexSpec& spec);
SymbolicElement top_element(const IndexSpec& spec);

/// Pointwise equality on the whole index set. Decided on the fixed indices
/// plus the refined class values, which cover every later index.
bool equivalent(const IndexSpec& spec, const SymbolicElement& f, const SymbolicElement& g);

struct PrincipalUltrafilter {
  Index index = 0;
  friend bool operator==(const PrincipalUltrafilter&, const PrincipalUltrafilter&) = default;
};

/// A free ultrafilter containing {x : x = residue mod L} for every multiple
/// L of `modulus`. Every eventually periodic element has a determined limit
/// along it, and that limit does not depend on which such ultrafilter is
/// chosen.
struct FreeUltrafilter {
  int residue = 0;
  int modulus = 1;
  friend bool operator==(const FreeUltrafilter&, const FreeUltrafilter&) = default;
};

using SymbolicUltrafilter = std::variant<PrincipalUltrafilter, FreeUltrafilter>;

/// Throws PreconditionError if U does not exist over the spec's index set.
void validate(const IndexSpec& spec, const SymbolicUltrafilter& u);

/// lim_U f as an exact rational.
Rational ultrafilter_limit(const IndexSpec& spec, const SymbolicElement& f, const SymbolicUltrafilter& u);

/// Whether D(f, eps) = {x : f(x) < eps} belongs to U.
bool d_set_in_ultrafilter(const IndexSpec& spec, const SymbolicElement& f, const Rational& eps,
                          const SymbolicUltrafilter& u);

/// f in M_U, decided from the sets D(f, eps) rather than from the limit.
bool in_maximal_ideal(const IndexSpec& spec, const SymbolicElement& f, const SymbolicUltrafilter& u);

struct MaximalIdealDescriptor {
  enum class Kind { Principal, FreeClass };
  Kind kind = Kind::Principal;
  /// Principal: the index x.
  Index index = 0;
  /// FreeClass: the residue class residue mod modulus (modulus = period).
  int residue = 0;
  int modulus = 1;
  /// Empty means infinite rank.
  std::optional<int> rank;
  bool principal = true;

  friend bool operator==(const MaximalIdealDescriptor&, const MaximalIdealDescriptor&) = default;
};

struct Census {
  /// Principal maximal ideals for indices below the listing window.
  std::vector<MaximalIdealDescriptor> principal;
  /// True when `principal` lists every index of the index set.
  bool principal_complete = false;
  /// One descriptor per residue class mod period; empty for finite index sets.
  std::vector<MaximalIdealDescriptor> free;
  /// No descriptor (listed or not) has infinite rank.
  bool all_finite_rank = true;
};

Census maximal_ideal_census(const IndexSpec& spec, Index principal_window = 16);

struct Verdict {
  bool strongly_complete = false;
  std::optional<MaximalIdealDescriptor> witness;
};

/// Strongly complete iff every finite-rank maximal ideal is principal; for
/// these presentations that means a finite index set or no ConstLaw class.
Verdict decide_strongly_complete(const IndexSpec& spec);

struct FactorFamily {
  enum class Kind { PrincipalPart, FreeUltrafilterFamily };
  Kind kind = Kind::PrincipalPart;
  /// FreeUltrafilterFamily: residue class and the chain order of each factor.
  int residue = 0;
  int modulus = 1;
  int order = 0;
  /// Symbolic multiplicity tag, never a computed cardinal.
  std::string multiplicity;
};

struct CompletionReport {
  Verdict verdict;
  std::vector<FactorFamily> factors;
  /// True when the completion is the presented product itself.
  bool completion_is_algebra = false;
  /// Chain orders of the completion when the index set is finite.
  std::optional<std::vector<int>> finite_eta;
};

CompletionReport completion_report(const IndexSpec& spec);

/// Chain orders n_0 .. n_{N-1}.
std::vector<int> truncated_orders(const IndexSpec& spec, Index n);

/// The finite product of the chains at indices 0..N-1. Throws ResourceError
/// when N exceeds `max_truncation` or the product exceeds `max_size`.
FiniteMVAlgebra truncate(const IndexSpec& spec, Index n, std::size_t max_truncation = kDefaultMaxTruncation,
                         std::size_t max_size = kDefaultMaxSize);

/// The element of truncate(spec, N) that agrees with f on indices 0..N-1.
Element truncate_element(const IndexSpec& spec, const SymbolicElement& f, Index n);

}  // namespace mvalg
