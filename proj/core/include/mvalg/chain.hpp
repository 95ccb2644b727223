#pragma once

#include <compare>
#include <string>

#include "mvalg/rational.hpp"

namespace mvalg {

/// The Lukasiewicz chain with `order` elements {0, 1/(n-1), ..., 1}.
class Chain {
 public:
  /// Throws PreconditionError when order < 2; the one-element algebra is
  /// not a chain.
  explicit Chain(int order);

  int order() const noexcept { return order_; }
  int top() const noexcept { return order_ - 1; }

  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain&, const Chain&) = default;

 private:
  int order_;
};

/// The element numerator/(order-1) of a chain.
class ChainElement {
 public:
  ChainElement(Chain chain, int numerator);

  static ChainElement zero(Chain chain) { return {chain, 0}; }
  static ChainElement one(Chain chain) { return {chain, chain.top()}; }

  const Chain& chain() const noexcept { return chain_; }
  int numerator() const noexcept { return numerator_; }
  Rational value() const { return Rational(numerator_, chain_.top()); }

  /// "0", "1" or "k/d" in lowest terms.
  std::string label() const;

  friend bool operator==(const ChainElement&, const ChainElement&) = default;

 private:
  Chain chain_;
  int numerator_;
};

ChainElement oplus(const ChainElement& x, const ChainElement& y);
ChainElement neg(const ChainElement& x);

struct DerivedOps {
  ChainElement odot;
  ChainElement join;
  ChainElement meet;
  bool leq;
};

/// odot, join, meet and order, each computed from oplus and neg alone.
DerivedOps derived_ops(const ChainElement& x, const ChainElement& y);

ChainElement odot(const ChainElement& x, const ChainElement& y);
ChainElement join(const ChainElement& x, const ChainElement& y);
ChainElement meet(const ChainElement& x, const ChainElement& y);
bool leq(const ChainElement& x, const ChainElement& y);

/// d(x,y) = neg(neg(x) + y) + neg(x + neg(y)); numerically |x - y|.
ChainElement distance(const ChainElement& x, const ChainElement& y);

}  // namespace mvalg
