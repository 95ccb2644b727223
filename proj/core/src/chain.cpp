#include "mvalg/chain.hpp"

#include <algorithm>

#include "mvalg/error.hpp"

namespace mvalg {

Chain::Chain(int order) : order_(order) {
  if (order < 2) {
    throw PreconditionError("chain order must be at least 2, got " + std::to_string(order));
  }
}

ChainElement::ChainElement(Chain chain, int numerator) : chain_(chain), numerator_(numerator) {
  if (numerator < 0 || numerator > chain.top()) {
    throw PreconditionError("numerator " + std::to_string(numerator) + " outside chain of order " +
                            std::to_string(chain.order()));
  }
}

std::string ChainElement::label() const {
  const Rational v = value();
  if (v.den() == 1) return std::to_string(v.num());
  return v.to_string();
}

namespace {

void require_same_chain(const ChainElement& x, const ChainElement& y) {
  if (x.chain() != y.chain()) {
    throw IncompatibleCarriers("elements of chains of order " + std::to_string(x.chain().order()) +
                               " and " + std::to_string(y.chain().order()));
  }
}

}  // namespace

ChainElement oplus(const ChainElement& x, const ChainElement& y) {
  require_same_chain(x, y);
  return {x.chain(), std::min(x.numerator() + y.numerator(), x.chain().top())};
}

ChainElement neg(const ChainElement& x) { return {x.chain(), x.chain().top() - x.numerator()}; }

ChainElement odot(const ChainElement& x, const ChainElement& y) {
  return neg(oplus(neg(x), neg(y)));
}

ChainElement join(const ChainElement& x, const ChainElement& y) {
  return oplus(neg(oplus(neg(x), y)), y);
}

ChainElement meet(const ChainElement& x, const ChainElement& y) {
  return neg(join(neg(x), neg(y)));
}

bool leq(const ChainElement& x, const ChainElement& y) {
  return oplus(neg(x), y) == ChainElement::one(x.chain());
}

DerivedOps derived_ops(const ChainElement& x, const ChainElement& y) {
  require_same_chain(x, y);
  return {odot(x, y), join(x, y), meet(x, y), leq(x, y)};
}

ChainElement distance(const ChainElement& x, const ChainElement& y) {
  return oplus(neg(oplus(neg(x), y)), neg(oplus(x, neg(y))));
}

}  // namespace mvalg
