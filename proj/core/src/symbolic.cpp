#include "mvalg/symbolic.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "mvalg/error.hpp"

namespace mvalg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string index_text(Index x) { return std::to_string(x); }

const ClassLaw& law_for(const IndexSpec& spec, Index residue) {
  return spec.classes[static_cast<std::size_t>(residue % spec.period)];
}

// Numerator of the rational k/(n-1) inside a chain of order m.
int rescale(int k, int n, int m) {
  const std::int64_t scaled = static_cast<std::int64_t>(k) * (m - 1);
  if (scaled % (n - 1) != 0) {
    throw PreconditionError("value " + std::to_string(k) + "/" + std::to_string(n - 1) +
                            " is not representable in a chain of order " + std::to_string(m));
  }
  return static_cast<int>(scaled / (n - 1));
}

// Rational denoted by a class value on its residue class.
Rational class_rational(const ClassLaw& law, const ClassValue& value) {
  if (const auto* e = std::get_if<Extreme>(&value)) return Rational(*e == Extreme::Top ? 1 : 0);
  return Rational(std::get<int>(value), std::get<ConstLaw>(law).order - 1);
}

Index last_fixed_index(const IndexSpec& spec, const SymbolicElement& f) {
  Index last = -1;
  if (!f.prefix.empty()) last = std::max(last, f.prefix.rbegin()->first);
  if (!spec.prefix_overrides.empty()) last = std::max(last, spec.prefix_overrides.rbegin()->first);
  return last;
}

int checked_lcm(int a, int b) {
  const std::int64_t l = std::lcm(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
  if (l > std::numeric_limits<int>::max()) throw ResourceError("modulus overflow", std::numeric_limits<int>::max());
  return static_cast<int>(l);
}

}  // namespace

void IndexSpec::validate() const {
  if (period < 1) throw PreconditionError("period must be at least 1");
  if (classes.size() != static_cast<std::size_t>(period)) {
    throw PreconditionError("expected one class law per residue mod the period");
  }
  for (const ClassLaw& law : classes) {
    std::visit(overloaded{
                   [](const ConstLaw& c) {
                     if (c.order < 2) throw PreconditionError("constant class order must be at least 2");
                   },
                   [](const UnboundedLaw& u) {
                     if (u.slope < 1) throw PreconditionError("unbounded class slope must be at least 1");
                     if (u.offset < 2) throw PreconditionError("unbounded class offset must be at least 2");
                   },
               },
               law);
  }
  if (finite_limit && *finite_limit < 0) throw PreconditionError("finite index limit must be nonnegative");
  for (const auto& [x, order] : prefix_overrides) {
    if (!contains(x)) throw PreconditionError("override index " + index_text(x) + " outside the index set");
    if (order < 2) throw PreconditionError("override order must be at least 2");
  }
}

IndexSpec finite_spec_from_orders(const std::vector<int>& orders) {
  IndexSpec spec;
  const int base = orders.empty() ? 2 : orders.front();
  spec.classes = {ConstLaw{base}};
  spec.finite_limit = static_cast<Index>(orders.size());
  for (std::size_t x = 0; x < orders.size(); ++x) {
    if (orders[x] != base) spec.prefix_overrides[static_cast<Index>(x)] = orders[x];
  }
  spec.validate();
  return spec;
}

int chain_order_at(const IndexSpec& spec, Index x) {
  if (!spec.contains(x)) throw PreconditionError("index " + index_text(x) + " outside the index set");
  if (const auto it = spec.prefix_overrides.find(x); it != spec.prefix_overrides.end()) return it->second;
  return std::visit(overloaded{
                        [](const ConstLaw& c) { return c.order; },
                        [&](const UnboundedLaw& u) {
                          const std::int64_t n = static_cast<std::int64_t>(u.slope) * (x / spec.period) + u.offset;
                          if (n > std::numeric_limits<int>::max()) {
                            throw ResourceError("chain order overflow at index " + index_text(x),
                                                std::numeric_limits<int>::max());
                          }
                          return static_cast<int>(n);
                        },
                    },
                    law_for(spec, x));
}

void validate(const IndexSpec& spec, const SymbolicElement& f) {
  spec.validate();
  if (f.modulus < 1 || f.modulus % spec.period != 0) {
    throw PreconditionError("element modulus must be a positive multiple of the period");
  }
  if (f.class_values.size() != static_cast<std::size_t>(f.modulus)) {
    throw PreconditionError("expected one class value per residue mod the element modulus");
  }
  for (int r = 0; r < f.modulus; ++r) {
    const ClassLaw& law = law_for(spec, r);
    const ClassValue& value = f.class_values[static_cast<std::size_t>(r)];
    if (const auto* c = std::get_if<ConstLaw>(&law)) {
      const auto* k = std::get_if<int>(&value);
      if (k == nullptr) throw PreconditionError("constant classes take numeric values");
      if (*k < 0 || *k > c->order - 1) throw PreconditionError("class value outside its chain");
    } else if (!std::holds_alternative<Extreme>(value)) {
      throw PreconditionError("unbounded classes take the values zero or top");
    }
  }
  for (const auto& [x, k] : f.prefix) {
    const int n = chain_order_at(spec, x);
    if (k < 0 || k > n - 1) throw PreconditionError("prefix value at " + index_text(x) + " outside its chain");
  }
  for (const auto& [x, m] : spec.prefix_overrides) {
    if (f.prefix.contains(x)) continue;
    const ClassValue& value = f.class_values[static_cast<std::size_t>(x % f.modulus)];
    if (const auto* k = std::get_if<int>(&value)) {
      rescale(*k, std::get<ConstLaw>(law_for(spec, x)).order, m);
    }
  }
}

int numerator_at(const IndexSpec& spec, const SymbolicElement& f, Index x) {
  const int n = chain_order_at(spec, x);
  if (const auto it = f.prefix.find(x); it != f.prefix.end()) return it->second;
  const ClassValue& value = f.class_values[static_cast<std::size_t>(x % f.modulus)];
  if (const auto* e = std::get_if<Extreme>(&value)) return *e == Extreme::Top ? n - 1 : 0;
  return rescale(std::get<int>(value), std::get<ConstLaw>(law_for(spec, x)).order, n);
}

Rational value_at(const IndexSpec& spec, const SymbolicElement& f, Index x) {
  return Rational(numerator_at(spec, f, x), chain_order_at(spec, x) - 1);
}

SymbolicElement refine(const SymbolicElement& f, int modulus) {
  if (modulus < 1 || modulus % f.modulus != 0) {
    throw PreconditionError("refined modulus must be a multiple of the current one");
  }
  SymbolicElement g{modulus, f.prefix, {}};
  g.class_values.reserve(static_cast<std::size_t>(modulus));
  for (int r = 0; r < modulus; ++r) g.class_values.push_back(f.class_values[static_cast<std::size_t>(r % f.modulus)]);
  return g;
}

SymbolicElement oplus(const IndexSpec& spec, const SymbolicElement& f, const SymbolicElement& g) {
  validate(spec, f);
  validate(spec, g);
  const int l = checked_lcm(f.modulus, g.modulus);
  const SymbolicElement a = refine(f, l);
  const SymbolicElement b = refine(g, l);
  SymbolicElement out{l, {}, {}};
  for (int r = 0; r < l; ++r) {
    const ClassLaw& law = law_for(spec, r);
    const auto& va = a.class_values[static_cast<std::size_t>(r)];
    const auto& vb = b.class_values[static_cast<std::size_t>(r)];
    if (const auto* c = std::get_if<ConstLaw>(&law)) {
      out.class_values.emplace_back(std::min(std::get<int>(va) + std::get<int>(vb), c->order - 1));
    } else {
      const bool top = std::get<Extreme>(va) == Extreme::Top || std::get<Extreme>(vb) == Extreme::Top;
      out.class_values.emplace_back(top ? Extreme::Top : Extreme::Zero);
    }
  }
  std::set<Index> keys;
  for (const auto& [x, k] : f.prefix) keys.insert(x);
  for (const auto& [x, k] : g.prefix) keys.insert(x);
  for (Index x : keys) {
    out.prefix[x] = std::min(numerator_at(spec, f, x) + numerator_at(spec, g, x), chain_order_at(spec, x) - 1);
  }
  return out;
}

SymbolicElement neg(const IndexSpec& spec, const SymbolicElement& f) {
  validate(spec, f);
  SymbolicElement out{f.modulus, {}, {}};
  for (int r = 0; r < f.modulus; ++r) {
    const ClassLaw& law = law_for(spec, r);
    const auto& v = f.class_values[static_cast<std::size_t>(r)];
    if (const auto* c = std::get_if<ConstLaw>(&law)) {
      out.class_values.emplace_back(c->order - 1 - std::get<int>(v));
    } else {
      out.class_values.emplace_back(std::get<Extreme>(v) == Extreme::Top ? Extreme::Zero : Extreme::Top);
    }
  }
  for (const auto& [x, k] : f.prefix) out.prefix[x] = chain_order_at(spec, x) - 1 - k;
  return out;
}

namespace {

SymbolicElement extreme_element(const IndexSpec& spec, bool top) {
  SymbolicElement f{spec.period, {}, {}};
  for (const ClassLaw& law : spec.classes) {
    if (const auto* c = std::get_if<ConstLaw>(&law)) {
      f.class_values.emplace_back(top ? c->order - 1 : 0);
    } else {
      f.class_values.emplace_back(top ? Extreme::Top : Extreme::Zero);
    }
  }
  return f;
}

}  // namespace

SymbolicElement zero_element(const IndexSpec& spec) { return extreme_element(spec, false); }
SymbolicElement top_element(const IndexSpec& spec) { return extreme_element(spec, true); }

bool equivalent(const IndexSpec& spec, const SymbolicElement& f, const SymbolicElement& g) {
  if (!spec.is_infinite()) {
    for (Index x = 0; x < *spec.finite_limit; ++x) {
      if (numerator_at(spec, f, x) != numerator_at(spec, g, x)) return false;
    }
    return true;
  }
  const int l = checked_lcm(f.modulus, g.modulus);
  const SymbolicElement a = refine(f, l);
  const SymbolicElement b = refine(g, l);
  for (int r = 0; r < l; ++r) {
    const ClassLaw& law = law_for(spec, r);
    if (class_rational(law, a.class_values[static_cast<std::size_t>(r)]) !=
        class_rational(law, b.class_values[static_cast<std::size_t>(r)])) {
      return false;
    }
  }
  for (Index x = 0; x <= last_fixed_index(spec, f) || x <= last_fixed_index(spec, g); ++x) {
    if (numerator_at(spec, f, x) != numerator_at(spec, g, x)) return false;
  }
  return true;
}

void validate(const IndexSpec& spec, const SymbolicUltrafilter& u) {
  spec.validate();
  std::visit(overloaded{
                 [&](const PrincipalUltrafilter& p) {
                   if (!spec.contains(p.index)) {
                     throw PreconditionError("principal ultrafilter at " + index_text(p.index) +
                                             " outside the index set");
                   }
                 },
                 [&](const FreeUltrafilter& fu) {
                   if (!spec.is_infinite()) throw PreconditionError("finite index sets carry no free ultrafilters");
                   if (fu.modulus < 1 || fu.modulus % spec.period != 0) {
                     throw PreconditionError("free ultrafilter modulus must be a positive multiple of the period");
                   }
                   if (fu.residue < 0 || fu.residue >= fu.modulus) {
                     throw PreconditionError("free ultrafilter residue must lie in [0, modulus)");
                   }
                 },
             },
             u);
}

Rational ultrafilter_limit(const IndexSpec& spec, const SymbolicElement& f, const SymbolicUltrafilter& u) {
  validate(spec, f);
  validate(spec, u);
  if (const auto* p = std::get_if<PrincipalUltrafilter>(&u)) return value_at(spec, f, p->index);

  // The prefix is finite, so only the class value on U's residue class counts.
  const auto& fu = std::get<FreeUltrafilter>(u);
  const int l = checked_lcm(f.modulus, fu.modulus);
  const SymbolicElement g = refine(f, l);
  return class_rational(law_for(spec, fu.residue), g.class_values[static_cast<std::size_t>(fu.residue)]);
}

bool d_set_in_ultrafilter(const IndexSpec& spec, const SymbolicElement& f, const Rational& eps,
                          const SymbolicUltrafilter& u) {
  validate(spec, f);
  validate(spec, u);
  if (const auto* p = std::get_if<PrincipalUltrafilter>(&u)) return value_at(spec, f, p->index) < eps;

  // Past every fixed index, f restricted to the class residue mod lcm takes a
  // single value, so D(f, eps) either contains that tail (and is in U) or
  // misses it (and its complement is in U).
  const auto& fu = std::get<FreeUltrafilter>(u);
  const Index l = checked_lcm(f.modulus, fu.modulus);
  const Index last = last_fixed_index(spec, f);
  Index first = fu.residue;
  if (first <= last) first += ((last - first) / l + 1) * l;
  int inside = 0;
  constexpr int kSamples = 3;
  for (int t = 0; t < kSamples; ++t) {
    if (value_at(spec, f, first + t * l) < eps) ++inside;
  }
  if (inside != 0 && inside != kSamples) throw InternalError("element is not eventually constant on a residue class");
  return inside == kSamples;
}

bool in_maximal_ideal(const IndexSpec& spec, const SymbolicElement& f, const SymbolicUltrafilter& u) {
  validate(spec, f);
  // Every positive value f takes is at least the least positive value in its
  // finite description; below that threshold D(f, eps) is the zero set.
  Rational threshold(1);
  auto consider = [&](const Rational& v) {
    if (v > Rational(0) && v < threshold) threshold = v;
  };
  for (const auto& [x, k] : f.prefix) consider(value_at(spec, f, x));
  for (const auto& [x, m] : spec.prefix_overrides) consider(value_at(spec, f, x));
  for (int r = 0; r < f.modulus; ++r) consider(class_rational(law_for(spec, r), f.class_values[static_cast<std::size_t>(r)]));
  return d_set_in_ultrafilter(spec, f, threshold, u);
}

Census maximal_ideal_census(const IndexSpec& spec, Index principal_window) {
  spec.validate();
  Census census;
  const Index listed = spec.is_infinite() ? principal_window : std::min(principal_window, *spec.finite_limit);
  for (Index x = 0; x < listed; ++x) {
    MaximalIdealDescriptor d;
    d.kind = MaximalIdealDescriptor::Kind::Principal;
    d.index = x;
    d.rank = chain_order_at(spec, x);
    d.principal = true;
    census.principal.push_back(d);
  }
  census.principal_complete = !spec.is_infinite() && *spec.finite_limit <= principal_window;
  if (spec.is_infinite()) {
    for (int r = 0; r < spec.period; ++r) {
      MaximalIdealDescriptor d;
      d.kind = MaximalIdealDescriptor::Kind::FreeClass;
      d.residue = r;
      d.modulus = spec.period;
      d.principal = false;
      if (const auto* c = std::get_if<ConstLaw>(&spec.classes[static_cast<std::size_t>(r)])) d.rank = c->order;
      if (!d.rank) census.all_finite_rank = false;
      census.free.push_back(d);
    }
  }
  return census;
}

Verdict decide_strongly_complete(const IndexSpec& spec) {
  spec.validate();
  if (!spec.is_infinite()) return {true, std::nullopt};
  for (const MaximalIdealDescriptor& d : maximal_ideal_census(spec, 0).free) {
    if (d.rank) return {false, d};
  }
  return {true, std::nullopt};
}

CompletionReport completion_report(const IndexSpec& spec) {
  CompletionReport report;
  report.verdict = decide_strongly_complete(spec);

  FactorFamily principal;
  principal.kind = FactorFamily::Kind::PrincipalPart;
  principal.modulus = spec.period;
  principal.multiplicity = "one factor L_{n_x} per index x";
  report.factors.push_back(principal);

  if (spec.is_infinite()) {
    for (int r = 0; r < spec.period; ++r) {
      const auto* c = std::get_if<ConstLaw>(&spec.classes[static_cast<std::size_t>(r)]);
      if (c == nullptr) continue;
      FactorFamily family;
      family.kind = FactorFamily::Kind::FreeUltrafilterFamily;
      family.residue = r;
      family.modulus = spec.period;
      family.order = c->order;
      family.multiplicity = "one L_" + std::to_string(c->order) +
                            " per free ultrafilter containing the residue class " + std::to_string(r) +
                            " mod " + std::to_string(spec.period);
      report.factors.push_back(family);
    }
  } else {
    std::vector<int> eta = truncated_orders(spec, *spec.finite_limit);
    std::sort(eta.begin(), eta.end());
    report.finite_eta = std::move(eta);
  }
  report.completion_is_algebra = report.verdict.strongly_complete;
  return report;
}

std::vector<int> truncated_orders(const IndexSpec& spec, Index n) {
  spec.validate();
  if (n < 0) throw PreconditionError("truncation length must be nonnegative");
  if (!spec.is_infinite() && n > *spec.finite_limit) {
    throw PreconditionError("truncation length exceeds the finite index set");
  }
  std::vector<int> orders;
  orders.reserve(static_cast<std::size_t>(n));
  for (Index x = 0; x < n; ++x) orders.push_back(chain_order_at(spec, x));
  return orders;
}

FiniteMVAlgebra truncate(const IndexSpec& spec, Index n, std::size_t max_truncation, std::size_t max_size) {
  if (n > static_cast<Index>(max_truncation)) {
    throw ResourceError("truncation length " + std::to_string(n) + " exceeds cap " + std::to_string(max_truncation),
                        max_truncation);
  }
  const std::vector<int> orders = truncated_orders(spec, n);
  std::size_t size = 1;
  for (int order : orders) {
    size *= static_cast<std::size_t>(order);
    if (size > max_size) {
      throw ResourceError("truncation to " + std::to_string(n) + " indices exceeds the size cap " +
                              std::to_string(max_size),
                          max_size);
    }
  }
  return product_of_chains(orders);
}

Element truncate_element(const IndexSpec& spec, const SymbolicElement& f, Index n) {
  validate(spec, f);
  const std::vector<int> orders = truncated_orders(spec, n);
  Element code = 0;
  for (Index x = 0; x < n; ++x) {
    code = code * static_cast<Element>(orders[static_cast<std::size_t>(x)]) +
           static_cast<Element>(numerator_at(spec, f, x));
  }
  return code;
}

}  // namespace mvalg
