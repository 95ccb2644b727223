#include "mvalg/json_io.hpp"

#include <charconv>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <string>

namespace mvalg::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

void require_object(const json& doc, const std::string& where) {
  if (!doc.is_object()) fail(where, "expected an object");
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(where, "unknown field '" + key + "'");
  }
}

std::uint64_t as_unsigned(const json& v, const std::string& where) {
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    fail(where, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::int64_t as_integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  return v.get<std::int64_t>();
}

int as_int(const json& v, const std::string& where, int min) {
  const std::int64_t x = as_integer(v, where);
  if (x < min || x > std::numeric_limits<int>::max()) {
    fail(where, "expected an integer >= " + std::to_string(min));
  }
  return static_cast<int>(x);
}

Index parse_index_key(const std::string& key, const std::string& where) {
  Index x = 0;
  const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), x);
  if (ec != std::errc() || ptr != key.data() + key.size() || x < 0) {
    fail(where, "key '" + key + "' is not a non-negative index");
  }
  return x;
}

TablesDocument parse_tables(const json& doc) {
  const std::string where = "tables document";
  reject_unknown(doc, {"type", "size", "zero", "oplus", "neg", "labels", "description"}, where);
  TablesDocument t;
  t.size = as_unsigned(field(doc, "size", where), where + ".size");
  t.zero = as_unsigned(field(doc, "zero", where), where + ".zero");
  const json& rows = field(doc, "oplus", where);
  if (!rows.is_array()) fail(where + ".oplus", "expected an array of rows");
  for (const json& row : rows) {
    if (!row.is_array()) fail(where + ".oplus", "expected an array of rows");
    auto& out = t.oplus.emplace_back();
    for (const json& v : row) out.push_back(as_unsigned(v, where + ".oplus"));
  }
  const json& neg = field(doc, "neg", where);
  if (!neg.is_array()) fail(where + ".neg", "expected an array");
  for (const json& v : neg) t.neg.push_back(as_unsigned(v, where + ".neg"));
  if (const auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array()) fail(where + ".labels", "expected an array of strings");
    for (const json& v : *it) {
      if (!v.is_string()) fail(where + ".labels", "expected an array of strings");
      t.labels.push_back(v.get<std::string>());
    }
  }
  return t;
}

ProductDocument parse_product(const json& doc) {
  const std::string where = "product document";
  reject_unknown(doc, {"type", "orders", "description"}, where);
  const json& orders = field(doc, "orders", where);
  if (!orders.is_array()) fail(where + ".orders", "expected an array of chain orders");
  ProductDocument p;
  for (const json& v : orders) p.orders.push_back(as_int(v, where + ".orders", 2));
  return p;
}

const char* extreme_name(Extreme e) { return e == Extreme::Zero ? "zero" : "top"; }

std::string kind_name(MaximalIdealDescriptor::Kind k) {
  return k == MaximalIdealDescriptor::Kind::Principal ? "principal" : "free_class";
}

json rank_json(const std::optional<int>& rank) {
  return rank ? json(*rank) : json("infinite");
}

json labels_of(const FiniteMVAlgebra& algebra, std::span<const Element> elements) {
  json out = json::array();
  for (Element e : elements) out.push_back(algebra.label(e));
  return out;
}

}  // namespace

AlgebraDocument parse_algebra_document(const json& doc) {
  require_object(doc, "algebra document");
  const json& type = field(doc, "type", "algebra document");
  if (!type.is_string()) fail("algebra document.type", "expected a string");
  const auto name = type.get<std::string>();
  if (name == "tables") return parse_tables(doc);
  if (name == "product") return parse_product(doc);
  if (name == "full_product") return index_spec_from_json(doc);
  fail("algebra document.type", "unknown type '" + name + "'");
}

AlgebraDocument parse_algebra_document_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  return parse_algebra_document(doc);
}

FiniteMVAlgebra materialize(const AlgebraDocument& doc, std::size_t max_size) {
  if (const auto* t = std::get_if<TablesDocument>(&doc)) {
    if (t->size > max_size) {
      throw ResourceError("algebra has " + std::to_string(t->size) + " elements, cap is " +
                              std::to_string(max_size),
                          max_size);
    }
    return FiniteMVAlgebra::from_tables(t->size, t->zero, t->oplus, t->neg, t->labels);
  }
  if (const auto* p = std::get_if<ProductDocument>(&doc)) {
    std::size_t size = 1;
    for (int n : p->orders) {
      if (size > max_size / static_cast<std::size_t>(n)) {
        throw ResourceError("product exceeds the cap of " + std::to_string(max_size) + " elements", max_size);
      }
      size *= static_cast<std::size_t>(n);
    }
    return product_of_chains(p->orders);
  }
  throw PreconditionError("full_product documents describe symbolic products; this command needs a finite "
                          "algebra (tables or product)");
}

IndexSpec as_index_spec(const AlgebraDocument& doc) {
  if (const auto* s = std::get_if<IndexSpec>(&doc)) return *s;
  if (const auto* p = std::get_if<ProductDocument>(&doc)) return finite_spec_from_orders(p->orders);
  throw PreconditionError("tables documents have no symbolic presentation; use product or full_product");
}

json to_json(const FiniteMVAlgebra& algebra) {
  return {{"type", "tables"},
          {"size", algebra.size()},
          {"zero", algebra.zero()},
          {"oplus", algebra.oplus_table()},
          {"neg", algebra.neg_table()},
          {"labels", algebra.labels()}};
}

json to_json(const IndexSpec& spec) {
  json classes = json::array();
  for (const ClassLaw& law : spec.classes) {
    if (const auto* c = std::get_if<ConstLaw>(&law)) {
      classes.push_back({{"kind", "const"}, {"order", c->order}});
    } else {
      const auto& u = std::get<UnboundedLaw>(law);
      classes.push_back({{"kind", "unbounded"}, {"slope", u.slope}, {"offset", u.offset}});
    }
  }
  json overrides = json::object();
  for (const auto& [x, n] : spec.prefix_overrides) overrides[std::to_string(x)] = n;
  json index_set = spec.finite_limit ? json{{"kind", "finite"}, {"limit", *spec.finite_limit}}
                                     : json{{"kind", "infinite"}};
  return {{"type", "full_product"},   {"period", spec.period},
          {"classes", classes},       {"prefix_overrides", overrides},
          {"index_set", index_set},   {"description", spec.description}};
}

IndexSpec index_spec_from_json(const json& doc) {
  const std::string where = "full_product document";
  require_object(doc, where);
  reject_unknown(doc, {"type", "period", "classes", "prefix_overrides", "index_set", "description"}, where);
  IndexSpec spec;
  spec.period = as_int(field(doc, "period", where), where + ".period", 1);
  const json& classes = field(doc, "classes", where);
  if (!classes.is_array()) fail(where + ".classes", "expected an array");
  for (const json& c : classes) {
    const std::string cw = where + ".classes[]";
    require_object(c, cw);
    const json& kind = field(c, "kind", cw);
    if (kind == "const") {
      reject_unknown(c, {"kind", "order"}, cw);
      spec.classes.emplace_back(ConstLaw{as_int(field(c, "order", cw), cw + ".order", 2)});
    } else if (kind == "unbounded") {
      reject_unknown(c, {"kind", "slope", "offset"}, cw);
      spec.classes.emplace_back(UnboundedLaw{as_int(field(c, "slope", cw), cw + ".slope", 1),
                                             as_int(field(c, "offset", cw), cw + ".offset", 2)});
    } else {
      fail(cw + ".kind", "expected \"const\" or \"unbounded\"");
    }
  }
  if (spec.classes.size() != static_cast<std::size_t>(spec.period)) {
    fail(where + ".classes", "expected one law per residue (" + std::to_string(spec.period) + ")");
  }
  if (const auto it = doc.find("prefix_overrides"); it != doc.end()) {
    if (!it->is_object()) fail(where + ".prefix_overrides", "expected an object of index -> order");
    for (const auto& [key, value] : it->items()) {
      spec.prefix_overrides[parse_index_key(key, where + ".prefix_overrides")] =
          as_int(value, where + ".prefix_overrides", 2);
    }
  }
  const json& index_set = field(doc, "index_set", where);
  require_object(index_set, where + ".index_set");
  const json& kind = field(index_set, "kind", where + ".index_set");
  if (kind == "infinite") {
    reject_unknown(index_set, {"kind"}, where + ".index_set");
  } else if (kind == "finite") {
    reject_unknown(index_set, {"kind", "limit"}, where + ".index_set");
    spec.finite_limit = static_cast<Index>(as_unsigned(field(index_set, "limit", where + ".index_set"), where + ".index_set.limit"));
  } else {
    fail(where + ".index_set.kind", "expected \"finite\" or \"infinite\"");
  }
  if (const auto it = doc.find("description"); it != doc.end()) {
    if (!it->is_string()) fail(where + ".description", "expected a string");
    spec.description = it->get<std::string>();
  }
  return spec;
}

json to_json(const SymbolicElement& f) {
  json prefix = json::object();
  for (const auto& [x, k] : f.prefix) prefix[std::to_string(x)] = k;
  json classes = json::array();
  for (const ClassValue& v : f.class_values) {
    if (const auto* k = std::get_if<int>(&v)) {
      classes.push_back(*k);
    } else {
      classes.push_back(extreme_name(std::get<Extreme>(v)));
    }
  }
  return {{"modulus", f.modulus}, {"prefix", prefix}, {"classes", classes}};
}

SymbolicElement symbolic_element_from_json(const json& doc) {
  const std::string where = "symbolic element";
  require_object(doc, where);
  reject_unknown(doc, {"modulus", "prefix", "classes"}, where);
  SymbolicElement f;
  f.modulus = as_int(field(doc, "modulus", where), where + ".modulus", 1);
  if (const auto it = doc.find("prefix"); it != doc.end()) {
    if (!it->is_object()) fail(where + ".prefix", "expected an object of index -> numerator");
    for (const auto& [key, value] : it->items()) {
      f.prefix[parse_index_key(key, where + ".prefix")] = as_int(value, where + ".prefix", 0);
    }
  }
  const json& classes = field(doc, "classes", where);
  if (!classes.is_array()) fail(where + ".classes", "expected an array");
  for (const json& v : classes) {
    if (v == "zero") {
      f.class_values.emplace_back(Extreme::Zero);
    } else if (v == "top") {
      f.class_values.emplace_back(Extreme::Top);
    } else {
      f.class_values.emplace_back(as_int(v, where + ".classes", 0));
    }
  }
  if (f.class_values.size() != static_cast<std::size_t>(f.modulus)) {
    fail(where + ".classes", "expected one value per residue (" + std::to_string(f.modulus) + ")");
  }
  return f;
}

SymbolicUltrafilter parse_ultrafilter(std::string_view text) {
  auto number = [&](std::string_view part) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() || v < 0) {
      throw SchemaError("ultrafilter '" + std::string(text) + "': expected principal:x or free:r:m");
    }
    return v;
  };
  if (text.starts_with("principal:")) return PrincipalUltrafilter{number(text.substr(10))};
  if (text.starts_with("free:")) {
    const std::string_view rest = text.substr(5);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) number({});
    const auto r = number(rest.substr(0, colon));
    const auto m = number(rest.substr(colon + 1));
    if (m < 1 || r >= m || m > std::numeric_limits<int>::max()) {
      throw SchemaError("ultrafilter '" + std::string(text) + "': need 0 <= r < m");
    }
    return FreeUltrafilter{static_cast<int>(r), static_cast<int>(m)};
  }
  number({});
  return {};
}

std::string to_string(const SymbolicUltrafilter& u) {
  if (const auto* p = std::get_if<PrincipalUltrafilter>(&u)) return "principal:" + std::to_string(p->index);
  const auto& f = std::get<FreeUltrafilter>(u);
  return "free:" + std::to_string(f.residue) + ":" + std::to_string(f.modulus);
}

json to_json(const Ideal& ideal) { return {{"members", ideal.members()}}; }

json to_json(const IdealClassification& c) {
  return {{"proper", c.proper},
          {"prime", c.prime},
          {"maximal", c.maximal},
          {"rank", c.rank ? json(*c.rank) : json(nullptr)},
          {"principal_generator", c.principal_generator ? json(*c.principal_generator) : json(nullptr)}};
}

json to_json(const Decomposition& d, const FiniteMVAlgebra& algebra) {
  return {{"eta", d.eta}, {"atoms", d.atoms}, {"atom_labels", labels_of(algebra, d.atoms)}, {"iso", d.iso}};
}

json to_json(const MaximalIdealDescriptor& d) {
  json out = {{"kind", kind_name(d.kind)}, {"rank", rank_json(d.rank)}, {"principal", d.principal}};
  if (d.kind == MaximalIdealDescriptor::Kind::Principal) {
    out["index"] = d.index;
  } else {
    out["residue"] = d.residue;
    out["modulus"] = d.modulus;
  }
  return out;
}

json to_json(const Census& census) {
  json principal = json::array();
  for (const auto& d : census.principal) principal.push_back(to_json(d));
  json free = json::array();
  for (const auto& d : census.free) free.push_back(to_json(d));
  return {{"principal", principal},
          {"principal_complete", census.principal_complete},
          {"free", free},
          {"all_finite_rank", census.all_finite_rank}};
}

json to_json(const Verdict& verdict) {
  return {{"strongly_complete", verdict.strongly_complete},
          {"witness", verdict.witness ? to_json(*verdict.witness) : json(nullptr)}};
}

json to_json(const CompletionReport& report) {
  json factors = json::array();
  for (const FactorFamily& f : report.factors) {
    if (f.kind == FactorFamily::Kind::PrincipalPart) {
      factors.push_back({{"kind", "principal_part"}, {"multiplicity", f.multiplicity}});
    } else {
      factors.push_back({{"kind", "free_ultrafilter_family"},
                         {"residue", f.residue},
                         {"modulus", f.modulus},
                         {"order", f.order},
                         {"multiplicity", f.multiplicity}});
    }
  }
  return {{"verdict", to_json(report.verdict)},
          {"factors", factors},
          {"completion_is_algebra", report.completion_is_algebra},
          {"finite_eta", report.finite_eta ? json(*report.finite_eta) : json(nullptr)}};
}

json to_json(const Main3Report& r) {
  return {{"ideal_count", r.ideal_count},
          {"center_ideal_count", r.center_ideal_count},
          {"psi_bijective", r.psi_bijective},
          {"psi_preserves_and_reflects_inclusion", r.psi_preserves_and_reflects_inclusion},
          {"theta_isomorphisms", r.theta_isomorphisms},
          {"squares_commute", r.squares_commute},
          {"passed", r.passed()}};
}

json to_json(const BooReport& r) {
  return {{"center_of_completion", r.center_of_completion},
          {"completion_of_center", r.completion_of_center},
          {"isomorphic", r.isomorphic}};
}

json make_report(std::string_view command, json result) {
  return {{"command", command}, {"version", kReportVersion}, {"result", std::move(result)}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace mvalg::io
