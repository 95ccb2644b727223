#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <iterator>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mvalg/completion.hpp"
#include "mvalg/finite_algebra.hpp"
#include "mvalg/ideals.hpp"
#include "mvalg/json_io.hpp"
#include "mvalg/symbolic.hpp"

namespace mvalg::cli {

namespace {

using io::json;

/// Unreadable files and malformed flag values; reported like schema errors.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string input = "-";
  std::size_t max_size = kDefaultMaxSize;
  std::size_t max_truncation = kDefaultMaxTruncation;
  std::string out;
  // quotient
  std::string ideal;
  bool generated = false;
  // census
  std::optional<std::size_t> window;
  // limit
  std::string element;
  std::string ultrafilter;
};

struct Outcome {
  json result;
  int status = kOk;
};

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(file), {}};
}

io::AlgebraDocument load(const Options& opt, std::istream& in) {
  return io::parse_algebra_document_text(read_source(opt.input, in));
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(what + ": malformed JSON: " + e.what());
  }
}

std::vector<Element> parse_element_list(const std::string& text) {
  std::vector<Element> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view part(text.data() + pos, comma - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    Element v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw UsageError("--ideal expects a comma-separated list of element indices, got '" + text + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

json labelled(const FiniteMVAlgebra& a, std::span<const Element> xs) {
  json labels = json::array();
  for (Element x : xs) labels.push_back(a.label(x));
  return {{"members", std::vector<Element>(xs.begin(), xs.end())}, {"labels", labels}};
}

json eta_or_null(const FiniteMVAlgebra& a) {
  return a.is_trivial() ? json(nullptr) : json(decompose(a).eta);
}

Outcome cmd_verify(const Options& opt, std::istream& in) {
  const io::AlgebraDocument doc = load(opt, in);
  if (const auto* spec = std::get_if<IndexSpec>(&doc)) {
    spec->validate();
    return {{{"valid", true}, {"symbolic", true}}};
  }
  try {
    const FiniteMVAlgebra a = io::materialize(doc, opt.max_size);
    return {{{"valid", true}, {"symbolic", false}, {"size", a.size()}}};
  } catch (const AxiomViolation& e) {
    return {{{"valid", false}, {"axiom", e.axiom()}, {"witness", e.witness()}, {"message", e.what()}}, kDomain};
  }
}

Outcome cmd_decompose(const Options& opt, std::istream& in) {
  const FiniteMVAlgebra a = io::materialize(load(opt, in), opt.max_size);
  return {io::to_json(decompose(a), a)};
}

Outcome cmd_center(const Options& opt, std::istream& in) {
  const FiniteMVAlgebra a = io::materialize(load(opt, in), opt.max_size);
  const BooleanCenter c = boolean_center(a);
  return {{{"center", labelled(a, c.members)}, {"atoms", labelled(a, c.atoms)}, {"atom_count", c.atoms.size()},
           {"size", c.members.size()}}};
}

Outcome cmd_ideals(const Options& opt, std::istream& in) {
  const FiniteMVAlgebra a = io::materialize(load(opt, in), opt.max_size);
  json list = json::array();
  std::size_t maximal = 0;
  for (const Ideal& ideal : all_ideals(a, opt.max_size)) {
    const IdealClassification c = classify(a, ideal);
    maximal += c.maximal ? 1 : 0;
    json entry = labelled(a, ideal.members());
    entry["classification"] = io::to_json(c);
    list.push_back(std::move(entry));
  }
  return {{{"count", list.size()}, {"maximal_count", maximal}, {"ideals", list}, {"regular", is_regular(a)}}};
}

Outcome cmd_quotient(const Options& opt, std::istream& in) {
  const FiniteMVAlgebra a = io::materialize(load(opt, in), opt.max_size);
  const std::vector<Element> elements = parse_element_list(opt.ideal);
  for (Element x : elements) {
    if (x >= a.size()) throw PreconditionError("element " + std::to_string(x) + " is not in the carrier");
  }
  const Ideal ideal = opt.generated ? generated_ideal(a, elements) : Ideal::from_members(a, elements);
  const IdealClassification c = classify(a, ideal);
  const Quotient q = quotient(a, ideal);
  json decomposition = json::array();
  if (c.proper) {
    for (const Ideal& m : maximal_decomposition(a, ideal)) decomposition.push_back(labelled(a, m.members()));
  }
  return {{{"ideal", labelled(a, ideal.members())},
           {"classification", io::to_json(c)},
           {"quotient", io::to_json(q.algebra)},
           {"projection", q.projection},
           {"eta", eta_or_null(q.algebra)},
           {"maximal_decomposition", decomposition}}};
}

Outcome cmd_complete(const Options& opt, std::istream& in) {
  const FiniteMVAlgebra a = io::materialize(load(opt, in), opt.max_size);
  const CompletionResult r = profinite_completion(a, opt.max_size);
  json result = {{"ideal_count", r.system.node_count()},
                 {"thread_count", r.threads.size()},
                 {"functorial", r.system.is_functorial()},
                 {"canonical_map", r.canonical_map},
                 {"is_isomorphism", r.is_isomorphism},
                 {"strongly_complete", r.is_isomorphism},
                 {"eta", r.eta.empty() ? json(nullptr) : json(r.eta)},
                 {"completion", io::to_json(r.completion)}};
  if (is_regular(a)) {
    result["main3"] = io::to_json(verify_main3(a, opt.max_size));
    result["boo"] = io::to_json(verify_boo(a, opt.max_size));
  } else {
    result["main3"] = nullptr;
    result["boo"] = nullptr;
  }
  return {std::move(result)};
}

IndexSpec symbolic_input(const Options& opt, std::istream& in) {
  const io::AlgebraDocument doc = load(opt, in);
  if (std::holds_alternative<io::TablesDocument>(doc)) {
    // A finite algebra is presented by its own chain orders.
    const FiniteMVAlgebra a = io::materialize(doc, opt.max_size);
    return finite_spec_from_orders(a.is_trivial() ? std::vector<int>{} : decompose(a).eta);
  }
  IndexSpec spec = io::as_index_spec(doc);
  spec.validate();
  return spec;
}

Outcome cmd_decide_sc(const Options& opt, std::istream& in) {
  const IndexSpec spec = symbolic_input(opt, in);
  const CompletionReport report = completion_report(spec);
  return {{{"strongly_complete", report.verdict.strongly_complete},
           {"witness", report.verdict.witness ? io::to_json(*report.verdict.witness) : json(nullptr)},
           {"completion_report", io::to_json(report)}}};
}

Outcome cmd_census(const Options& opt, std::istream& in) {
  const IndexSpec spec = symbolic_input(opt, in);
  const std::size_t window = opt.window.value_or(opt.max_truncation);
  if (window > opt.max_truncation) {
    throw ResourceError("census window " + std::to_string(window) + " exceeds --max-truncation " +
                            std::to_string(opt.max_truncation),
                        opt.max_truncation);
  }
  return {io::to_json(maximal_ideal_census(spec, static_cast<Index>(window)))};
}

Outcome cmd_limit(const Options& opt, std::istream& in) {
  const IndexSpec spec = symbolic_input(opt, in);
  const std::string text = opt.element.starts_with('@') ? read_source(opt.element.substr(1), in) : opt.element;
  const SymbolicElement f = io::symbolic_element_from_json(parse_json_text(text, "--element"));
  const SymbolicUltrafilter u = io::parse_ultrafilter(opt.ultrafilter);
  validate(spec, f);
  validate(spec, u);
  const Rational lim = ultrafilter_limit(spec, f, u);
  return {{{"limit", lim.to_string()},
           {"ultrafilter", io::to_string(u)},
           {"in_maximal_ideal", in_maximal_ideal(spec, f, u)}}};
}

json error_body(const char* kind, const std::exception& e) { return {{"kind", kind}, {"message", e.what()}}; }

/// Maps an exception to its exit status and error payload.
std::pair<int, json> classify_error(std::exception_ptr ptr) {
  try {
    std::rethrow_exception(ptr);
  } catch (const AxiomViolation& e) {
    json body = error_body("axiom_violation", e);
    body["axiom"] = e.axiom();
    body["witness"] = e.witness();
    return {kDomain, body};
  } catch (const ResourceError& e) {
    json body = error_body("resource", e);
    body["cap"] = e.cap();
    return {kResource, body};
  } catch (const SchemaError& e) {
    return {kSchema, error_body("schema", e)};
  } catch (const StructuralError& e) {
    return {kSchema, error_body("structural", e)};
  } catch (const UsageError& e) {
    return {kSchema, error_body("usage", e)};
  } catch (const PreconditionError& e) {
    return {kDomain, error_body("precondition", e)};
  } catch (const IncompatibleCarriers& e) {
    return {kDomain, error_body("incompatible_carriers", e)};
  } catch (const InternalError& e) {
    return {kInternal, error_body("internal", e)};
  } catch (const std::exception& e) {
    return {kInternal, error_body("internal", e)};
  }
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on finite and symbolically presented MV-algebras", "mvalg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(io::kReportVersion));

  Options opt;
  using Handler = std::function<Outcome(const Options&, std::istream&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const char* name, const char* help, Handler handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", opt.input, "Algebra document path, or - for standard input")->capture_default_str();
    sub->add_option("--max-size", opt.max_size, "Cap on carrier elements")->capture_default_str();
    sub->add_option("--max-truncation", opt.max_truncation, "Cap on truncation length and census window")
        ->capture_default_str();
    sub->add_option("--out", opt.out, "Write the report here instead of standard output");
    commands.emplace_back(sub, std::move(handler));
    return sub;
  };

  add("verify", "Validate an algebra document against the MV axioms", cmd_verify);
  add("decompose", "Decompose a finite algebra into a product of chains", cmd_decompose);
  add("center", "Boolean center and its atoms", cmd_center);
  add("ideals", "Enumerate and classify all ideals", cmd_ideals);
  CLI::App* q = add("quotient", "Quotient by an ideal given as an element list", cmd_quotient);
  q->add_option("--ideal", opt.ideal, "Comma-separated element indices, e.g. 0,3")->required();
  q->add_flag("--generated", opt.generated, "Treat --ideal as generators rather than the full member list");
  add("complete", "Profinite completion as an inverse limit of finite quotients", cmd_complete);
  add("decide-sc", "Decide strong completeness and report the completion", cmd_decide_sc);
  CLI::App* census = add("census", "Maximal ideals with ranks", cmd_census);
  census->add_option("--window", opt.window, "Number of principal maximal ideals to list");
  CLI::App* limit = add("limit", "Limit of a symbolic element along an ultrafilter", cmd_limit);
  limit->add_option("--element", opt.element, "Symbolic element JSON, or @path")->required();
  limit->add_option("--ultrafilter", opt.ultrafilter, "principal:x or free:r:m")->required();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << io::kReportVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "mvalg: " << e.what() << "\n";
    return kSchema;
  }

  std::string command;
  Handler handler;
  for (auto& [sub, h] : commands) {
    if (sub->parsed()) {
      command = sub->get_name();
      handler = h;
    }
  }

  json report;
  int status = kOk;
  try {
    Outcome outcome = handler(opt, in);
    status = outcome.status;
    report = io::make_report(command, std::move(outcome.result));
  } catch (...) {
    auto [code, body] = classify_error(std::current_exception());
    status = code;
    report = {{"command", command}, {"version", io::kReportVersion}, {"error", body}};
    err << "mvalg " << command << ": " << body["message"].get<std::string>() << "\n";
  }

  const std::string text = io::dump(report);
  if (opt.out.empty()) {
    out << text;
  } else {
    std::ofstream file(opt.out, std::ios::binary | std::ios::trunc);
    file << text;
    if (!file) {
      err << "mvalg: cannot write '" << opt.out << "'\n";
      return kInternal;
    }
  }
  return status;
}

}  // namespace mvalg::cli
