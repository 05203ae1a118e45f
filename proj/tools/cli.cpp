#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "nrack/constructions.hpp"
#include "nrack/enumerate.hpp"
#include "nrack/error.hpp"
#include "nrack/homology.hpp"
#include "nrack/json_io.hpp"
#include "nrack/leibniz.hpp"
#include "nrack/nrack.hpp"
#include "nrack/presentation.hpp"

namespace nrack::cli {

namespace {

using json::Json;

struct Options {
  std::string input;
  std::string output;
  std::string kind;
  std::string variant = "R";
  std::string degrees = "1-3";
  std::string coefficients = "Z";
  std::string filter;
  std::string group;
  std::string op;
  std::string export_dir;
  int n = -1;
  int m = -1;
  int t = -1;
  int s = -1;
  std::uint64_t budget = 0;
  std::uint64_t seed = 1;
  int samples = 0;
  bool literal_relator = false;
};

class Emitter {
 public:
  Emitter(const Options& o, std::ostream& out) : opts_(o), out_(out) {}

  void operator()(const std::string& text) {
    if (opts_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(opts_.output, std::ios::binary | std::ios::trunc);
    if (!f) throw InvalidArgument("cannot write " + opts_.output);
    f << text;
  }

 private:
  const Options& opts_;
  std::ostream& out_;
};

std::string tuple_text(std::span<const Element> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + std::to_string(t[i]);
  return s + ")";
}

Json tuple_json(std::span<const Element> t) { return Json(std::vector<Element>(t.begin(), t.end())); }

const std::string& require_input(const Options& o) {
  if (o.input.empty()) throw InvalidArgument("--input is required");
  return o.input;
}

int require(int v, const char* flag) {
  if (v < 0) throw InvalidArgument(std::string(flag) + " is required");
  return v;
}

FiniteNRack read_table(const Options& o) { return json::nrack_from_json(json::read_file(require_input(o))); }

FiniteGroup read_group(const std::string& spec) {
  if (spec.empty()) throw InvalidArgument("--group is required");
  if (std::filesystem::exists(spec)) return json::group_from_json(json::read_file(spec));
  return named_group(spec);
}

/// One line per failing axiom; empty when the table is an n-rack.
std::vector<std::string> axiom_failures(const FiniteNRack& r) {
  std::vector<std::string> out;
  if (const auto v = check_left_distributive(r); !v)
    out.push_back("left distributivity fails at (x; y) = " + tuple_text(v.witness));
  if (const auto v = check_translation_bijective(r); !v)
    out.push_back("translation by " + tuple_text(v.witness) + " is not a bijection");
  if (r.basepoint() && !check_pointed(r)) out.push_back("pointed axioms fail for basepoint " + std::to_string(*r.basepoint()));
  return out;
}

int report_failures(const std::vector<std::string>& failures, std::ostream& err) {
  for (const auto& f : failures) err << "axiom failure: " << f << "\n";
  return failures.empty() ? kOk : kAxiomFailure;
}

// ---------------------------------------------------------------- check

int cmd_check(const Options& o, Emitter& emit, std::ostream& err) {
  const auto r = read_table(o);
  const auto c = classify(r);
  Json counter = Json::object();
  if (const auto v = check_left_distributive(r); !v) counter["left_distributive"] = tuple_json(v.witness);
  if (const auto v = check_translation_bijective(r); !v) counter["translation_bijective"] = tuple_json(v.witness);
  if (const auto v = check_diagonal_idempotent(r); !v) counter["diagonal_idempotent"] = tuple_json(v.witness);
  if (const auto v = check_quandle_condition(r); !v) counter["quandle_condition"] = tuple_json(v.witness);
  if (const auto v = check_involutive(r); !v) counter["involutive"] = tuple_json(v.witness);

  Json j;
  j["arity"] = r.arity();
  j["size"] = r.size();
  j["classification"] = json::to_json(c);
  j["counterexamples"] = counter;
  std::optional<StructureFilter> filter;
  if (!o.filter.empty()) {
    filter = parse_filter(o.filter);
    j["filter"] = filter_name(*filter);
    j["passes_filter"] = passes_filter(c, *filter);
  }
  emit(json::dump(j));

  const int code = report_failures(axiom_failures(r), err);
  if (code != kOk) return code;
  if (filter && !passes_filter(c, *filter)) {
    err << "axiom failure: table is not a " << filter_name(*filter) << "\n";
    return kAxiomFailure;
  }
  return kOk;
}

// ---------------------------------------------------------------- construct

int emit_table(const FiniteNRack& r, Emitter& emit, std::ostream& err) {
  // every construction is re-validated before it is written
  const auto failures = axiom_failures(r);
  emit(json::dump(json::to_json(r)));
  return report_failures(failures, err);
}

int cmd_construct(const Options& o, Emitter& emit, std::ostream& err) {
  const auto& k = o.kind;
  if (k == "z4") return emit_table(build_z4_module_nrack(require(o.n, "--n"), require(o.m, "--m")), emit, err);
  if (k == "gamma") {
    return emit_table(build_gamma_module_nrack(require(o.n, "--n"), require(o.m, "--m"), require(o.t, "--t"),
                                               require(o.s, "--s")),
                      emit, err);
  }
  if (k == "conj") return emit_table(build_conjugation_nrack(read_group(o.group), require(o.n, "--n")), emit, err);
  if (k == "lift") return emit_table(lift_rack_to_nrack(FiniteRack(read_table(o)), require(o.n, "--n")), emit, err);
  if (k == "reduce") {
    const auto r = read_table(o);
    if (const int code = report_failures(axiom_failures(r), err); code != kOk) return code;
    return emit_table(reduce_nrack_to_rack(r).as_nrack(), emit, err);
  }
  if (k == "module-group") {
    const auto res = build_module_group_nrack(json::module_group_from_json(json::read_file(require_input(o))));
    emit(json::dump(json::to_json(res.rack)));
    std::vector<std::string> failures;
    if (!res.distributive)
      failures.push_back("left distributivity fails at (x; y) = " + tuple_text(res.distributive.witness));
    if (!res.bijective) failures.push_back("translation by " + tuple_text(res.bijective.witness) + " is not a bijection");
    if (res.classification.is_pointed == false) failures.push_back("pointed axioms fail for basepoint 0");
    return report_failures(failures, err);
  }
  throw InvalidArgument("unknown construction '" + k + "' (z4, gamma, conj, lift, reduce, module-group)");
}

// ---------------------------------------------------------------- homology

std::vector<int> parse_degrees(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 4)
      throw InvalidArgument("bad degree list '" + text + "'");
    return std::stoi(s);
  };
  while (std::getline(ss, part, ',')) {
    const auto dash = part.find('-');
    if (dash == std::string::npos) {
      out.push_back(number(part));
      continue;
    }
    const int lo = number(part.substr(0, dash)), hi = number(part.substr(dash + 1));
    if (lo > hi) throw InvalidArgument("bad degree range '" + part + "'");
    for (int k = lo; k <= hi; ++k) out.push_back(k);
  }
  if (out.empty()) throw InvalidArgument("no degrees given");
  return out;
}

void export_boundaries(const ChainComplex& c, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (int k = 1; k <= c.max_degree; ++k) {
    const auto path = std::filesystem::path(dir) /
                      ("boundary_" + std::string(1, variant_code(c.variant)) + "_" + std::to_string(k) + ".txt");
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw InvalidArgument("cannot write " + path.string());
    write_triplets(f, c.boundaries[k]);
  }
}

int cmd_homology(const Options& o, bool co, Emitter& emit, std::ostream& err) {
  const auto r = read_table(o);
  if (const int code = report_failures(axiom_failures(r), err); code != kOk) return code;
  const auto variant = parse_variant(o.variant);
  const auto coeffs = Coefficients::parse(o.coefficients);
  const auto degrees = parse_degrees(o.degrees);
  const int top = *std::max_element(degrees.begin(), degrees.end()) + 1;
  const auto c = chain_complex(r, variant, top, o.budget ? o.budget : kDefaultColumnBudget);
  if (const auto bad = find_nonzero_boundary_square(c)) {
    err << "axiom failure: boundary squares to nonzero in degree " << *bad << "\n";
    return kAxiomFailure;
  }
  if (!o.export_dir.empty()) export_boundaries(c, o.export_dir);
  std::string text;
  for (int k : degrees) text += json::to_json(co ? cohomology(c, k, coeffs) : homology(c, k, coeffs)).dump() + "\n";
  emit(text);
  return kOk;
}

// ---------------------------------------------------------------- assoc-group

int cmd_assoc_group(const Options& o, Emitter& emit, std::ostream& err) {
  const auto r = read_table(o);
  if (const int code = report_failures(axiom_failures(r), err); code != kOk) return code;
  const auto convention = o.literal_relator ? RelatorConvention::Literal : RelatorConvention::Conjugation;
  const auto p = associated_group_presentation(r, convention);
  const auto ab = abelianization(p);
  Json j;
  j["convention"] = o.literal_relator ? "literal" : "conjugation";
  j["relator_instances"] = r.tuple_count();
  j["presentation"] = json::to_json(p);
  j["abelianization"] = json::to_json(ab);
  j["abelianization_text"] = ab.to_string();
  emit(json::dump(j));
  return kOk;
}

// ---------------------------------------------------------------- leibniz

Json witness_json(const IdentityWitness& w) {
  Json j;
  if (!w.x.empty()) j["x"] = w.x;
  j["y"] = w.y;
  j["lhs"] = json::to_json(w.lhs);
  j["rhs"] = json::to_json(w.rhs);
  return j;
}

Vector random_vector(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  Vector v(d);
  for (auto& q : v) {
    q = Rational(num(rng), den(rng));
    q.canonicalize();
  }
  return v;
}

/// Evaluates the fundamental identity on `samples` random rational argument
/// lists; true when every sample balances.
bool random_probe(const LeibnizNAlgebra& l, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto d = l.dimension();
  const auto n = static_cast<std::size_t>(l.arity());
  for (int i = 0; i < samples; ++i) {
    std::vector<Vector> x, y;
    for (std::size_t a = 0; a + 1 < n; ++a) x.push_back(random_vector(rng, d));
    for (std::size_t a = 0; a < n; ++a) y.push_back(random_vector(rng, d));
    auto outer = x;
    outer.push_back(l.bracket(y));
    const auto lhs = l.bracket(outer);
    Vector rhs(d);
    for (std::size_t a = 0; a < n; ++a) {
      auto xa = x;
      xa.push_back(y[a]);
      auto ys = y;
      ys[a] = l.bracket(xa);
      const auto term = l.bracket(ys);
      for (std::size_t j = 0; j < d; ++j) rhs[j] += term[j];
    }
    if (lhs != rhs) return false;
  }
  return true;
}

int cmd_leibniz(const Options& o, Emitter& emit, std::ostream& err) {
  const auto l = json::algebra_from_json(json::read_file(require_input(o)));
  const auto violation = find_fundamental_identity_violation(l);
  Json j;
  j["dimension"] = l.dimension();
  j["arity"] = l.arity();
  j["fundamental_identity"] = !violation.has_value();
  j["witness"] = violation ? witness_json(*violation) : Json(nullptr);
  j["alternating"] = is_alternating(l);
  j["filippov"] = check_filippov(l);
  j["self_derivation"] = check_self_derivation(l);
  if (!o.op.empty()) {
    const auto d = json::operator_from_json(json::read_file(o.op));
    const auto w = find_derivation_violation(l, d);
    Json dj;
    dj["holds"] = !w.has_value();
    dj["witness"] = w ? witness_json(*w) : Json(nullptr);
    j["derivation"] = dj;
  }
  if (o.samples > 0) {
    Json pj;
    pj["samples"] = o.samples;
    pj["seed"] = o.seed;
    pj["holds"] = random_probe(l, o.samples, o.seed);
    j["random_probe"] = pj;
  }
  emit(json::dump(j));
  if (violation) {
    std::string x, y;
    for (auto i : violation->x) x += (x.empty() ? "" : ", ") + std::to_string(i);
    for (auto i : violation->y) y += (y.empty() ? "" : ", ") + std::to_string(i);
    err << "axiom failure: fundamental identity fails at x = (" << x << "), y = (" << y << ")\n";
    return kAxiomFailure;
  }
  return kOk;
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const Options& o, Emitter& emit, std::ostream&) {
  const auto filter = parse_filter(o.filter.empty() ? "nrack" : o.filter);
  const auto report = enumerate_nracks(require(o.n, "--n"), require(o.m, "--m"), filter,
                                       o.budget ? o.budget : kDefaultSearchBudget);
  emit(json::dump(json::to_json(report)));
  return kOk;
}

// ---------------------------------------------------------------- inner

int cmd_inner(const Options& o, Emitter& emit, std::ostream& err) {
  const auto r = read_table(o);
  if (const int code = report_failures(axiom_failures(r), err); code != kOk) return code;
  Json maps = Json::array();
  bool all = true;
  Tuple a(r.arity() - 1, 0);
  do {
    const auto phi = inner_map(r, a);
    const bool ok = check_inner_is_automorphism(r, a).holds;
    all = all && ok;
    Json e;
    e["arguments"] = tuple_json(a);
    e["permutation"] = tuple_json(phi.permutation);
    e["cycle_type"] = cycle_type(phi.permutation);
    e["automorphism"] = ok;
    maps.push_back(std::move(e));
  } while (next_tuple(a, r.size()));
  Json orb = Json::array();
  for (const auto& x : orbits(r)) orb.push_back(tuple_json(x));
  Json j;
  j["inner_maps"] = maps;
  j["all_automorphisms"] = all;
  j["orbits"] = orb;
  emit(json::dump(j));
  if (!all) {
    err << "axiom failure: some inner map is not an automorphism\n";
    return kAxiomFailure;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite n-racks, their homology, and Leibniz n-algebras", "nrack"};
  app.require_subcommand(1);

  auto io = [&](CLI::App* sub) {
    sub->add_option("--input,-i", o.input, "Input JSON file");
    sub->add_option("--output,-o", o.output, "Write the result here instead of standard output");
  };

  auto* check = app.add_subcommand("check", "Validate and classify an operation table");
  io(check);
  check->add_option("--filter", o.filter, "Also require nrack | weak-n-quandle | n-quandle | n-kei");

  auto* construct = app.add_subcommand("construct", "Build a table");
  construct->add_option("kind", o.kind, "z4 | gamma | conj | lift | reduce | module-group")->required();
  io(construct);
  construct->add_option("--n", o.n, "Arity");
  construct->add_option("--m", o.m, "Modulus");
  construct->add_option("--t", o.t, "Unit t of the Gamma module");
  construct->add_option("--s", o.s, "Element s of the Gamma module");
  construct->add_option("--group", o.group, "Group JSON file or a name such as S3, Z4, D4");

  auto* reduce = app.add_subcommand("reduce", "Binary rack on (n-1)-tuples (same as construct reduce)");
  io(reduce);

  for (auto [name, help] : {std::pair{"homology", "Rack, degenerate or quandle homology"},
                            std::pair{"cohomology", "Rack, degenerate or quandle cohomology"}}) {
    auto* h = app.add_subcommand(name, help);
    io(h);
    h->add_option("--variant", o.variant, "R | D | Q");
    h->add_option("--degrees", o.degrees, "Degrees, e.g. 2 or 1-3 or 1,3");
    h->add_option("--coefficients", o.coefficients, "Z or Z/d");
    h->add_option("--budget", o.budget, "Column cap for the top chain group");
    h->add_option("--export", o.export_dir, "Directory for boundary matrices as triplet text");
  }

  auto* assoc = app.add_subcommand("assoc-group", "Presentation and abelianization of the associated group");
  io(assoc);
  assoc->add_flag("--paper-relator", o.literal_relator, "Use the literal relator form");

  auto* leib = app.add_subcommand("leibniz", "Check a structure-constant tensor");
  io(leib);
  leib->add_option("--operator", o.op, "Operator JSON to test as a derivation");
  leib->add_option("--samples", o.samples, "Random rational argument lists to probe");
  leib->add_option("--seed", o.seed, "Seed for --samples");

  auto* enumerate = app.add_subcommand("enumerate", "All tables of a given arity and size up to isomorphism");
  io(enumerate);
  enumerate->add_option("--n", o.n, "Arity");
  enumerate->add_option("--m", o.m, "Size");
  enumerate->add_option("--filter", o.filter, "nrack | weak-n-quandle | n-quandle | n-kei");
  enumerate->add_option("--budget", o.budget, "Search node cap");

  auto* inner = app.add_subcommand("inner", "Inner maps and orbits");
  io(inner);

  std::vector<const char*> argv{"nrack"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_, e_;
    const int code = app.exit(e, o_, e_);
    out << o_.str();
    err << e_.str();
    return code == 0 ? kOk : kInputError;
  }

  Emitter emit(o, out);
  try {
    if (*check) return cmd_check(o, emit, err);
    if (*construct) return cmd_construct(o, emit, err);
    if (*reduce) {
      o.kind = "reduce";
      return cmd_construct(o, emit, err);
    }
    if (app.got_subcommand("homology")) return cmd_homology(o, false, emit, err);
    if (app.got_subcommand("cohomology")) return cmd_homology(o, true, emit, err);
    if (*assoc) return cmd_assoc_group(o, emit, err);
    if (*leib) return cmd_leibniz(o, emit, err);
    if (*enumerate) return cmd_enumerate(o, emit, err);
    if (*inner) return cmd_inner(o, emit, err);
  } catch (const InvalidArgument& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const AxiomViolation& e) {
    err << "axiom failure: " << e.what() << "\n";
    return kAxiomFailure;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << " (requested " << e.requested() << ", cap " << e.cap() << ")\n";
    return kBudget;
  }
  return kInputError;
}

}  // namespace nrack::cli
