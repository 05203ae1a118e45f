#include "nrack/json_io.hpp"

#include <fstream>
#include <sstream>

#include "nrack/error.hpp"

namespace nrack::json {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidArgument("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidArgument(std::string("missing field '") + key + "'");
  return *it;
}

long long integer_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) throw InvalidArgument(std::string("field '") + key + "' must be an integer");
  return v.get<long long>();
}

std::vector<Element> element_array(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_array()) throw InvalidArgument(std::string("field '") + key + "' must be an array");
  std::vector<Element> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number_integer() || x.get<long long>() < 0) {
      throw InvalidArgument(std::string("field '") + key + "' must hold nonnegative integers");
    }
    out.push_back(static_cast<Element>(x.get<long long>()));
  }
  return out;
}

int small_int(long long v, const char* what) {
  if (v < 0 || v > 1'000'000) throw InvalidArgument(std::string(what) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const FiniteNRack& r) {
  Json j;
  j["arity"] = r.arity();
  j["size"] = r.size();
  j["basepoint"] = r.basepoint() ? Json(*r.basepoint()) : Json(nullptr);
  j["table"] = Json(std::vector<Element>(r.table().begin(), r.table().end()));
  return j;
}

FiniteNRack nrack_from_json(const Json& j) {
  const int arity = small_int(integer_field(j, "arity"), "arity");
  const int size = small_int(integer_field(j, "size"), "size");
  std::optional<Element> base;
  if (j.contains("basepoint") && !j.at("basepoint").is_null()) {
    base = static_cast<Element>(small_int(integer_field(j, "basepoint"), "basepoint"));
  }
  return FiniteNRack(arity, size, element_array(j, "table"), base);
}

Json to_json(const FiniteGroup& g) {
  Json j;
  j["size"] = g.size();
  j["cayley"] = Json(std::vector<Element>(g.cayley().begin(), g.cayley().end()));
  j["identity"] = g.identity();
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  return FiniteGroup(small_int(integer_field(j, "size"), "size"), element_array(j, "cayley"),
                     static_cast<Element>(small_int(integer_field(j, "identity"), "identity")));
}

Json to_json(const GroupPresentation& p) {
  Json j;
  j["generators"] = p.generators;
  j["relators"] = Json(p.relators);
  return j;
}

GroupPresentation presentation_from_json(const Json& j) {
  GroupPresentation p;
  p.generators = small_int(integer_field(j, "generators"), "generators");
  const auto& rels = field(j, "relators");
  if (!rels.is_array()) throw InvalidArgument("relators must be an array");
  for (const auto& r : rels) {
    if (!r.is_array()) throw InvalidArgument("each relator must be an array");
    Word w;
    for (const auto& x : r) {
      if (!x.is_number_integer()) throw InvalidArgument("relator letters must be integers");
      w.push_back(x.get<int>());
    }
    p.relators.push_back(std::move(w));
  }
  p.validate();
  return p;
}

Json to_json(const AbelianGroupInvariants& g) {
  Json j;
  j["free_rank"] = g.free_rank;
  Json t = Json::array();
  for (const auto& d : g.torsion) t.push_back(integer_to_json(d));
  j["torsion"] = t;
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["is_nrack"] = c.is_nrack;
  j["is_pointed"] = c.is_pointed ? Json(*c.is_pointed) : Json(nullptr);
  j["is_weak_nquandle"] = c.is_weak_nquandle;
  j["is_nquandle"] = c.is_nquandle;
  j["is_weak_nkei"] = c.is_weak_nkei;
  j["is_nkei"] = c.is_nkei;
  return j;
}

Json to_json(const HomologyResult& h) {
  Json j;
  j["variant"] = std::string(1, variant_code(h.variant));
  j["degree"] = h.degree;
  j["coefficients"] = h.coefficients.to_string();
  const auto g = to_json(h.group);
  j["free_rank"] = g["free_rank"];
  j["torsion"] = g["torsion"];
  return j;
}

Json to_json(const LeibnizNAlgebra& l) {
  Json j;
  j["dimension"] = l.dimension();
  j["arity"] = l.arity();
  Json constants = Json::array();
  Index args(l.arity(), 0);
  const auto d = l.dimension();
  for (;;) {
    const auto v = l.basis_bracket(args);
    for (std::size_t out = 0; out < d; ++out) {
      if (v[out] == 0) continue;
      Json e;
      e["args"] = args;
      e["out"] = out;
      e["value"] = v[out].get_str();
      constants.push_back(std::move(e));
    }
    std::size_t i = args.size();
    while (i-- > 0 && ++args[i] == d) args[i] = 0;
    if (i == static_cast<std::size_t>(-1)) break;
  }
  j["constants"] = constants;
  return j;
}

Rational parse_rational(const std::string& text) {
  const auto valid = !text.empty() && text.find_first_not_of("+-0123456789/") == std::string::npos &&
                     text.find('/') == text.rfind('/');
  if (!valid) throw InvalidArgument("not a rational number: '" + text + "'");
  Rational q;
  if (q.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0) {
    throw InvalidArgument("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw InvalidArgument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

namespace {

Rational rational_value(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  throw InvalidArgument("rational values must be \"p/q\" strings or integers");
}

}  // namespace

LeibnizNAlgebra algebra_from_json(const Json& j) {
  const auto d = static_cast<std::size_t>(small_int(integer_field(j, "dimension"), "dimension"));
  const int arity = small_int(integer_field(j, "arity"), "arity");
  LeibnizNAlgebra l(d, arity);
  const auto& constants = field(j, "constants");
  if (!constants.is_array()) throw InvalidArgument("constants must be an array");
  for (const auto& e : constants) {
    Index args;
    for (const auto& a : field(e, "args")) {
      if (!a.is_number_integer() || a.get<long long>() < 0) throw InvalidArgument("bad basis index");
      args.push_back(a.get<std::size_t>());
    }
    const auto out = integer_field(e, "out");
    if (out < 0) throw InvalidArgument("bad basis index");
    l.set_constant(args, static_cast<std::size_t>(out), rational_value(field(e, "value")));
  }
  return l;
}

Json to_json(const LinearOperator& op) {
  Json j;
  j["dimension"] = op.dimension();
  Json rows = Json::array();
  for (std::size_t i = 0; i < op.dimension(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < op.dimension(); ++k) row.push_back(op(i, k).get_str());
    rows.push_back(std::move(row));
  }
  j["matrix"] = rows;
  return j;
}

LinearOperator operator_from_json(const Json& j) {
  const auto d = static_cast<std::size_t>(small_int(integer_field(j, "dimension"), "dimension"));
  const auto& rows = field(j, "matrix");
  if (!rows.is_array() || rows.size() != d) throw InvalidArgument("matrix must have dimension rows");
  LinearOperator op(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!rows[i].is_array() || rows[i].size() != d) throw InvalidArgument("matrix rows must have dimension entries");
    for (std::size_t k = 0; k < d; ++k) op(i, k) = rational_value(rows[i][k]);
  }
  return op;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(q.get_str());
  return out;
}

Json to_json(const EnumerationReport& report) {
  Json j;
  j["arity"] = report.arity;
  j["size"] = report.size;
  j["filter"] = filter_name(report.filter);
  j["count_total"] = report.count_total;
  j["count_up_to_iso"] = report.count_up_to_iso;
  Json reps = Json::array();
  for (const auto& r : report.representatives) {
    reps.push_back(Json(std::vector<Element>(r.table().begin(), r.table().end())));
  }
  j["representatives"] = reps;
  return j;
}

ModuleGroupData module_group_from_json(const Json& j) {
  return ModuleGroupData{small_int(integer_field(j, "arity"), "arity"), group_from_json(field(j, "h")),
                         element_array(j, "bracket"), group_from_json(field(j, "v")),
                         element_array(j, "action")};
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("invalid JSON in " + path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace nrack::json
