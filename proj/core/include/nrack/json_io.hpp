#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

#include "nrack/constructions.hpp"
#include "nrack/enumerate.hpp"
#include "nrack/group.hpp"
#include "nrack/homology.hpp"
#include "nrack/leibniz.hpp"
#include "nrack/nrack.hpp"
#include "nrack/presentation.hpp"
#include "nrack/smith.hpp"

// Interchange formats. Every reader throws InvalidArgument on malformed input;
// every writer emits keys in a fixed order so output is byte-stable.
namespace nrack::json {

using Json = nlohmann::ordered_json;

/// {"arity": n, "size": m, "basepoint": b|null, "table": [...]} with
/// table index x_1*m^(n-1) + ... + x_n.
Json to_json(const FiniteNRack& r);
FiniteNRack nrack_from_json(const Json& j);

/// {"size": k, "cayley": [...], "identity": e}
Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

/// {"generators": g, "relators": [[signed ints]]}
Json to_json(const GroupPresentation& p);
GroupPresentation presentation_from_json(const Json& j);

/// {"free_rank": r, "torsion": [d1, ...]}
Json to_json(const AbelianGroupInvariants& g);

Json to_json(const Classification& c);

/// {"variant": "R"|"D"|"Q", "degree": k, "coefficients": "Z"|"Z/d", "free_rank": r, "torsion": [...]}
Json to_json(const HomologyResult& h);

/// {"dimension": d, "arity": n, "constants": [{"args": [...], "out": j, "value": "p/q"}]},
/// sparse, 0-based indices, omitted entries are zero.
Json to_json(const LeibnizNAlgebra& l);
LeibnizNAlgebra algebra_from_json(const Json& j);

/// {"dimension": d, "matrix": [[row 0 entries], ...]}, entries as rational strings;
/// column j is the image of e_j.
Json to_json(const LinearOperator& op);
LinearOperator operator_from_json(const Json& j);

Json to_json(const Vector& v);

Json to_json(const EnumerationReport& report);

/// {"arity": n, "h": group, "bracket": [...], "v": group, "action": [...]}
ModuleGroupData module_group_from_json(const Json& j);

Json integer_to_json(const Integer& x);
Rational parse_rational(const std::string& text);

Json read_file(const std::filesystem::path& path);
/// Pretty-printed with two-space indent and a trailing newline.
std::string dump(const Json& j);

}  // namespace nrack::json
