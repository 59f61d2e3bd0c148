#pragma once

// JSON and DOT serialization. Subsets serialize as label arrays sorted by
// label; function values are rational strings "p/q".

#include "mspace/filtcong.hpp"
#include "mspace/func.hpp"
#include "mspace/ideal.hpp"
#include "mspace/quotient.hpp"
#include "mspace/space.hpp"
#include "mspace/structure.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace mspace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

/// Parses text as JSON. Throws Error(parse_error).
Json parse_json(std::string_view text);

/// {"points": [...], "generators": [[...], ...]}.
/// Throws Error(parse_error) on a malformed document.
SpacePtr parse_space(const Json& doc);
/// The space file: points and generators, two-space indent, trailing newline.
std::string space_file(const SigmaAlgebra& space);
/// Space file extended with members, atoms and the separating flag.
std::string gen_report(const SigmaAlgebra& space);

Json subset_json(const SigmaAlgebra& space, Subset s);
/// Throws Error(parse_error) or Error(unknown_point).
Subset parse_subset(const SigmaAlgebra& space, const Json& labels);

/// {"values": {"atomIndex": "p/q", ...}}; omitted atoms are 0.
Fn parse_function(const SpacePtr& space, const Json& doc);
Json function_json(const Fn& f);
/// "(v0, v1, ...)" by atom, for diagnostics.
std::string format_fn(const Fn& f);
std::string format_pair(const FnPair& p);

/// {"side": "semiring", "core": [...]}.
IdealCore parse_ideal(const SpacePtr& space, const Json& doc);
Json ideal_json(const IdealCore& ideal);

/// {"core": [...]}.
ZFilter parse_filter(const SpacePtr& space, const Json& doc);
Json filter_json(const ZFilter& filter);

/// {"kind": "fromFilter", "core": [...]} or {"kind": "diagonal"} etc.
Congruence parse_congruence(const SpacePtr& space, const Json& doc);
Json congruence_json(const Congruence& rho);

/// Hasse diagram of the ideal lattice under inclusion.
std::string ideal_lattice_dot(const SpacePtr& space, Side side);
/// Hasse diagram of the filter lattice under inclusion, improper filter included.
std::string filter_lattice_dot(const SpacePtr& space);

/// {"points": n, "baseClosedSets": [[...], ...], "etaTable": [...]}.
Json structure_json(const StructureSpace& s);
/// Points as nodes, each base closed set as a box node joined to its points.
std::string structure_dot(const StructureSpace& s);

/// {"core", "maximal", "real": {...}, "totallyOrdered"}; the last two are
/// null for a non-maximal congruence.
Json quotient_report(const Congruence& rho, const FunctionGrid& grid);

}  // namespace mspace
