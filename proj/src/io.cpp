#include "mspace/io.hpp"

#include <algorithm>
#include <sstream>

namespace mspace {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::parse_error, what); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) bad(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::string core_label(const SigmaAlgebra& space, Subset s) {
  auto labels = space.ground().labels_of(s);
  std::sort(labels.begin(), labels.end());
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
  return out + "}";
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// Hasse diagram over cores, where node i lies below node j when
/// `below(core_i, core_j)` and no other core sits strictly between.
std::string hasse_dot(const std::string& name, const SpacePtr& space,
                      const std::vector<Subset>& cores, auto below) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < cores.size(); ++i) {
    os << "  n" << i << " [label=" << quoted(core_label(*space, cores[i])) << "];\n";
  }
  for (std::size_t i = 0; i < cores.size(); ++i) {
    for (std::size_t j = 0; j < cores.size(); ++j) {
      if (i == j || !below(cores[i], cores[j])) continue;
      bool covered = true;
      for (std::size_t k = 0; k < cores.size() && covered; ++k) {
        if (k != i && k != j && below(cores[i], cores[k]) && below(cores[k], cores[j])) covered = false;
      }
      if (covered) os << "  n" << i << " -> n" << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

SpacePtr parse_space(const Json& doc) {
  auto points = string_list(field(doc, "points"), "points");
  std::vector<std::vector<std::string>> gens;
  if (doc.contains("generators")) {
    const auto& g = doc.at("generators");
    if (!g.is_array()) bad("generators must be an array of label arrays");
    for (const auto& e : g) gens.push_back(string_list(e, "generator"));
  }
  return SigmaAlgebra::generate(std::move(points), gens);
}

namespace {

std::vector<std::string> sorted_labels(const SigmaAlgebra& space, Subset s) {
  auto labels = space.ground().labels_of(s);
  std::sort(labels.begin(), labels.end());
  return labels;
}

OrderedJson space_object(const SigmaAlgebra& space) {
  OrderedJson doc;
  doc["points"] = space.ground().labels();
  OrderedJson gens = OrderedJson::array();
  for (auto g : space.generators()) gens.push_back(sorted_labels(space, g));
  doc["generators"] = gens;
  return doc;
}

}  // namespace

std::string space_file(const SigmaAlgebra& space) { return space_object(space).dump(2) + "\n"; }

std::string gen_report(const SigmaAlgebra& space) {
  OrderedJson doc = space_object(space);
  OrderedJson members = OrderedJson::array();
  for (auto m : space.members()) members.push_back(sorted_labels(space, m));
  OrderedJson atoms = OrderedJson::array();
  for (auto a : space.atoms()) atoms.push_back(sorted_labels(space, a));
  doc["members"] = members;
  doc["atoms"] = atoms;
  doc["separating"] = space.separating();
  return doc.dump(2) + "\n";
}

Json subset_json(const SigmaAlgebra& space, Subset s) { return sorted_labels(space, s); }

Subset parse_subset(const SigmaAlgebra& space, const Json& labels) {
  const auto list = string_list(labels, "subset");
  return space.ground().subset_of(list);
}

Fn parse_function(const SpacePtr& space, const Json& doc) {
  const auto& values = field(doc, "values");
  if (!values.is_object()) bad("values must be an object keyed by atom index");
  Fn::Values v = Fn::Values::Constant(static_cast<Eigen::Index>(space->atom_count()), Rational(0));
  for (const auto& [key, value] : values.items()) {
    std::size_t atom = 0;
    try {
      std::size_t used = 0;
      atom = std::stoul(key, &used);
      if (used != key.size()) bad("atom index \"" + key + "\" is not a number");
    } catch (const std::logic_error&) {
      bad("atom index \"" + key + "\" is not a number");
    }
    if (atom >= space->atom_count()) bad("atom index " + key + " out of range");
    if (value.is_string()) {
      v[static_cast<Eigen::Index>(atom)] = parse_rational(value.get<std::string>());
    } else if (value.is_number_integer()) {
      v[static_cast<Eigen::Index>(atom)] = Rational(CheckedInt(value.get<std::int64_t>()));
    } else {
      bad("function values must be rational strings");
    }
  }
  return Fn(space, std::move(v));
}

Json function_json(const Fn& f) {
  Json values = Json::object();
  for (std::size_t a = 0; a < f.size(); ++a) values[std::to_string(a)] = to_string(f[a]);
  return Json{{"values", values}};
}

std::string format_fn(const Fn& f) {
  std::string out = "(";
  for (std::size_t a = 0; a < f.size(); ++a) out += (a ? ", " : "") + to_string(f[a]);
  return out + ")";
}

std::string format_pair(const FnPair& p) {
  return "[" + format_fn(p.first) + ", " + format_fn(p.second) + "]";
}

IdealCore parse_ideal(const SpacePtr& space, const Json& doc) {
  const auto& side = field(doc, "side");
  Side s;
  if (side == "ring") {
    s = Side::ring;
  } else if (side == "semiring") {
    s = Side::semiring;
  } else {
    bad("side must be \"ring\" or \"semiring\"");
  }
  return IdealCore(space, parse_subset(*space, field(doc, "core")), s);
}

Json ideal_json(const IdealCore& ideal) {
  return Json{{"side", std::string(side_name(ideal.side()))},
              {"core", subset_json(*ideal.space(), ideal.core())}};
}

ZFilter parse_filter(const SpacePtr& space, const Json& doc) {
  return ZFilter(space, parse_subset(*space, field(doc, "core")));
}

Json filter_json(const ZFilter& filter) {
  return Json{{"core", subset_json(*filter.space(), filter.core())}};
}

Congruence parse_congruence(const SpacePtr& space, const Json& doc) {
  const auto& kind = field(doc, "kind");
  if (kind == "diagonal") return Congruence::diagonal(space);
  if (kind == "universal") return Congruence::universal(space);
  if (kind == "collapseNonzero") return Congruence::collapse_nonzero(space);
  if (kind == "fromFilter") return Congruence::from_filter(parse_filter(space, doc));
  bad("unknown congruence kind");
}

Json congruence_json(const Congruence& rho) {
  Json doc{{"kind", std::string(kind_name(rho.kind()))}};
  if (rho.kind() == CongruenceKind::from_filter) {
    doc["core"] = subset_json(*rho.space(), rho.filter_core());
  }
  return doc;
}

std::string ideal_lattice_dot(const SpacePtr& space, Side side) {
  std::vector<Subset> cores;
  for (const auto& ideal : enumerate_ideals(space, side)) cores.push_back(ideal.core());
  // I ⊆ J exactly when J's core lies inside I's.
  return hasse_dot("ideals", space, cores, [](Subset i, Subset j) {
    return i != j && j.is_subset_of(i);
  });
}

std::string filter_lattice_dot(const SpacePtr& space) {
  std::vector<Subset> cores;
  for (const auto& f : enumerate_filters(space)) cores.push_back(f.core());
  return hasse_dot("filters", space, cores, [](Subset i, Subset j) {
    return i != j && j.is_subset_of(i);
  });
}

Json structure_json(const StructureSpace& s) {
  Json base = Json::array();
  for (const auto& b : s.base()) {
    Json pts = Json::array();
    for (auto i : b.points.indices()) pts.push_back(s.point_label(i));
    base.push_back(pts);
  }
  Json eta_table = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    eta_table.push_back(Json{{"point", s.point_label(i)},
                             {"idealCore", subset_json(*s.space(), eta(s.points()[i]).core())}});
  }
  return Json{{"points", s.size()}, {"baseClosedSets", base}, {"etaTable", eta_table}};
}

std::string structure_dot(const StructureSpace& s) {
  std::ostringstream os;
  os << "graph structure {\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    os << "  p" << i << " [label=" << quoted(s.point_label(i)) << "];\n";
  }
  for (std::size_t k = 0; k < s.base().size(); ++k) {
    const auto& b = s.base()[k];
    os << "  m" << k << " [shape=box, label=" << quoted("m" + format_pair(b.representative))
       << "];\n";
    for (auto i : b.points.indices()) os << "  m" << k << " -- p" << i << ";\n";
  }
  os << "}\n";
  return os.str();
}

Json quotient_report(const Congruence& rho, const FunctionGrid& grid) {
  Json doc{{"core", subset_json(*rho.space(), rho.filter_core())}};
  const bool maximal = is_maximal_congruence(rho);
  doc["maximal"] = maximal;
  if (maximal) {
    const auto real = is_real(rho, grid);
    doc["real"] = Json{{"filterClosed", real.filter_closed},
                       {"phiOnto", real.phi_onto},
                       {"cofinal", real.cofinal}};
    doc["totallyOrdered"] = is_totally_ordered(rho, grid).holds;
  } else {
    doc["real"] = nullptr;
    doc["totallyOrdered"] = nullptr;
  }
  return doc;
}

}  // namespace mspace
