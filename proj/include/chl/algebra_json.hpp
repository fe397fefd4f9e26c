#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "chl/algebra.hpp"

namespace chl {

inline nlohmann::ordered_json algebra_to_json(const FiniteAlgebra& A, bool with_lattice_tables = false) {
  const AlgebraTables t = A.tables();
  nlohmann::ordered_json j;
  j["size"] = A.size();
  j["names"] = t.names;
  j["leq"] = t.leq;
  j["arrow"] = t.arrow;
  j["zero"] = t.zero;
  j["one"] = t.one;
  if (with_lattice_tables) {
    j["meet"] = *t.meet;
    j["join"] = *t.join;
  }
  return j;
}

inline FiniteAlgebra algebra_from_json(const nlohmann::json& j) {
  try {
    AlgebraTables t;
    const int n = j.at("size").get<int>();
    t.names = j.at("names").get<std::vector<std::string>>();
    t.leq = j.at("leq").get<std::vector<std::vector<int>>>();
    t.arrow = j.at("arrow").get<std::vector<std::vector<Elem>>>();
    t.zero = j.at("zero").get<Elem>();
    t.one = j.at("one").get<Elem>();
    if (j.contains("meet")) t.meet = j["meet"].get<std::vector<std::vector<Elem>>>();
    if (j.contains("join")) t.join = j["join"].get<std::vector<std::vector<Elem>>>();
    if (static_cast<int>(t.leq.size()) != n) throw InvalidAlgebra("size does not match the leq table");
    if (static_cast<int>(t.names.size()) != n) throw InvalidAlgebra("size does not match the names list");
    return validate_algebra(t);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidAlgebra(std::string("malformed algebra JSON: ") + e.what());
  }
}

inline FiniteAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidAlgebra("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidAlgebra("malformed JSON in " + path + ": " + e.what());
  }
  return algebra_from_json(j);
}

/// Human-readable arrow table, rows indexed by the left argument.
inline std::string render_arrow_table(const FiniteAlgebra& A) {
  std::size_t w = 2;
  for (const auto& s : A.names()) w = std::max(w, s.size() + 1);
  auto pad = [w](const std::string& s) { return s + std::string(w - s.size(), ' '); };
  std::ostringstream out;
  out << pad("->") << "|";
  for (Elem b = 0; b < A.size(); ++b) out << " " << pad(A.name(b));
  out << "\n" << std::string(w, '-') << "+" << std::string(A.size() * (w + 1), '-') << "\n";
  for (Elem a = 0; a < A.size(); ++a) {
    out << pad(A.name(a)) << "|";
    for (Elem b = 0; b < A.size(); ++b) out << " " << pad(A.name(A.arrow(a, b)));
    out << "\n";
  }
  return out.str();
}

}  // namespace chl
