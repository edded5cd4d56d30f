#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qgw/finiteqg.hpp"
#include "qgw/homrep.hpp"
#include "qgw/linss.hpp"
#include "qgw/revaut.hpp"
#include "qgw/term.hpp"

namespace qgw {

using nlohmann::json;

// Cayley format: {"elements": [names...], "mul": [[row-major indices]]}
inline FiniteQuasigroup quasigroup_from_json(const json& j) {
  return validate(j.at("elements").get<std::vector<std::string>>(), j.at("mul").get<Table>());
}

inline json quasigroup_to_json(const FiniteQuasigroup& q) {
  return {{"elements", q.elements}, {"mul", q.mul}};
}

// {"source": cayley, "target": cayley, "f1": [...], "f2": [...], "f3": [...]}
inline Homotopy homotopy_from_json(const json& j) {
  return {quasigroup_from_json(j.at("source")), quasigroup_from_json(j.at("target")),
          j.at("f1").get<std::vector<int>>(), j.at("f2").get<std::vector<int>>(),
          j.at("f3").get<std::vector<int>>()};
}

// {"S1": [...], "S2": [...], "S3": [...], "mul": ..., "rdiv": ..., "ldiv": ...}
inline ReversibleAutomaton automaton_from_json(const json& j) {
  ReversibleAutomaton a;
  a.s1 = j.at("S1").get<std::vector<std::string>>();
  a.s2 = j.at("S2").get<std::vector<std::string>>();
  a.s3 = j.at("S3").get<std::vector<std::string>>();
  a.mul = j.at("mul").get<Table>();
  a.rdiv = j.at("rdiv").get<Table>();
  a.ldiv = j.at("ldiv").get<Table>();
  return validate_automaton(std::move(a));
}

inline json automaton_to_json(const ReversibleAutomaton& a) {
  return {{"S1", a.s1}, {"S2", a.s2}, {"S3", a.s3},
          {"mul", a.mul}, {"rdiv", a.rdiv}, {"ldiv", a.ldiv}};
}

// {"modulus": n, "dim": k, "rho": [[..]], "idempotents": [[[..]],[[..]],[[..]]]}
inline LinSSAlgebra linss_from_json(const json& j) {
  long long n = j.at("modulus").get<long long>();
  auto rho = ModMat::from(n, j.at("rho").get<std::vector<std::vector<long long>>>());
  const auto& ids = j.at("idempotents");
  if (ids.size() != 3) throw ValidationError("expected exactly 3 idempotents");
  std::array<ModMat, 3> a = {
      ModMat::from(n, ids[0].get<std::vector<std::vector<long long>>>()),
      ModMat::from(n, ids[1].get<std::vector<std::vector<long long>>>()),
      ModMat::from(n, ids[2].get<std::vector<std::vector<long long>>>())};
  if (j.contains("dim") && j.at("dim").get<int>() != rho.rows)
    throw ValidationError("dim does not match rho");
  return check_conditions(n, rho, a);
}

// {generator: [[coef, "word"], ...], ...}
inline json representation_to_json(const Representation& rep) {
  json j = json::object();
  for (const auto& [gen, p] : rep.coeff) {
    json terms = json::array();
    for (const auto& [w, c] : p.terms) terms.push_back(json::array({c, word_str(w)}));
    j[gen] = std::move(terms);
  }
  return j;
}

inline json term_to_json(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::leaf: return {{"leaf", t->generator}};
    case Term::Kind::idempotent: return {{"idempotent", true}};
    case Term::Kind::node:
      return {{"op", op_token(t->op)}, {"left", term_to_json(t->left)},
              {"right", term_to_json(t->right)}};
  }
  throw std::logic_error("corrupt term");
}

}  // namespace qgw
