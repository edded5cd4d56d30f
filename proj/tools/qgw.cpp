// Command-line front end: batch queries over quasigroup words, finite
// quasigroups, reversible automata and linear semisymmetrized algebras.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgw/json_io.hpp"
#include "qgw/numeval.hpp"

namespace {

using namespace qgw;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);  // json::exception carries the byte position
}

TermPtr parse_word(const std::string& text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("syntax error: ") + e.what());
  }
}

std::string sexpr(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::leaf: return t->generator;
    case Term::Kind::idempotent: return "@e";
    case Term::Kind::node:
      return "(" + std::string(op_token(t->op)) + " " + sexpr(t->left) + " " +
             sexpr(t->right) + ")";
  }
  return {};
}

std::string rep_one_line(const Representation& rep) {
  std::string out;
  for (const auto& [g, p] : rep.coeff) {
    if (!out.empty()) out += "; ";
    out += g + ": " + p.str();
  }
  return out.empty() ? "0" : out;
}

std::string pattern_kind(PatternKind k) {
  switch (k) {
    case PatternKind::left: return "left";
    case PatternKind::right: return "right";
    case PatternKind::generic: return "generic";
  }
  return {};
}

std::vector<int> parse_index_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"quasigroup word toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string word, word2, file, gword = "1";
  std::string gens_csv, l1_csv, l2_csv, l3_csv, out_prefix;
  std::size_t max_leaves = 0, count = 16;
  unsigned long long cap = 10'000'000;
  bool all_ops = false;

  auto* cmd_parse = app.add_subcommand("parse", "parse a word and dump its tree");
  cmd_parse->add_option("word", word)->required();

  auto* cmd_rep = app.add_subcommand("rep", "homogeneous representation of a word");
  cmd_rep->add_option("word", word)->required();

  auto* cmd_eq = app.add_subcommand("eq", "decide equality of two central-quasigroup words");
  cmd_eq->add_option("word1", word)->required();
  cmd_eq->add_option("word2", word2)->required();

  auto* cmd_elim = app.add_subcommand("eliminate", "generators cancelling out of a word");
  cmd_elim->add_option("word", word)->required();

  auto* cmd_pat = app.add_subcommand("patterns", "argument elimination patterns in a word");
  cmd_pat->add_option("word", word)->required();

  auto* cmd_enum = app.add_subcommand("enumerate", "equality classes of words up to a leaf bound");
  cmd_enum->add_option("--gens", gens_csv, "comma-separated generators")->required();
  cmd_enum->add_option("--max-leaves", max_leaves)->required();
  cmd_enum->add_flag("--all-ops", all_ops, "include opposite operations");
  cmd_enum->add_option("--cap", cap, "raw term budget");

  auto* cmd_plot = app.add_subcommand("plot16", "point cloud of the shortest one-generator words");
  cmd_plot->add_option("--count", count);
  cmd_plot->add_option("--out", out_prefix, "write PREFIX.csv and PREFIX.svg");

  auto* cmd_qg = app.add_subcommand("check-quasigroup", "validate a Cayley table");
  cmd_qg->add_option("file", file)->required();

  auto* cmd_conj = app.add_subcommand("conjugate", "conjugate quasigroup under triality");
  cmd_conj->add_option("file", file)->required();
  cmd_conj->add_option("--g", gword, "word in s, t (e.g. sts); default identity");

  auto* cmd_ss = app.add_subcommand("semisymmetrize", "semisymmetrization on Q^3");
  cmd_ss->add_option("file", file)->required();

  auto* cmd_ht = app.add_subcommand("check-homotopy", "check a triple of maps");
  cmd_ht->add_option("file", file)->required();

  auto* cmd_aut = app.add_subcommand("check-automaton", "validate a reversible automaton");
  cmd_aut->add_option("file", file)->required();

  auto* cmd_a2q = app.add_subcommand("automaton-to-quasigroup",
                                     "extract a quasigroup from a pure automaton");
  cmd_a2q->add_option("file", file)->required();
  cmd_a2q->add_option("--l1", l1_csv, "bijection Q -> S1 as index list");
  cmd_a2q->add_option("--l2", l2_csv, "bijection Q -> S2 as index list");
  cmd_a2q->add_option("--l3", l3_csv, "bijection Q -> S3 as index list");

  auto* cmd_ls = app.add_subcommand("check-linss", "check a linear semisymmetrized algebra");
  cmd_ls->add_option("file", file)->required();

  auto* cmd_lsa = app.add_subcommand("linss-automaton", "reversible automaton of a linss algebra");
  cmd_lsa->add_option("file", file)->required();

  auto* cmd_lsi = app.add_subcommand("linss-identify",
                                     "identify the algebra as a semisymmetrization");
  cmd_lsi->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (cmd_parse->parsed()) {
    TermPtr t = parse_word(word);
    if (as_json)
      emit(term_to_json(t));
    else
      std::cout << sexpr(t) << "\n";
    return 0;
  }

  if (cmd_rep->parsed()) {
    Representation rep = represent(parse_word(word));
    if (as_json)
      emit(representation_to_json(rep));
    else
      std::cout << rep.str();
    return 0;
  }

  if (cmd_eq->parsed()) {
    bool eq = equal(parse_word(word), parse_word(word2));
    if (as_json)
      emit(json{{"equal", eq}});
    else
      std::cout << (eq ? "equal" : "not equal") << "\n";
    return 0;
  }

  if (cmd_elim->parsed()) {
    auto gens = eliminated_arguments(parse_word(word));
    if (as_json) {
      emit(json{{"eliminated", gens}});
    } else {
      for (const auto& g : gens) std::cout << g << "\n";
    }
    return 0;
  }

  if (cmd_pat->parsed()) {
    auto hits = find_elimination_patterns(parse_word(word));
    if (as_json) {
      json out = json::array();
      for (const auto& h : hits)
        out.push_back({{"gen", h.gen}, {"leaves", {h.leaf_a, h.leaf_b}},
                       {"meet", h.meet.empty() ? "root" : h.meet},
                       {"pattern", pattern_kind(h.kind)}, {"i", h.index}});
      emit(out);
    } else {
      for (const auto& h : hits) {
        std::cout << "gen=" << h.gen << " leaves=" << h.leaf_a << "," << h.leaf_b
                  << " meet=" << (h.meet.empty() ? "root" : h.meet)
                  << " pattern=" << pattern_kind(h.kind);
        if (h.kind != PatternKind::generic) std::cout << " i=" << h.index;
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (cmd_enum->parsed()) {
    std::vector<std::string> gens;
    std::stringstream ss(gens_csv);
    std::string g;
    while (std::getline(ss, g, ',')) gens.push_back(g);
    auto classes = enumerate_words(gens, max_leaves, {all_ops, cap});
    if (as_json) {
      json out = json::array();
      for (const auto& c : classes)
        out.push_back({{"word", print(c.term)}, {"leaves", leaf_count(c.term)},
                       {"rep", representation_to_json(c.rep)}});
      emit(out);
    } else {
      for (const auto& c : classes)
        std::cout << print(c.term) << " :: " << rep_one_line(c.rep) << "\n";
    }
    return 0;
  }

  if (cmd_plot->parsed()) {
    PlotData plot = shortest_words_plot(count);
    if (as_json) {
      json rows = json::array();
      for (const auto& r : plot.rows) rows.push_back({{"word", r.word}, {"x", r.x}, {"y", r.y}});
      emit(rows);
    } else {
      std::cout << plot.csv();
    }
    if (!out_prefix.empty()) {
      std::ofstream csv(out_prefix + ".csv");
      csv << plot.csv();
      std::ofstream svg(out_prefix + ".svg");
      svg << plot.svg();
    }
    return 0;
  }

  if (cmd_qg->parsed()) {
    FiniteQuasigroup q = quasigroup_from_json(load_json(file));
    if (as_json)
      emit(json{{"valid", true}, {"order", q.order()}});
    else
      std::cout << "valid quasigroup of order " << q.order() << "\n";
    return 0;
  }

  if (cmd_conj->parsed()) {
    FiniteQuasigroup q = quasigroup_from_json(load_json(file));
    emit(quasigroup_to_json(conjugate(q, S3::parse(gword))));
    return 0;
  }

  if (cmd_ss->parsed()) {
    FiniteQuasigroup q = quasigroup_from_json(load_json(file));
    emit(quasigroup_to_json(semisymmetrize(q)));
    return 0;
  }

  if (cmd_ht->parsed()) {
    Homotopy h = homotopy_from_json(load_json(file));
    bool ht = is_homotopy(h);
    bool hm = is_homomorphism(h);
    if (as_json)
      emit(json{{"homotopy", ht}, {"homomorphism", hm}});
    else
      std::cout << "homotopy: " << (ht ? "yes" : "no") << "\n"
                << "homomorphism: " << (hm ? "yes" : "no") << "\n";
    return ht ? 0 : 1;
  }

  if (cmd_aut->parsed()) {
    ReversibleAutomaton a = automaton_from_json(load_json(file));
    PurityAnalysis p = purity_analysis(a);
    if (as_json)
      emit(json{{"valid", true}, {"sizes", {a.s1.size(), a.s2.size(), a.s3.size()}},
                {"pure", p.pure}});
    else
      std::cout << "valid reversible automaton; state spaces " << a.s1.size() << ","
                << a.s2.size() << "," << a.s3.size() << "; "
                << (p.pure ? "pure" : "degenerate") << "\n";
    return 0;
  }

  if (cmd_a2q->parsed()) {
    ReversibleAutomaton a = automaton_from_json(load_json(file));
    std::vector<int> l1, l2, l3;
    if (l1_csv.empty() && l2_csv.empty() && l3_csv.empty()) {
      PurityAnalysis p = purity_analysis(a);
      if (!p.pure) throw ValidationError("automaton is degenerate; no quasigroup to extract");
      l1 = p.s3_to_s1;  // carrier Q = S3
      l2 = p.s3_to_s2;
      for (std::size_t i = 0; i < a.s3.size(); ++i) l3.push_back(static_cast<int>(i));
    } else {
      if (l1_csv.empty() || l2_csv.empty() || l3_csv.empty())
        throw UsageError("either give all of --l1 --l2 --l3 or none");
      l1 = parse_index_list(l1_csv);
      l2 = parse_index_list(l2_csv);
      l3 = parse_index_list(l3_csv);
    }
    emit(quasigroup_to_json(extract_quasigroup(a, l1, l2, l3, a.s3)));
    return 0;
  }

  if (cmd_ls->parsed()) {
    LinSSAlgebra alg = linss_from_json(load_json(file));
    AxiomReport rep = verify_semisymmetrized_axioms(alg);
    if (as_json) {
      emit(json{{"conditions", true}, {"axioms_ok", rep.ok}, {"lines", rep.lines}});
    } else {
      std::cout << "conditions: ok\n";
      for (const auto& l : rep.lines) std::cout << l << "\n";
    }
    return rep.ok ? 0 : 1;
  }

  if (cmd_lsa->parsed()) {
    LinSSAlgebra alg = linss_from_json(load_json(file));
    emit(automaton_to_json(to_automaton(extract_thetas(alg))));
    return 0;
  }

  if (cmd_lsi->parsed()) {
    LinSSAlgebra alg = linss_from_json(load_json(file));
    IdentifyReport rep = identify_semisymmetrization(alg);
    if (as_json) {
      emit(json{{"ok", rep.ok}, {"lines", rep.lines},
                {"extracted", quasigroup_to_json(rep.extracted)}});
    } else {
      for (const auto& l : rep.lines) std::cout << l << "\n";
    }
    return rep.ok ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
