#include <CLI11.hpp>
#include <json.hpp>
#include <cctype>
#include <iostream>
#include <string>

#include "csym/expr.hpp"
#include "csym/ops.hpp"
#include "csym/sentence_ops.hpp"
#include "csym/tableaux.hpp"
#include "csym/verifier.hpp"

namespace {

using namespace csym;

PSentence parse_shape(const Alphabet& a, const std::string& text) {
  std::string t = text;
  if (t.empty() || t.front() != '(') t = "(" + t + ")";
  return PSentence(a, Sentence::parse(t));
}

int run_eval(const std::string& alphabet, const std::string& format,
             const std::string& expression) {
  Alphabet a(alphabet);
  Value v = evaluate(a, parse_expression(a, expression));
  std::cout << (format == "json" ? value_json(v) : value_text(v)) << "\n";
  return 0;
}

int run_verify(const VerifierConfig& config, const std::string& format) {
  VerifierReport report = run_verifier(config);
  std::cout << (format == "json" ? report.json_text() : report.text());
  if (format == "json") std::cout << "\n";
  return report.all_pass ? 0 : 1;
}

int run_kostka(const std::string& alphabet, const std::string& format, int size) {
  Alphabet a(alphabet);
  if (size < 0) throw std::invalid_argument("--size must be non-negative");
  KostkaMatrix km = kostka_matrix(a, size);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["order"] = nlohmann::ordered_json::array();
    for (const PSentence& p : km.order) j["order"].push_back(p.text());
    j["rows"] = km.entries;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "order:";
  for (const PSentence& p : km.order) std::cout << " " << p.text();
  std::cout << "\n";
  for (size_t i = 0; i < km.entries.size(); ++i) {
    std::cout << km.order[i].text() << ":";
    for (long v : km.entries[i]) std::cout << " " << v;
    std::cout << "\n";
  }
  return 0;
}

int run_cssyt(const std::string& alphabet, const std::string& format, const std::string& shape,
              int max_entry) {
  Alphabet a(alphabet);
  if (max_entry < 1) throw std::invalid_argument("--max-entry must be at least 1");
  PSentence p = parse_shape(a, shape);
  std::vector<ColoredTableau> all = enumerate_cssyt(a, p, max_entry);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["shape"] = p.text();
    j["max_entry"] = max_entry;
    j["tableaux"] = nlohmann::ordered_json::array();
    for (const ColoredTableau& t : all) {
      nlohmann::ordered_json one;
      one["entries"] = t.entries;
      one["type"] = tableau_type(t).text();
      j["tableaux"].push_back(one);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "shape " << p.text() << ", entries up to " << max_entry << ": " << all.size()
            << " tableaux\n";
  for (const ColoredTableau& t : all) {
    std::cout << " ";
    for (const auto& row : t.entries) {
      std::cout << " [";
      for (size_t c = 0; c < row.size(); ++c) std::cout << (c ? " " : "") << row[c];
      std::cout << "]";
    }
    std::cout << "  type " << tableau_type(t).text() << "\n";
  }
  return 0;
}

int run_schur(const std::string& alphabet, const std::string& format, const std::string& shape,
              bool dual) {
  Alphabet a(alphabet);
  PSentence p = parse_shape(a, shape);
  FormalSum f = dual ? dual_schur_in_m(a, p) : schur_in_h(a, p);
  Value v = f;
  std::cout << (format == "json" ? value_json(v) : value_text(v)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact computer algebra for colored quasisymmetric, noncommutative symmetric,\n"
      "symmetric, and partially commutative symmetric functions"};
  app.require_subcommand(1);

  std::string alphabet = "ab";
  std::string format = "text";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--alphabet", alphabet, "ordered color alphabet")->capture_default_str();
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  std::string expression;
  CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate an expression");
  cmd_eval->add_option("expression", expression, "expression in the basis DSL")->required();
  add_common(cmd_eval);

  VerifierConfig config;
  std::string checks = "all";
  CLI::App* cmd_verify = app.add_subcommand("verify", "run the identity verifier");
  cmd_verify->add_option("--max-degree", config.max_degree, "largest degree enumerated")
      ->capture_default_str();
  cmd_verify->add_option("--checks", checks, "comma-separated check names, or \"all\"")
      ->capture_default_str();
  cmd_verify->add_option("--max-keys", config.max_keys, "resource guard on enumerated keys")
      ->capture_default_str();
  add_common(cmd_verify);

  int size = 0;
  CLI::App* cmd_kostka = app.add_subcommand("kostka", "print a colored Kostka matrix");
  cmd_kostka->add_option("--size", size, "total size of the indexing p-sentences")->required();
  add_common(cmd_kostka);

  std::string shape;
  int max_entry = 1;
  CLI::App* cmd_cssyt = app.add_subcommand("cssyt", "enumerate colored tableaux of a shape");
  cmd_cssyt->add_option("--shape", shape, "p-sentence shape, e.g. \"(abb,ca)\"")->required();
  cmd_cssyt->add_option("--max-entry", max_entry, "largest entry allowed")->required();
  add_common(cmd_cssyt);

  CLI::App* cmd_dual = app.add_subcommand("dual-schur", "dual Schur element in the m basis");
  cmd_dual->add_option("--shape", shape, "p-sentence shape")->required();
  add_common(cmd_dual);

  CLI::App* cmd_schur = app.add_subcommand("schur", "Schur element in the h basis");
  cmd_schur->add_option("--shape", shape, "p-sentence shape")->required();
  add_common(cmd_schur);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_eval) return run_eval(alphabet, format, expression);
    if (*cmd_verify) {
      config.alphabet = alphabet;
      config.checks.clear();
      if (checks != "all") {
        std::string current;
        for (char c : checks + ",") {
          if (c == ',') {
            if (!current.empty()) config.checks.push_back(current);
            current.clear();
          } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current.push_back(c);
          }
        }
      }
      return run_verify(config, format);
    }
    if (*cmd_kostka) return run_kostka(alphabet, format, size);
    if (*cmd_cssyt) return run_cssyt(alphabet, format, shape, max_entry);
    if (*cmd_dual) return run_schur(alphabet, format, shape, true);
    if (*cmd_schur) return run_schur(alphabet, format, shape, false);
  } catch (const csym::parse_error& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
