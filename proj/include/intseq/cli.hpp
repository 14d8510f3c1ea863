#pragma once

// Command-line front end. run() takes the arguments after the program name
// and returns the exit status: 0 success, 1 check failure or cap exceeded,
// 2 invalid input.

#include "intseq/checks.hpp"
#include "intseq/graph_io.hpp"
#include "intseq/seqcrystal.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace intseq::cli {

enum ExitCode { ok = 0, failure = 1, invalid_input = 2 };

struct Options {
  std::string family;
  int rank = 0;
  std::string weight;
  std::string seed;
  std::string out;
  std::string format;
  std::size_t cap = default_vertex_cap;
  bool axioms = false, membership = false, monomial = false, tensor = false, dim = false, all = false;
};

class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// "m1,...,mn" with exactly rank entries.
inline Weight parse_weight(const AlgebraSpec &spec, const std::string &text) {
  std::vector<int> coeffs;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (token.empty() || used != token.size()) throw InputError("invalid weight entry '" + token + "'");
    coeffs.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (coeffs.size() != static_cast<std::size_t>(spec.rank))
    throw InputError("weight '" + text + "' has " + std::to_string(coeffs.size()) + " entries, rank is " +
                     std::to_string(spec.rank));
  return Weight(std::move(coeffs));
}

namespace detail {

inline AlgebraSpec make_spec(const Options &o) {
  try {
    return AlgebraSpec(parse_family(o.family), o.rank);
  } catch (const std::invalid_argument &e) {
    throw InputError(e.what());
  }
}

inline Weight dominant_weight(const AlgebraSpec &spec, const Options &o) {
  if (o.weight.empty()) throw InputError("--weight is required");
  Weight w = parse_weight(spec, o.weight);
  if (!w.is_dominant()) throw InputError("weight '" + o.weight + "' is not dominant");
  return w;
}

inline SeqElement seed_element(const AlgebraSpec &spec, const Options &o) {
  if (!o.seed.empty()) {
    try {
      return parse_element(spec, o.seed);
    } catch (const ParseError &e) {
      throw InputError(e.what());
    }
  }
  return highest_element(spec, dominant_weight(spec, o));
}

inline void emit(const Options &o, const std::string &text, std::ostream &out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw InputError("cannot open '" + o.out + "' for writing");
  file << text;
}

inline int do_generate(const Options &o, std::ostream &out) {
  const AlgebraSpec spec = make_spec(o);
  const std::string format = o.format.empty() ? "json" : o.format;
  if (format != "json" && format != "dot") throw InputError("unknown format '" + format + "' (expected json or dot)");
  const auto comp = generate_component(SeqCrystal(spec), seed_element(spec, o), o.cap);
  emit(o, format == "json" ? export_json(comp.graph) : export_dot(comp.graph), out);
  return ok;
}

inline int do_character(const Options &o, std::ostream &out) {
  const AlgebraSpec spec = make_spec(o);
  const auto comp = generate_component(SeqCrystal(spec), seed_element(spec, o), o.cap);
  emit(o, format_character(character(comp.graph)) + "\n", out);
  return ok;
}

inline int do_check(const Options &o, std::ostream &out) {
  const AlgebraSpec spec = make_spec(o);
  const std::string format = o.format.empty() ? "text" : o.format;
  if (format != "text" && format != "json") throw InputError("unknown format '" + format + "' (expected text or json)");
  const Weight lambda = dominant_weight(spec, o);
  std::vector<Suite> suites;
  const bool any = o.axioms || o.membership || o.monomial || o.tensor || o.dim;
  if (o.all || !any) {
    suites = all_suites();
  } else {
    if (o.axioms) suites.push_back(Suite::Axioms);
    if (o.dim) suites.push_back(Suite::Dim);
    if (o.membership) suites.push_back(Suite::Membership);
    if (o.monomial) suites.push_back(Suite::Monomial);
    if (o.tensor) suites.push_back(Suite::Tensor);
  }
  const CheckReport report = run_checks(spec, lambda, suites, o.cap);
  emit(o, format == "json" ? report.json().dump(2) + "\n" : report.text(), out);
  return report.passed() ? ok : failure;
}

inline int do_export_formats(std::ostream &out) {
  out << "graph formats (generate --format):\n"
         "  json  {version, algebra:{family, rank}, vertices:[{id, element, weight, eps, phi}], edges:[{from, to, "
         "color}], highest:[ids]}\n"
         "  dot   digraph with one edge per f-edge, label=\"<color>\"\n"
         "report formats (check --format):\n"
         "  text, json\n"
         "element grammar:\n"
         "  element := comp (\",\" comp)*\n"
         "  comp    := \"0\" | \"E\" int | int \":\" (\"(\" letter \",\" letter \")\")+\n"
         "  letter  := int | \"-\" int        (barred letters are negative)\n"
         "monomial grammar:\n"
         "  \"1\" | factor (\" \" factor)*,  factor := \"Y\" int \"(\" int \")\" [\"^\" int]\n";
  return ok;
}

inline void add_algebra_options(CLI::App *cmd, Options &o, bool with_seed) {
  cmd->add_option("--family", o.family, "Lie type, A or C")->required();
  cmd->add_option("--rank", o.rank, "rank n")->required();
  cmd->add_option("--weight", o.weight, "dominant weight m1,...,mn");
  if (with_seed) cmd->add_option("--seed", o.seed, "seed element, overrides --weight");
  cmd->add_option("--out", o.out, "output path (default stdout)");
  cmd->add_option("--cap", o.cap, "vertex cap for generation")->check(CLI::PositiveNumber);
}

} // namespace detail

inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Crystals of tuples of integer sequences for types A and C", "intseq"};
  app.require_subcommand(1, 1);

  auto *generate = app.add_subcommand("generate", "generate a connected component and export its graph");
  detail::add_algebra_options(generate, o, true);
  generate->add_option("--format", o.format, "json (default) or dot");

  auto *character = app.add_subcommand("character", "print the weight multiset of a component");
  detail::add_algebra_options(character, o, true);

  auto *check = app.add_subcommand("check", "run cross-check suites on R(lambda)");
  detail::add_algebra_options(check, o, false);
  check->add_option("--format", o.format, "text (default) or json");
  check->add_flag("--axioms", o.axioms, "crystal axioms");
  check->add_flag("--membership", o.membership, "explicit description equals the component");
  check->add_flag("--monomial", o.monomial, "agreement with the monomial crystal");
  check->add_flag("--tensor", o.tensor, "eta and split are strict embeddings");
  check->add_flag("--dim", o.dim, "size equals the Weyl dimension");
  check->add_flag("--all", o.all, "every suite (default)");

  auto *formats = app.add_subcommand("export-formats", "list export formats and text grammars");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return invalid_input;
  }

  try {
    if (generate->parsed()) return detail::do_generate(o, out);
    if (character->parsed()) return detail::do_character(o, out);
    if (check->parsed()) return detail::do_check(o, out);
    if (formats->parsed()) return detail::do_export_formats(out);
  } catch (const InputError &e) {
    err << "error: " << e.what() << "\n";
    return invalid_input;
  } catch (const CapExceeded &e) {
    err << "error: " << e.what() << "\n";
    return failure;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return invalid_input;
  }
  return invalid_input;
}

} // namespace intseq::cli
