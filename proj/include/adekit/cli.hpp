#pragma once

// adekit <subcommand> <input> [--json|--text] [--bound r] [--orientation b|c]
//        [--seed n] [--kissing] [--csv]

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "adekit/report.hpp"

namespace adekit::cli {

struct Options {
  std::string subcommand;
  std::string input;
  bool text = false;
  std::optional<std::string> bound;
  std::optional<std::string> orientation;
  std::optional<unsigned> seed;
  bool kissing = false;
  bool csv = false;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

inline bool is_builtin(const std::string& s) {
  static const std::regex named(
      R"((A|B|C|BC|D|E|F|G|H|Z)\d+|I2\(\d+\)|2T|2O|2I|24-cell|600-cell|120-cell)");
  return std::regex_match(s, named);
}

/// Builtin names first, then a readable file, then the text itself.
inline std::string resolve(const std::string& input) {
  if (is_builtin(input)) return input;
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream f(input);
    std::stringstream buf;
    buf << f.rdbuf();
    return trim(buf.str());
  }
  return trim(input);
}

inline DynkinDiagram choose_orientation(const CoxeterDiagram& c, char orientation) {
  if (!is_crystallographic(c)) throw InputError(render(c) + " is not crystallographic");
  const Family avoid = orientation == 'c' ? Family::B : Family::C;
  for (const auto& d : dynkin_orientations(c)) {
    const auto types = classify(d);
    if (!types) throw InputError(render(c) + " is not of finite type");
    if (std::none_of(types->begin(), types->end(), [&](const DiagramType& t) { return t.family == avoid; })) return d;
  }
  return dynkin_orientations(c).front();
}

/// Crystallographic view of a parsed diagram; Coxeter input is oriented.
inline DynkinDiagram as_dynkin(const Diagram& d, char orientation) {
  if (const auto* dyn = std::get_if<DynkinDiagram>(&d)) return *dyn;
  return choose_orientation(std::get<CoxeterDiagram>(d), orientation);
}

inline std::optional<int> bracketed_int(const std::string& s, const std::string& head) {
  if (s.rfind(head + "(", 0) != 0 || s.back() != ')') return std::nullopt;
  const std::string digits = s.substr(head.size() + 1, s.size() - head.size() - 2);
  if (digits.empty() || digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    throw ParseError("expected an integer", head.size() + 1);
  return std::stoi(digits);
}

inline RatMatrix parse_gram(const std::string& s) {
  Json j;
  try {
    j = Json::parse(s);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed Gram matrix JSON: ") + e.what(), e.byte);
  }
  if (!j.is_array() || j.empty()) throw InputError("Gram matrix must be a non-empty array of rows");
  const std::size_t n = j.size();
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw InputError("Gram matrix must be square");
    for (std::size_t k = 0; k < n; ++k) {
      const auto& v = j[i][k];
      if (v.is_number_integer()) g(i, k) = Rational(v.get<long long>());
      else if (v.is_string()) g(i, k) = parse_rational(v.get<std::string>());
      else throw InputError("Gram entries must be integers or \"p/q\" strings");
    }
  }
  return g;
}

/// Zn, glue(n), slice(E7|E6), coordinate(X), a JSON Gram matrix, or a
/// diagram (its root lattice).
inline Lattice resolve_lattice(const std::string& s, char orientation) {
  static const std::regex integer_lattice_name(R"(Z(\d{1,3}))");
  std::smatch m;
  if (std::regex_match(s, m, integer_lattice_name)) return integer_lattice(std::stoi(m[1]));
  if (const auto n = bracketed_int(s, "glue")) return glue(*n);
  if (s == "slice(E7)" || s == "slice(E6)")
    return orthogonal_slice(coordinate_model(DiagramType{Family::E, 8}), s == "slice(E7)" ? SliceKind::E7 : SliceKind::E6);
  if (s.rfind("coordinate(", 0) == 0 && s.back() == ')') {
    const auto types = std::visit([](const auto& x) { return classify(x); }, parse_diagram(s.substr(11, s.size() - 12)));
    if (!types || types->size() != 1) throw InputError("coordinate models need a single finite type");
    return coordinate_model(types->front());
  }
  if (!s.empty() && s.front() == '[') return Lattice(parse_gram(s));
  return root_lattice(as_dynkin(parse_diagram(s), orientation));
}

inline void print(std::ostream& out, const Json& j, bool text) {
  if (!text) {
    out << j.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

inline void reject(bool present, const std::string& flag, const std::string& sub) {
  if (present) throw InputError(flag + " does not apply to '" + sub + "'");
}

inline void execute(const Options& o, std::ostream& out) {
  const std::string input = resolve(o.input);
  const char orientation = o.orientation ? (*o.orientation)[0] : 'b';
  const bool orients = o.subcommand == "roots" || o.subcommand == "weyl" || o.subcommand == "lattice" || o.subcommand == "witt";
  reject(o.orientation && !orients, "--orientation", o.subcommand);
  reject(o.bound.has_value() && o.subcommand != "lattice", "--bound", o.subcommand);
  reject(o.kissing && o.subcommand != "lattice", "--kissing", o.subcommand);
  reject(o.seed.has_value() && o.subcommand != "mckay", "--seed", o.subcommand);
  reject(o.csv && o.subcommand != "polytope", "--csv", o.subcommand);

  if (o.subcommand == "classify") {
    print(out, classify_json(parse_diagram(input)), o.text);
  } else if (o.subcommand == "roots") {
    const Diagram d = parse_diagram(input);
    const auto* c = std::get_if<CoxeterDiagram>(&d);
    print(out, c && !is_crystallographic(*c) ? root_report_json(*c) : root_report_json(as_dynkin(d, orientation)), o.text);
  } else if (o.subcommand == "weyl") {
    const Diagram d = parse_diagram(input);
    const auto types = std::visit([](const auto& x) { return classify(x); }, d);
    if (!types) throw InputError(input + " is not of finite type");
    const auto* c = std::get_if<CoxeterDiagram>(&d);
    const BigInt order = c && !is_crystallographic(*c) ? weyl_order(*c) : weyl_order(as_dynkin(d, orientation));
    print(out, Json{{"type", json_types(*types)}, {"weyl_order", to_string(order)}}, o.text);
  } else if (o.subcommand == "lattice") {
    if (o.kissing && o.bound) throw InputError("--kissing and --bound are exclusive");
    const Lattice l = resolve_lattice(input, orientation);
    if (o.kissing) print(out, kissing_json(l), o.text);
    else if (o.bound) print(out, shells_json(l, parse_rational(*o.bound)), o.text);
    else print(out, lattice_json(l), o.text);
  } else if (o.subcommand == "witt") {
    print(out, witt_json(witt_decompose(resolve_lattice(input, orientation).gram())), o.text);
  } else if (o.subcommand == "quiver") {
    print(out, quiver_json(parse_quiver(input)), o.text);
  } else if (o.subcommand == "mckay") {
    print(out, mckay_json(mckay_correspondence(parse_group(input), o.seed.value_or(1))), o.text);
  } else if (o.subcommand == "polytope") {
    const Polytope p = named_polytope(input);
    if (o.csv) {
      out << vertices_csv(p);
      return;
    }
    std::optional<std::size_t> cells;
    if (p.name == "600-cell") cells = cells_600(p).size();
    print(out, polytope_json(p, edge_graph(p), cells), o.text);
  }
}

}  // namespace detail

/// Exit codes: 0 success, 2 input error, 1 verification failure.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter/Dynkin diagrams, root systems, lattices, quivers, McKay graphs and polytopes", "adekit"};
  Options o;
  bool json = false;
  app.add_option("subcommand", o.subcommand, "classify | roots | weyl | lattice | witt | quiver | mckay | polytope")
      ->required()
      ->check(CLI::IsMember({"classify", "roots", "weyl", "lattice", "witt", "quiver", "mckay", "polytope"}));
  app.add_option("input", o.input, "DSL string, builtin name or file path")->required();
  auto* json_flag = app.add_flag("--json", json, "JSON output (default)");
  app.add_flag("--text", o.text, "line-oriented text output")->excludes(json_flag);
  app.add_option("--bound", o.bound, "list lattice vectors up to this norm (rational)");
  app.add_option("--orientation", o.orientation, "orientation of B/C components")->check(CLI::IsMember({"b", "c"}));
  app.add_option("--seed", o.seed, "seed for the character table solver");
  app.add_flag("--kissing", o.kissing, "report only kissing number, minimum and determinant");
  app.add_flag("--csv", o.csv, "dump polytope vertices as CSV");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "adekit: " << e.what() << '\n';
    return 2;
  }
  try {
    detail::execute(o, out);
    return 0;
  } catch (const InputError& e) {
    err << "adekit: " << e.what() << '\n';
    return 2;
  } catch (const VerificationError& e) {
    err << "adekit: verification failed: " << e.what() << '\n';
    return 1;
  } catch (const NumericIndeterminacy& e) {
    err << "adekit: " << e.what() << '\n';
    return 1;
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"adekit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace adekit::cli
