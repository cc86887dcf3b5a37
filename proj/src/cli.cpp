#include "superstar/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "superstar/errors.hpp"
#include "superstar/expression.hpp"
#include "superstar/formal_geometry.hpp"
#include "superstar/invariants.hpp"
#include "superstar/poisson.hpp"
#include "superstar/star_product.hpp"
#include "superstar/weyl_clifford.hpp"

namespace superstar::cli {

using nlohmann::json;

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

int parse_count(const std::string& token, const char* what) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), ::isdigit) || token.size() > 3) {
    throw CLI::ValidationError(std::string("--sig: bad ") + what + " '" + token + "'");
  }
  return std::stoi(token);
}

}  // namespace

Signature parse_signature(std::string_view sig_text, std::string_view eps_text, int aux) {
  const auto parts = split(sig_text, ',');
  if (parts.size() != 3) throw CLI::ValidationError("--sig expects n,a,b");
  const int n = parse_count(parts[0], "n");
  const int a = parse_count(parts[1], "a");
  const int b = parse_count(parts[2], "b");
  if (eps_text.empty()) return Signature::standard(n, a, b, aux);

  std::vector<int> eps;
  for (const auto& token : split(eps_text, ',')) {
    if (token == "+" || token == "+1" || token == "1") {
      eps.push_back(1);
    } else if (token == "-" || token == "-1") {
      eps.push_back(-1);
    } else {
      throw CLI::ValidationError("--eps: bad sign '" + token + "'");
    }
  }
  Signature sig = Signature::with_epsilons(n, eps, aux);
  if (sig.a != a || sig.b != b) {
    throw CLI::ValidationError("--eps does not match the (a,b) counts of --sig");
  }
  return sig;
}

SuperMatrix parse_matrix_json(std::string_view json_text, const SignaturePtr& sig) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid matrix JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw ParseError("matrix JSON must be an object", 0);

  auto entry = [&](const json& value) {
    if (value.is_number_integer()) {
      return SuperPolynomial::constant(sig, Rational(value.get<long>()));
    }
    if (value.is_string()) return parse_expression(value.get<std::string>(), sig);
    throw ParseError("matrix entries must be integers or expression strings", 0);
  };
  auto block = [&](const char* key) {
    SuperMatrix::Block out;
    if (!doc.contains(key)) return out;
    const auto& rows = doc.at(key);
    if (!rows.is_array()) throw ParseError(std::string("block ") + key + " must be an array", 0);
    for (const auto& row : rows) {
      if (!row.is_array()) throw ParseError(std::string("block ") + key + " rows must be arrays", 0);
      out.emplace_back();
      for (const auto& value : row) out.back().push_back(entry(value));
    }
    // An empty matrix stands for a 0-row block.
    if (out.size() == 1 && out.front().empty()) out.clear();
    return out;
  };
  const auto a = block("A");
  const auto b = block("B");
  const auto c = block("C");
  const auto d = block("D");
  if (a.empty() && sig->even_count() > 0) throw DimensionError("block A is required");
  if (d.empty() && sig->r() > 0) throw DimensionError("block D is required");
  return SuperMatrix::from_blocks(sig, a, b, c, d);
}

namespace {

struct Common {
  std::string sig_text;
  std::string eps_text;
  int aux = 4;
  bool json_output = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--sig", sig_text, "type n,a,b of (2n|a,b)")->required();
    cmd->add_option("--eps", eps_text, "sign layout, e.g. +,-,+ (default: plus signs first)");
    cmd->add_option("--aux", aux, "size of the aux-odd pool x1..xN")->check(CLI::Range(0, 32));
    cmd->add_flag("--json", json_output, "emit a JSON result object");
  }

  SignaturePtr signature() const { return make_signature(parse_signature(sig_text, eps_text, aux)); }
};

json signature_json(const Signature& sig) {
  return json{{"n", sig.n}, {"a", sig.a}, {"b", sig.b}, {"eps", sig.epsilons}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

class Emitter {
 public:
  Emitter(const Common& common, std::ostream& out) : common_(common), out_(out) {}

  void result(const std::string& text, const Signature& sig, unsigned hbar_order,
              bool ok = true, json extra = json::object()) {
    if (!common_.json_output) {
      out_ << text << '\n';
      return;
    }
    json doc{{"ok", ok}, {"result", text}, {"signature", signature_json(sig)},
             {"hbar_order", hbar_order}};
    for (auto& [k, v] : extra.items()) doc[k] = v;
    out_ << doc.dump() << '\n';
  }

  void polynomial(const SuperPolynomial& f) {
    result(format_expression(f), *f.signature(), f.max_hbar());
  }

 private:
  const Common& common_;
  std::ostream& out_;
};

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

SuperPolynomial parse_arg(const std::string& text, const SignaturePtr& sig, std::ostream& err) {
  auto parsed = parse_expression_with_warnings(text, sig);
  print_warnings(parsed.warnings, err);
  return std::move(parsed.value);
}

GeneratorWord parse_word(const std::string& text, const SignaturePtr& sig) {
  GeneratorWord word;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), '*', ' ');
  std::istringstream in(normalized);
  std::string token;
  std::size_t position = 0;
  while (in >> token) {
    if (token == "1") continue;
    const auto expr = parse_syntax(token);
    const auto* var = std::get_if<Expression::Var>(&expr.node);
    if (var == nullptr) throw ParseError("words are sequences of generators", position);
    if (!variable_in_range(*sig, var->var) || var->var.kind == VarKind::kAux) {
      throw ParseError("unknown generator " + token, position);
    }
    word.letters.push_back(var->var);
    position += token.size() + 1;
  }
  return word;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact super-Moyal star products, Poisson brackets and Sp(2n|a,b) checks",
               "superstar"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;
  std::string lhs_text, rhs_text;
  std::optional<int> max_degree;
  std::optional<unsigned> max_hbar;

  auto add_binary = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    common.attach(cmd);
    cmd->add_option("f", lhs_text, "left operand")->required();
    cmd->add_option("g", rhs_text, "right operand")->required();
    return cmd;
  };
  auto* star_cmd = add_binary("star", "star product f * g");
  star_cmd->add_option("--max-degree", max_degree, "drop terms above this total degree");
  star_cmd->add_option("--max-hbar", max_hbar, "drop terms above this hbar power");
  auto* bracket_cmd = add_binary("bracket", "Poisson bracket {f, g}");
  auto* commutator_cmd = add_binary("commutator", "graded star commutator [f, g]");

  std::string word_text;
  bool star_basis = false;
  auto* normal_cmd = app.add_subcommand("normal-order", "normal-order a word in p, q, t");
  common.attach(normal_cmd);
  normal_cmd->add_option("word", word_text, "letters separated by spaces or '*'")->required();
  normal_cmd->add_flag("--star-basis", star_basis,
                       "print the element of the star-product algebra instead of PBW coefficients");

  std::string matrix_path;
  auto* member_cmd = app.add_subcommand("member", "test membership in Sp(2n|a,b)");
  common.attach(member_cmd);
  member_cmd->add_option("matrix", matrix_path, "JSON matrix file")->required();
  bool lie = false;
  member_cmd->add_flag("--lie", lie, "test membership in the Lie superalgebra instead");

  auto* act_cmd = app.add_subcommand("act", "apply a member of Sp(2n|a,b) to f");
  common.attach(act_cmd);
  act_cmd->add_option("matrix", matrix_path, "JSON matrix file")->required();
  act_cmd->add_option("f", lhs_text, "polynomial")->required();

  int jet_order = -1;
  auto* jet_cmd = app.add_subcommand("jet", "Taylor jet f(x + y); fiber variables print as P, Q, T");
  common.attach(jet_cmd);
  jet_cmd->add_option("f", lhs_text, "polynomial")->required();
  jet_cmd->add_option("--order", jet_order, "fiber degree cutoff (default: degree of f)");
  bool jet_defect = false;
  jet_cmd->add_flag("--defect", jet_defect, "print the flatness defect components instead");

  int check_degree = 3, check_cases = 50;
  std::uint64_t check_seed = 1;
  std::string fault_name = "none";
  bool serial = false;
  auto* check_cmd = app.add_subcommand("check", "run the invariant suite on random inputs");
  common.attach(check_cmd);
  check_cmd->add_option("--degree", check_degree, "max total degree of random inputs")
      ->check(CLI::Range(1, 8));
  check_cmd->add_option("--cases", check_cases, "random cases per check")->check(CLI::Range(1, 100000));
  check_cmd->add_option("--seed", check_seed, "random seed");
  check_cmd->add_flag("--serial", serial, "run checks on one thread");
  // Test hook: deliberately break an operation.
  check_cmd->add_option("--inject-fault", fault_name)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  Emitter emit(common, out);
  try {
    const SignaturePtr sig = common.signature();
    auto parse = [&](const std::string& text) { return parse_arg(text, sig, err); };

    if (star_cmd->parsed() || bracket_cmd->parsed() || commutator_cmd->parsed()) {
      const auto f = parse(lhs_text);
      const auto g = parse(rhs_text);
      std::optional<TruncationPolicy> policy;
      if (max_degree || max_hbar) policy = TruncationPolicy{max_degree, max_hbar};
      StarContext ctx(sig, policy);
      if (star_cmd->parsed()) {
        emit.polynomial(star(ctx, f, g));
      } else if (bracket_cmd->parsed()) {
        emit.polynomial(poisson_bracket(ctx.poisson, f, g));
      } else {
        emit.polynomial(star_commutator(ctx, f, g));
      }
      return kSuccess;
    }
    if (normal_cmd->parsed()) {
      const auto nf = normal_order(sig, parse_word(word_text, sig));
      emit.polynomial(star_basis ? to_star_basis(nf) : nf.pbw);
      return kSuccess;
    }
    if (member_cmd->parsed() || act_cmd->parsed()) {
      const auto matrix = parse_matrix_json(read_file(matrix_path), sig);
      PoissonContext ctx(sig);
      if (member_cmd->parsed()) {
        const bool member = lie ? is_sp_lie_member(ctx, matrix) : is_sp_member(ctx, matrix);
        emit.result(member ? "true" : "false", *sig, 0);
        return kSuccess;
      }
      emit.polynomial(act(StarContext(sig), matrix, parse(lhs_text)));
      return kSuccess;
    }
    if (jet_cmd->parsed()) {
      const auto f = parse(lhs_text);
      const auto jet = taylor_jet(f, jet_order < 0 ? f.max_degree() : jet_order);
      const auto& base = *sig;
      VariableNamer namer = [&base](const Variable& v) {
        switch (v.kind) {
          case VarKind::kP:
            return v.index > base.n ? "P" + std::to_string(v.index - base.n) : variable_name(v);
          case VarKind::kQ:
            return v.index > base.n ? "Q" + std::to_string(v.index - base.n) : variable_name(v);
          case VarKind::kTheta:
            return v.index > base.r() ? "T" + std::to_string(v.index - base.r()) : variable_name(v);
          case VarKind::kAux:
            break;
        }
        return variable_name(v);
      };
      if (!jet_defect) {
        emit.result(format_expression(jet.poly, namer), base, jet.poly.max_hbar());
        return kSuccess;
      }
      const auto defect = jet_flatness_defect(jet);
      const auto vars = generators(base);
      std::string text;
      json components = json::object();
      bool flat = true;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        const auto shown = format_expression(defect[i].poly, namer);
        flat = flat && defect[i].poly.is_zero();
        text += (i ? "\n" : "") + variable_name(vars[i]) + ": " + shown;
        components[variable_name(vars[i])] = shown;
      }
      emit.result(text, base, 0, true, json{{"flat", flat}, {"components", components}});
      return kSuccess;
    }
    if (check_cmd->parsed()) {
      const auto fault = parse_fault(fault_name);
      if (!fault) throw CLI::ValidationError("unknown fault '" + fault_name + "'");
      SuiteConfig config{*sig, check_degree, check_cases, check_seed, *fault, !serial};
      const auto report = run_invariant_suite(config);
      if (common.json_output) {
        json checks = json::array();
        for (const auto& o : report.outcomes) {
          checks.push_back({{"name", o.name}, {"passed", o.passed}, {"cases", o.cases},
                            {"detail", o.detail}});
        }
        std::string summary = report.to_text();
        summary = summary.substr(summary.rfind('\n', summary.size() - 2) + 1);
        summary.pop_back();
        emit.result(summary, *sig, 0, report.ok(), json{{"checks", checks}});
      } else {
        out << report.to_text();
      }
      return report.ok() ? kSuccess : kInvariantFailure;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const MathError& e) {
    err << "math error: " << e.what() << '\n';
    return kMathError;
  }
  return kUsageError;
}

CommandResult run_command(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace superstar::cli
