#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qcc/errors.hpp"
#include "qcc/render.hpp"
#include "qcc/verify.hpp"

using namespace qcc;

namespace {

struct Output {
  std::string format = "text";
  std::optional<long long> at_q;
};

std::vector<int> parse_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ValidationError("bad " + what + " entry '" + item + "'");
    }
  }
  return out;
}

// 1-based directions in [1, n] to 0-based.
std::vector<int> directions(const std::string& s, int n) {
  auto seq = parse_list(s, "sequence");
  for (int& k : seq) {
    if (k < 1 || k > n) throw ValidationError("direction " + std::to_string(k) + " outside 1.." + std::to_string(n));
    --k;
  }
  return seq;
}

Json seed_source(const std::string& s) {
  if (std::filesystem::exists(s)) return load_json_file(s);
  return Json(s);
}

void emit(const TorusElement& x, const Output& o) {
  if (o.at_q) {
    SpecializedElement s = SpecializedElement::of(x, *o.at_q);
    if (o.format == "json")
      std::cout << Json{{"q0", *o.at_q}, {"value", s.to_string()}}.dump(2) << "\n";
    else
      std::cout << s.to_string() << "\n";
    return;
  }
  if (o.format == "json")
    std::cout << torus_to_json(x).dump(2) << "\n";
  else if (o.format == "latex")
    std::cout << to_latex(x) << "\n";
  else
    std::cout << to_text(x) << "\n";
}

void emit(const SpecializedElement& x, long long q0, const Output& o) {
  if (o.format == "json")
    std::cout << Json{{"q0", q0}, {"value", x.to_string()}}.dump(2) << "\n";
  else
    std::cout << x.to_string() << "\n";
}

std::pair<int, int> parse_field(const std::string& s) {
  auto caret = s.find('^');
  auto p = parse_list(s.substr(0, caret), "field");
  auto m = caret == std::string::npos ? std::vector<int>{1} : parse_list(s.substr(caret + 1), "field");
  if (p.size() != 1 || m.size() != 1 || p[0] < 2 || m[0] < 1) throw ValidationError("field must be p or p^m");
  return {p[0], m[0]};
}

std::string quiver_name_of(const ValuedQuiver& q) {
  for (const char* name : {"A2", "C2", "G2", "Kronecker", "rank4"})
    if (named_quiver(name) == q) return name;
  return "";
}

// Built-in name ("G2:I4", or "I4" with a named quiver) or a representation file.
ValuedRep load_rep(const std::string& spec, const std::string& quiver, int p, int m) {
  if (std::filesystem::exists(spec)) return rep_from_json(load_json_file(spec));
  auto colon = spec.find(':');
  std::string qn = colon == std::string::npos ? quiver : spec.substr(0, colon);
  std::string name = colon == std::string::npos ? spec : spec.substr(colon + 1);
  if (qn.empty()) throw ValidationError("representation '" + spec + "' needs a quiver name (e.g. G2:I4)");
  return build_example_rep(qn, name, p, m);
}

// Shortest reflection sequence whose module has dimension vector dims.
std::vector<int> sequence_for_dims(const ValuedQuiver& q, const ExponentVec& dims) {
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 1; len <= 10; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier)
      for (int k = 0; k < q.n; ++k) {
        if (!s.empty() && s.back() == k) continue;
        auto t = s;
        t.push_back(k);
        next.push_back(t);
        try {
          if (reflected_dims(q, t) == dims) {
            recursion_counts(q, t);
            return t;
          }
        } catch (const NotAdmissible&) {
        }
      }
    frontier = std::move(next);
  }
  throw ValidationError("no reflection sequence of length <= 10 reaches this dimension vector");
}

void add_output_flags(CLI::App* cmd, Output& o) {
  cmd->add_option("--format", o.format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
  cmd->add_option("--at-q", o.at_q, "specialize q to this prime power");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum cluster variables: mutation, Caldero-Chapoton expansions, Grassmannian counts"};
  app.require_subcommand(1);
  Output out;

  auto* mutate = app.add_subcommand("mutate", "cluster variable X_[var; seq] by mutation");
  std::string seed_arg, seq_arg;
  int var = 0;
  mutate->add_option("seed", seed_arg, "seed JSON file or quiver name (A2, C2, G2, Kronecker, rank4)")->required();
  mutate->add_option("--seq", seq_arg, "mutation directions, 1-based, comma separated");
  mutate->add_option("--var", var, "variable index, 1-based")->required();
  add_output_flags(mutate, out);

  auto* cc = app.add_subcommand("cc", "Caldero-Chapoton expansion of a representation");
  std::string rep_arg, field_arg, sequence_arg;
  bool generic = false;
  cc->add_option("seed", seed_arg, "seed JSON file or quiver name")->required();
  cc->add_option("--rep", rep_arg, "built-in representation name or representation file");
  cc->add_option("--sequence", sequence_arg, "reflection sequence k1,..,k(r+1), 1-based");
  cc->add_option("--field", field_arg, "count over GF(p^m), written p or p^m");
  cc->add_flag("--generic", generic, "symbolic counts from the reflection recursion");
  add_output_flags(cc, out);

  auto* gr = app.add_subcommand("gr", "Grassmannian count table of a representation");
  std::string mode = "enum";
  double budget = kDefaultBudget;
  gr->add_option("rep", rep_arg, "built-in name (e.g. Kronecker:P2) or representation file")->required();
  gr->add_option("--mode", mode, "enum, recursion or kronecker")->check(CLI::IsMember({"enum", "recursion", "kronecker"}));
  gr->add_option("--field", field_arg, "field GF(p^m) for enum mode, written p or p^m");
  gr->add_option("--budget", budget, "enumeration budget (candidate tuples)");

  auto* rank2 = app.add_subcommand("rank2", "X_m in the rank-2 algebra with b, c");
  long long b = 1, c = 1, m = 3;
  rank2->add_option("--b", b)->required();
  rank2->add_option("--c", c)->required();
  rank2->add_option("--m", m)->required();
  add_output_flags(rank2, out);

  auto* tpath = app.add_subcommand("tpath", "T-path expansion of a diagonal");
  std::string tri_arg, diag_arg, frozen = "one";
  tpath->add_option("triangulation", tri_arg, "triangulation JSON file or fan:n")->required();
  tpath->add_option("--diag", diag_arg, "polygon vertices a,b (0-based)")->required();
  tpath->add_option("--frozen", frozen, "keep or one")->check(CLI::IsMember({"keep", "one"}));
  add_output_flags(tpath, out);

  auto* roots = app.add_subcommand("roots", "dimension vector -alpha_m of the rank-2 root labeling");
  roots->add_option("--b", b)->required();
  roots->add_option("--c", c)->required();
  roots->add_option("--m", m)->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("--suite", suite, "paper-tables, engines or properties")->required();
  verify->add_option("--budget", budget, "skip checks whose estimated cost exceeds this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*mutate) {
      SeedSpec s = seed_from_json(seed_source(seed_arg));
      auto seq = directions(seq_arg, s.pair.mutable_n);
      if (var < 1 || var > s.pair.B.rows()) throw ValidationError("variable index out of range");
      QuantumSeed qs = mutate_sequence(initial_seed(s.pair), seq);
      emit(qs.vars[var - 1], out);
    } else if (*cc) {
      SeedSpec s = seed_from_json(seed_source(seed_arg));
      const ValuedQuiver& q = s.quiver;
      if (rep_arg.empty() == sequence_arg.empty()) throw ValidationError("give exactly one of --rep and --sequence");
      if (!field_arg.empty() && generic) throw ValidationError("--field and --generic exclude each other");
      if (!field_arg.empty()) {
        if (rep_arg.empty()) throw ValidationError("--field needs --rep");
        auto [p, mm] = parse_field(field_arg);
        ValuedRep v = load_rep(rep_arg, quiver_name_of(q), p, mm);
        if (!(v.quiver == q)) throw ValidationError("representation is not over the given seed");
        CountTable t = enumerate_subreps(v);
        emit(cc_expand_specialized(cc_input(q, t)), t.q0, out);
      } else {
        std::vector<int> seq;
        if (!sequence_arg.empty()) {
          seq = directions(sequence_arg, q.n);
        } else {
          ValuedRep v = load_rep(rep_arg, quiver_name_of(q), 2, 1);
          if (!(v.quiver == q)) throw ValidationError("representation is not over the given seed");
          seq = sequence_for_dims(q, dimension_vector(v));
        }
        emit(cc_expand(cc_input(q, recursion_counts(q, seq))), out);
      }
    } else if (*gr) {
      auto [p, mm] = field_arg.empty() ? std::pair<int, int>{2, 1} : parse_field(field_arg);
      ValuedRep v = load_rep(rep_arg, "", p, mm);
      CountTable t;
      if (mode == "enum") {
        t = enumerate_subreps(v, budget);
      } else if (mode == "recursion") {
        t = polynomial_from_normalized(recursion_counts(v.quiver, sequence_for_dims(v.quiver, dimension_vector(v))),
                                       root_context(v.quiver));
      } else {
        if (!(v.quiver == named_quiver("Kronecker"))) throw ValidationError("kronecker mode needs a Kronecker representation");
        auto d = dimension_vector(v);
        bool is_p = d[1] == d[0] + 1;
        t = kronecker_table(is_p ? KroneckerKind::P : KroneckerKind::I, is_p ? d[0] : d[1]);
        if (t.dims != d) throw ValidationError("not a preprojective or postinjective Kronecker representation");
      }
      std::cout << table_to_json(t).dump(2) << "\n";
    } else if (*rank2) {
      ValuedQuiver q = ValuedQuiver::rank2(b, c);
      if (m == 1 || m == 2) {
        emit(TorusElement::generator(rank2_form(), static_cast<int>(m - 1)), out);
      } else {
        std::vector<int> seq;
        long long steps = m >= 3 ? m - 2 : 1 - m;
        if (steps > 200) throw ValidationError("|m| too large");
        for (long long k = 0; k < steps; ++k) seq.push_back(m >= 3 ? static_cast<int>(k % 2) : static_cast<int>(1 - k % 2));
        emit(variable_by_label(q, seq.back(), seq).with_form(rank2_form()), out);
      }
    } else if (*tpath) {
      Triangulation t;
      if (tri_arg.rfind("fan:", 0) == 0) {
        auto n = parse_list(tri_arg.substr(4), "fan size");
        if (n.size() != 1) throw ValidationError("fan:n needs one integer");
        t = Triangulation::fan(n[0]);
      } else {
        t = triangulation_from_json(load_json_file(tri_arg));
      }
      auto d = parse_list(diag_arg, "diagonal");
      if (d.size() != 2) throw ValidationError("--diag needs two vertices a,b");
      emit(tpath_expand(t, d[0], d[1], frozen == "one" ? Frozen::One : Frozen::Keep), out);
    } else if (*roots) {
      ExponentVec r = rank2_root(b, c, m);
      std::cout << "(" << r[0] << "," << r[1] << ")\n";
    } else if (*verify) {
      Report r = run_checks(suite, suite_checks(suite), budget);
      std::cout << report_to_json(r).dump(2) << "\n";
      return r.all_pass() ? 0 : 1;
    }
  } catch (const NonExactDivision& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (estimate " << e.estimate << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
