#pragma once

// The `gelfand` command line. run() never calls exit(), so tests can drive it
// with captured streams.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gelfand/gelfand.hpp"

namespace gelfand::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_resource = 3;

inline constexpr int schema_version = 1;

using nlohmann::json;

struct Options {
  int r = 1;
  int p = 1;
  int q = 1;
  int n = 1;
  std::uint64_t max_order = default_max_group_order;
  unsigned threads = 1;
  bool json_out = false;
  std::string window;
  std::string class_type;
};

inline GroupParams group_of(const Options& o) { return {o.r, o.p, o.q, o.n}; }

/// The model flags name the group whose involutions span the model; the
/// acting group swaps p and q.
inline GroupParams acting_of(const Options& o) { return group_of(o).dual(); }

inline json labels_json(const std::vector<IrreducibleLabel>& ls) {
  json a = json::array();
  for (const auto& l : ls) a.push_back(to_string(l));
  return a;
}

inline std::string join_labels(const std::vector<IrreducibleLabel>& ls) {
  std::string s;
  for (const auto& l : ls) s += (s.empty() ? "" : " ") + to_string(l);
  return s;
}

inline void add_group_flags(CLI::App* app, Options& o, bool with_q = true) {
  app->add_option("--r", o.r, "root-of-unity order r")->required()->check(CLI::PositiveNumber);
  app->add_option("--p", o.p, "color divisor p")->check(CLI::PositiveNumber);
  if (with_q) app->add_option("--q", o.q, "scalar quotient order q")->check(CLI::PositiveNumber);
  app->add_option("--n", o.n, "rank n")->required()->check(CLI::NonNegativeNumber);
}

inline int cmd_group_info(const Options& o, std::ostream& out) {
  const GroupParams g = group_of(o);
  if (!g.involutory()) throw UnsupportedError("character data needs GCD(p,n) in {1,2}");
  const std::size_t classes = quotient_class_count(g);
  const std::size_t irr = character_table(g).size();
  if (o.json_out) {
    out << json{{"schema", schema_version}, {"group", g.to_string()}, {"order", g.order().get_str()},
                {"classes", classes}, {"irreducibles", irr}}
               .dump(2)
        << "\n";
  } else {
    out << "group\t" << g.to_string() << "\norder\t" << g.order().get_str() << "\nclasses\t" << classes
        << "\nirreducibles\t" << irr << "\n";
  }
  return exit_ok;
}

inline int cmd_involutions_list(const Options& o, std::ostream& out) {
  const GroupParams acting = acting_of(o);
  json rows = json::array();
  std::ostringstream tsv;
  tsv << "element\tkind\ttype\tshape\n";
  for (const auto& v : dual_absolute_involutions(acting, o.max_order)) {
    const auto kind = std::string(to_string(symmetry_kind_by_cycles(v.rep())));
    const auto type = to_string(involution_type(v));
    const auto shape = to_string(shape_of(v));
    const auto elem = to_window_string(v.rep());
    rows.push_back({{"element", elem}, {"kind", kind}, {"type", type}, {"shape", shape}});
    tsv << elem << "\t" << kind << "\t" << type << "\t" << shape << "\n";
  }
  if (o.json_out) {
    out << json{{"schema", schema_version}, {"group", group_of(o).to_string()}, {"involutions", rows}}.dump(2) << "\n";
  } else {
    out << tsv.str();
  }
  return exit_ok;
}

inline int cmd_involutions_types(const Options& o, std::ostream& out) {
  const GroupParams acting = acting_of(o);
  json rows = json::array();
  std::ostringstream tsv;
  tsv << "type\tsize\tshapes\n";
  for (const auto& cls : enumerate_involution_classes(acting, o.max_order)) {
    json shapes = json::array();
    std::string joined;
    for (const auto& s : predicted_shapes(cls.type, acting)) {
      shapes.push_back(to_string(s));
      joined += (joined.empty() ? "" : " ") + to_string(s);
    }
    rows.push_back({{"type", to_string(cls.type)}, {"size", cls.members.size()}, {"shapes", shapes}});
    tsv << to_string(cls.type) << "\t" << cls.members.size() << "\t" << joined << "\n";
  }
  if (o.json_out) {
    out << json{{"schema", schema_version}, {"group", group_of(o).to_string()}, {"types", rows}}.dump(2) << "\n";
  } else {
    out << tsv.str();
  }
  return exit_ok;
}

inline int cmd_rs_apply(const Options& o, std::ostream& out) {
  const ColoredPermutation g = parse_window(o.window, o.r);
  const RSPair pq = rs(g);
  json j{{"schema", schema_version},
         {"element", to_window_string(g)},
         {"P", tableau_to_json(pq.P)},
         {"Q", tableau_to_json(pq.Q)},
         {"shape", to_string(pq.P.shape())}};
  if (o.q > 1) {
    const RSPair proj = projective_rs(ProjectiveElement(g, o.q));
    j["projective"] = {{"q", o.q}, {"P", tableau_to_json(proj.P)}, {"Q", tableau_to_json(proj.Q)}};
  }
  out << j.dump(2) << "\n";
  return exit_ok;
}

inline int cmd_classes_list(const Options& o, std::ostream& out) {
  const GroupParams g(o.r, o.p, 1, o.n);
  json rows = json::array();
  std::ostringstream tsv;
  tsv << "label\tsize\tnormal_element\n";
  for (const auto& c : enumerate_classes(o.r, o.p, o.n)) {
    const auto size = class_size(c, g).get_str();
    const auto normal = to_cycle_string(normal_element(c));
    rows.push_back({{"label", to_string(c)}, {"size", size}, {"normal_element", normal}});
    tsv << to_string(c) << "\t" << size << "\t" << normal << "\n";
  }
  if (o.json_out) {
    out << json{{"schema", schema_version}, {"group", g.to_string()}, {"classes", rows}}.dump(2) << "\n";
  } else {
    out << tsv.str();
  }
  return exit_ok;
}

inline int cmd_chartable(const Options& o, std::ostream& out) {
  const GroupParams g = group_of(o);
  const auto table = character_table(g);
  const auto classes = enumerate_classes(g.r, g.p, g.n);
  const GroupParams sub(g.r, g.p, 1, g.n);
  if (o.json_out) {
    json cls = json::array();
    for (const auto& c : classes) cls.push_back({{"label", to_string(c)}, {"size", class_size(c, sub).get_str()}});
    json rows = json::array();
    for (const auto& row : table) {
      json vals = json::array();
      for (const auto& v : row.chi.values) vals.push_back(v.to_string());
      rows.push_back({{"label", to_string(row.label)}, {"values", vals}});
    }
    out << json{{"schema", schema_version}, {"group", g.to_string()}, {"classes", cls}, {"characters", rows}}.dump(2)
        << "\n";
    return exit_ok;
  }
  out << "irreducible";
  for (const auto& c : classes) out << "\t" << to_string(c);
  out << "\nclass_size";
  for (const auto& c : classes) out << "\t" << class_size(c, sub).get_str();
  out << "\n";
  for (const auto& row : table) {
    out << to_string(row.label);
    for (const auto& v : row.chi.values) out << "\t" << v.to_string();
    out << "\n";
  }
  return exit_ok;
}

inline int cmd_model_decompose(const Options& o, std::ostream& out) {
  const GroupParams acting = acting_of(o);
  const ModelBasis basis(acting, o.max_order);
  std::optional<InvolutionClassType> only;
  if (!o.class_type.empty()) only = parse_involution_type(o.class_type, acting.r / acting.p);
  const auto report = verify_class_decomposition(basis, character_table(acting), o.threads, only);
  if (!o.json_out) {
    out << "class_type\tclass_size\tpass\tpredicted\tcomputed\n";
    for (const auto& c : report.classes) {
      out << to_string(c.type) << "\t" << c.class_size << "\t" << (c.pass ? "PASS" : "FAIL") << "\t"
          << join_labels(c.predicted) << "\t" << join_labels(c.computed) << "\n";
    }
    out << "acting_group\t" << acting.to_string() << "\n";
    out << "result\t" << (report.pass() ? "PASS" : "FAIL") << "\n";
    return report.pass() ? exit_ok : exit_fail;
  }
  json classes = json::array();
  for (const auto& c : report.classes) {
    json j{{"class_type", to_string(c.type)},
           {"class_size", c.class_size},
           {"predicted", labels_json(c.predicted)},
           {"computed", labels_json(c.computed)},
           {"pass", c.pass}};
    if (!c.error.empty()) j["error"] = c.error;
    classes.push_back(std::move(j));
  }
  out << json{{"schema", schema_version},
              {"group", group_of(o).to_string()},
              {"acting_group", acting.to_string()},
              {"classes", classes},
              {"pass", report.pass()}}
             .dump(2)
      << "\n";
  return report.pass() ? exit_ok : exit_fail;
}

inline int cmd_model_gelfand_check(const Options& o, std::ostream& out) {
  const GroupParams acting = acting_of(o);
  const ModelBasis basis(acting, o.max_order);
  const auto table = character_table(acting);
  const ClassFunction chi = model_character(basis);
  json rows = json::array();
  bool pass = true;
  for (const auto& row : table) {
    const Cyclotomic m = inner_product(chi, row.chi);
    const bool one = m == Cyclotomic(1);
    pass = pass && one;
    rows.push_back({{"label", to_string(row.label)}, {"multiplicity", m.to_string()}});
  }
  BigInt degree_sum = 0;
  for (const auto& row : table) degree_sum += row.chi.degree().get_num();
  pass = pass && degree_sum == BigInt(static_cast<unsigned long>(basis.size()));
  if (!o.json_out) {
    out << "label\tmultiplicity\n";
    for (const auto& row : rows) out << row["label"].get<std::string>() << "\t" << row["multiplicity"].get<std::string>() << "\n";
    out << "acting_group\t" << acting.to_string() << "\n";
    out << "dimension\t" << basis.size() << "\n";
    out << "degree_sum\t" << degree_sum.get_str() << "\n";
    out << "result\t" << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? exit_ok : exit_fail;
  }
  out << json{{"schema", schema_version},
              {"group", group_of(o).to_string()},
              {"acting_group", acting.to_string()},
              {"dimension", basis.size()},
              {"degree_sum", degree_sum.get_str()},
              {"multiplicities", rows},
              {"pass", pass}}
             .dump(2)
      << "\n";
  return pass ? exit_ok : exit_fail;
}

inline std::uint64_t env_max_order() {
  const char* env = std::getenv("MODEL_MAX_ORDER");
  if (env == nullptr || *env == '\0') return default_max_group_order;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("MODEL_MAX_ORDER must be a positive integer, got '") + env + "'");
  }
}

/// Runs one invocation; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Gelfand models of projective reflection groups G(r,p,q,n)", "gelfand"};
  app.require_subcommand(1);
  app.add_option("--max-group-order", o.max_order, "largest r^n n! that may be enumerated (env MODEL_MAX_ORDER)")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", o.threads, "worker threads for per-class verification")->check(CLI::PositiveNumber);
  app.add_flag("--json", o.json_out, "JSON output instead of TSV");

  auto* group = app.add_subcommand("group", "group data");
  group->require_subcommand(1);
  auto* group_info = group->add_subcommand("info", "order, class and irreducible counts");
  add_group_flags(group_info, o);

  auto* inv = app.add_subcommand("involutions", "absolute involutions of G(r,p,q,n)");
  inv->require_subcommand(1);
  auto* inv_list = inv->add_subcommand("list", "every absolute involution with type and shape");
  auto* inv_types = inv->add_subcommand("types", "S_n-classes of absolute involutions");
  add_group_flags(inv_list, o);
  add_group_flags(inv_types, o);

  auto* rs_cmd = app.add_subcommand("rs", "Robinson-Schensted correspondence");
  rs_cmd->require_subcommand(1);
  auto* rs_apply = rs_cmd->add_subcommand("apply", "tableaux of a window");
  rs_apply->add_option("window", o.window, "window such as [3^0,4^1,6^1,2^0,5^2,1^2]")->required();
  rs_apply->add_option("--r", o.r, "root-of-unity order r")->required()->check(CLI::PositiveNumber);
  rs_apply->add_option("--q", o.q, "also report the projective image modulo C_q")->check(CLI::PositiveNumber);

  auto* classes = app.add_subcommand("classes", "conjugacy classes of G(r,p,n)");
  classes->require_subcommand(1);
  auto* classes_list = classes->add_subcommand("list", "labels, sizes and normal elements");
  add_group_flags(classes_list, o, false);

  auto* chartable = app.add_subcommand("chartable", "character table of G(r,p,q,n)");
  add_group_flags(chartable, o);

  auto* model = app.add_subcommand("model", "the model spanned by the absolute involutions of G(r,p,q,n)");
  model->require_subcommand(1);
  auto* model_dec = model->add_subcommand("decompose", "decompose each M(c) and compare with Sh(c)");
  add_group_flags(model_dec, o);
  model_dec->add_option("--class", o.class_type, "restrict to one type, e.g. sym[1,1;1,1]");
  auto* model_check = model->add_subcommand("gelfand-check", "multiplicity of every irreducible in M");
  add_group_flags(model_check, o);

  for (auto* sub : {group_info, inv_list, inv_types, rs_apply, classes_list, chartable, model_dec, model_check}) {
    sub->add_flag("--json", o.json_out, "JSON output instead of TSV");
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--max-group-order", o.max_order, "largest r^n n! that may be enumerated")
        ->check(CLI::PositiveNumber);
  }

  try {
    o.max_order = env_max_order();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (group_info->parsed()) return cmd_group_info(o, out);
    if (inv_list->parsed()) return cmd_involutions_list(o, out);
    if (inv_types->parsed()) return cmd_involutions_types(o, out);
    if (rs_apply->parsed()) return cmd_rs_apply(o, out);
    if (classes_list->parsed()) return cmd_classes_list(o, out);
    if (chartable->parsed()) return cmd_chartable(o, out);
    if (model_dec->parsed()) return cmd_model_decompose(o, out);
    if (model_check->parsed()) return cmd_model_gelfand_check(o, out);
    err << app.help();
    return exit_usage;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return exit_resource;
  } catch (const InconsistencyError& e) {
    err << "error: " << e.what() << "\n";
    return exit_fail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace gelfand::cli
