// Command-line front end for critical multi-cubic lattices: enumerations,
// automorphism-group reports, gate/projection emission, and the verification
// suites. All results go to stdout as JSON; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 verification failure or budget refusal, 2 usage.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcl/checks.hpp"
#include "mcl/errors.hpp"
#include "mcl/groups.hpp"
#include "mcl/representation.hpp"
#include "mcl/serialization.hpp"

namespace {

struct Options {
  int modulus = 3;
  int indices = 1;
  double tolerance = 1e-9;
  std::uint64_t budget = mcl::kDefaultEnumerationBudget;
  std::uint64_t seed = 0;
};

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void require_matrix_dim(const Options& opt) {
  std::uint64_t dim = 1;
  for (int i = 0; i < opt.indices; ++i) {
    dim *= static_cast<std::uint64_t>(opt.modulus - 1);
    if (dim > 32) {
      throw mcl::budget_error("matrix emission capped at dimension 32");
    }
  }
}

int cmd_atoms(const Options& opt, bool coatoms_instead) {
  const mcl::Modulus modulus(opt.modulus);
  const mcl::IndexSet indices(opt.indices);
  const auto list = coatoms_instead ? mcl::coatoms(modulus, indices)
                                    : mcl::atoms(modulus, indices, opt.budget);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : list) out.push_back(mcl::to_json(m));
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_ops_table(const Options& opt) {
  const mcl::Modulus modulus(opt.modulus);
  const mcl::IndexSet indices(opt.indices);
  const auto elems =
      mcl::enumerate_elements(modulus, indices, /*include_bottom=*/true, opt.budget);
  if (elems.size() > 1000) {
    throw mcl::budget_error("ops-table limited to 1000 elements");
  }
  nlohmann::json element_list = nlohmann::json::array();
  for (const auto& m : elems) element_list.push_back(mcl::to_json(m));

  auto table = [&](auto&& op) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& a : elems) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& b : elems) {
        const mcl::MclElement c = op(a, b);
        const auto it = std::find(elems.begin(), elems.end(), c);
        row.push_back(static_cast<int>(it - elems.begin()));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };

  nlohmann::json out;
  out["modulus"] = opt.modulus;
  out["indices"] = opt.indices;
  out["elements"] = std::move(element_list);
  out["meet"] = table([](const auto& a, const auto& b) { return mcl::meet(a, b); });
  out["join"] = table([](const auto& a, const auto& b) { return mcl::join(a, b); });
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_aut(const Options& opt, bool want_order, bool want_transitive, bool want_center) {
  const mcl::Modulus modulus(opt.modulus);
  const mcl::IndexSet indices(opt.indices);
  if (!want_order && !want_transitive && !want_center) {
    want_order = want_transitive = want_center = true;
  }
  const auto gens = mcl::aut_generators(modulus, indices);
  nlohmann::json out;
  out["modulus"] = opt.modulus;
  out["indices"] = opt.indices;
  if (want_transitive) {
    std::vector<mcl::Perm> action;
    for (const auto& w : gens) action.push_back(w.atom_action(modulus, indices));
    std::uint64_t atom_count = 1;
    for (int i = 0; i < opt.indices; ++i) {
      atom_count *= static_cast<std::uint64_t>(opt.modulus - 1);
    }
    out["transitive"] =
        mcl::is_transitive(action, static_cast<int>(atom_count));
  }
  if (want_order) {
    const auto group =
        mcl::atom_action_group(gens, modulus, indices, static_cast<std::size_t>(opt.budget));
    out["order"] = group.order(static_cast<std::size_t>(opt.budget));
  }
  if (want_center) {
    const auto center =
        mcl::action_center(gens, modulus, indices, static_cast<std::size_t>(opt.budget));
    out["center_order"] = center.order(static_cast<std::size_t>(opt.budget));
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_emit(const Options& opt, const std::string& what, int site) {
  const mcl::Modulus modulus(opt.modulus);
  const mcl::IndexSet indices(opt.indices);
  const int d = modulus.symbols();
  if (d > 32) {
    throw mcl::budget_error("matrix emission capped at dimension 32");
  }
  if (what == "shift") {
    std::cout << mcl::matrix_to_json_string(mcl::shift_matrix(d)) << "\n";
    return 0;
  }
  if (what == "clock") {
    std::cout << mcl::matrix_to_json_string(mcl::clock_matrix(d)) << "\n";
    return 0;
  }
  if (what == "qft") {
    std::cout << mcl::matrix_to_json_string(mcl::fourier_matrix(d)) << "\n";
    return 0;
  }
  require_matrix_dim(opt);
  if (what == "coatom-projections") {
    std::string out = "[";
    bool first = true;
    for (const auto& c : mcl::coatoms(modulus, indices)) {
      if (!first) out += ',';
      first = false;
      out += "{\"coatom\":" + mcl::to_json(c).dump() +
             ",\"matrix\":" + mcl::matrix_to_json_string(mcl::coatom_projection(c)) + "}";
    }
    out += "]";
    std::cout << out << "\n";
    return 0;
  }
  if (what == "matrix-units") {
    const auto units = mcl::matrix_units(site, modulus, indices);
    std::string out = "{\"site\":" + std::to_string(site) + ",\"units\":[";
    for (std::size_t i = 0; i < units.size(); ++i) {
      if (i > 0) out += ',';
      out += '[';
      for (std::size_t j = 0; j < units[i].size(); ++j) {
        if (j > 0) out += ',';
        out += mcl::matrix_to_json_string(units[i][j]);
      }
      out += ']';
    }
    out += "]}";
    std::cout << out << "\n";
    return 0;
  }
  throw std::invalid_argument("emit: unknown target '" + what + "'");
}

int cmd_verify(const Options& opt, const std::string& suite) {
  mcl::CheckConfig config;
  config.modulus = opt.modulus;
  config.indices = opt.indices;
  config.tolerance = opt.tolerance;
  config.budget = opt.budget;
  config.seed = opt.seed;
  const mcl::VerificationReport report = mcl::run_suite(suite, config);
  for (const auto& c : report.checks) {
    std::cout << "{\"suite\":\"" << c.suite << "\",\"check\":\"" << c.name
              << "\",\"status\":\"" << mcl::to_string(c.status)
              << "\",\"measured\":" << format_real(c.measured)
              << ",\"expected\":" << format_real(c.expected)
              << ",\"tolerance\":" << format_real(c.tolerance) << "}\n";
  }
  std::cout << "{\"suite\":\"" << suite << "\",\"overall\":\""
            << (report.passed() ? "pass" : "fail") << "\"}\n";
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"critical multi-cubic lattices: enumeration, automorphisms, "
               "unitary representation, verification"};
  app.add_option("--modulus", opt.modulus, "odd ring size 2k+1 (>= 3)");
  app.add_option("--indices", opt.indices, "number of tensor indices |I| (>= 1)");
  app.add_option("--tolerance", opt.tolerance, "numeric tolerance for span/rank checks");
  app.add_option("--budget", opt.budget, "enumeration budget");
  app.add_option("--seed", opt.seed, "seed for randomized property checks");
  app.require_subcommand(1);

  auto* atoms_cmd = app.add_subcommand("atoms", "list all atoms as JSON");
  auto* coatoms_cmd = app.add_subcommand("coatoms", "list all coatoms as JSON");
  auto* table_cmd = app.add_subcommand("ops-table", "meet and join tables");

  auto* aut_cmd = app.add_subcommand("aut", "automorphism-group report");
  bool want_order = false, want_transitive = false, want_center = false;
  aut_cmd->add_flag("--order", want_order, "report the generated group order");
  aut_cmd->add_flag("--transitive", want_transitive, "report transitivity on atoms");
  aut_cmd->add_flag("--center", want_center, "report the center order");

  auto* emit_cmd = app.add_subcommand("emit", "emit representation matrices");
  std::string emit_what;
  int emit_site = 0;
  emit_cmd->add_option("what", emit_what, "shift|clock|qft|coatom-projections|matrix-units")
      ->required();
  emit_cmd->add_option("--site", emit_site, "tensor site for matrix-units (default 0)");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify_cmd
      ->add_option("suite", suite,
                   "all|lattice|delta|implication|groups|representation|generation")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (atoms_cmd->parsed()) return cmd_atoms(opt, false);
    if (coatoms_cmd->parsed()) return cmd_atoms(opt, true);
    if (table_cmd->parsed()) return cmd_ops_table(opt);
    if (aut_cmd->parsed()) return cmd_aut(opt, want_order, want_transitive, want_center);
    if (emit_cmd->parsed()) return cmd_emit(opt, emit_what, emit_site);
    if (verify_cmd->parsed()) return cmd_verify(opt, suite);
  } catch (const mcl::budget_error& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
