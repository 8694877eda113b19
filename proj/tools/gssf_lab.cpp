#include "gssf/harness/config.hpp"
#include "gssf/harness/theorem.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

using namespace gssf;

namespace {

constexpr int kUsageError = 3;

struct Common {
  std::string config;
  std::optional<int> samples;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c, bool sampling) {
  cmd->add_option("--config", c.config, "key=value config file")->check(CLI::ExistingFile);
  if (sampling) {
    cmd->add_option("--samples", c.samples, "sample points")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", c.tol, "residual tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", c.seed, "sampling seed");
  }
}

// Config first, then flags on top.
void resolve(const Common& c, Scenario& s) {
  if (!c.config.empty()) apply_config_file(c.config, s);
  if (c.samples) s.samples = *c.samples;
  if (c.seed) s.seed = *c.seed;
  if (c.tol) s.tol = *c.tol;
}

int emit(const VerificationReport& r, const std::string& out) {
  const std::string text = to_json(r);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw ConfigError("cannot write '" + out + "'");
    f << text;
    std::cout << r.command << ": " << to_string(r.verdict) << " (max residual " << decimal_string(r.max_residual)
              << ")\n";
  }
  return exit_code(r.verdict);
}

void list_spaces() {
  std::printf("%-22s %4s %8s %8s %8s %8s\n", "space", "dim", "f1", "f2", "f3", "r");
  for (const auto& name : space_names()) {
    const ModelSpace m = builtin_space(name);
    std::printf("%-22s %4d %8g %8g %8g %8g\n", name.c_str(), m.dim(), m.params.f1, m.params.f2, m.params.f3,
                gssf_scalar(m.params, m.n()));
  }
  std::printf("\n%-22s %s\n", "embedding", "ambient");
  for (const auto& name : embedding_names()) {
    const std::string amb = embedding_ambient(name);
    std::printf("%-22s %s\n", name.c_str(), amb.empty() ? "(any)" : amb.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for invariant submanifolds of generalized Sasakian space forms", "gssf-lab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  auto* spaces = app.add_subcommand("spaces", "model catalog");
  spaces->require_subcommand(1);
  auto* spaces_list = spaces->add_subcommand("list", "table of models and embeddings");

  Common vc;
  std::string v_space;
  auto* validate = app.add_subcommand("validate", "check curvature identities on a model");
  validate->add_option("--space", v_space, "model name")->required();
  add_common(validate, vc, true);
  validate->add_option("--out", vc.out, "JSON report path");

  Common tc;
  std::string t_id, t_space, t_embedding, t_mode;
  bool t_synthetic = false;
  std::optional<double> t_l1;
  auto* theorem = app.add_subcommand("theorem", "verify one characterization");
  theorem->add_option("--id", t_id, "theorem id")->required();
  theorem->add_option("--space", t_space, "model name")->required();
  auto* emb_opt = theorem->add_option("--embedding", t_embedding, "embedding name");
  auto* syn_opt = theorem->add_flag("--synthetic", t_synthetic, "synthetic second fundamental form");
  emb_opt->excludes(syn_opt);
  theorem->add_option("--L1", t_l1, "pseudo-parallel function value");
  add_common(theorem, tc, true);
  theorem->add_option("--mode", t_mode, "forward or identity")->check(CLI::IsMember({"forward", "identity"}));
  theorem->add_option("--out", tc.out, "JSON report path")->required();

  Common ec;
  std::string e_space, e_embedding;
  auto* equivalence = app.add_subcommand("equivalence", "evaluate all equivalent conditions");
  equivalence->add_option("--space", e_space, "model name")->required();
  equivalence->add_option("--embedding", e_embedding, "embedding name")->required();
  add_common(equivalence, ec, false);
  equivalence->add_option("--out", ec.out, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (spaces_list->parsed()) {
      list_spaces();
      return 0;
    }
    if (validate->parsed()) {
      Scenario s;
      s.space = v_space;
      resolve(vc, s);
      return emit(validate_report(s), vc.out);
    }
    if (theorem->parsed()) {
      const TheoremId id = parse_theorem_id(t_id);
      Scenario s;
      s.space = t_space;
      if (!t_embedding.empty()) s.embedding = t_embedding;
      s.synthetic = t_synthetic;
      resolve(tc, s);
      if (t_l1) s.L1 = *t_l1;
      if (!t_mode.empty()) s.mode = t_mode == "forward" ? Direction::Forward : Direction::Identity;
      if (!s.embedding && !s.synthetic) throw ConfigError("theorem needs --embedding or --synthetic");
      return emit(run_theorem(id, s), tc.out);
    }
    if (equivalence->parsed()) {
      Scenario s;
      s.space = e_space;
      s.embedding = e_embedding;
      resolve(ec, s);
      return emit(equivalence_matrix(s), ec.out);
    }
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
