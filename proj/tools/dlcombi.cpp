#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "dlcombi/cli_io.hpp"

namespace {

using dlcombi::cli::json;

struct Leaf {
  std::string command, sub;
  std::string config;
  std::map<std::string, std::string> overrides;
};

// Each override flag writes a raw string; conversion happens after parsing.
void add_overrides(CLI::App *app, Leaf &leaf, const std::vector<std::string> &keys) {
  app->add_option("--config", leaf.config, "JSON config file");
  for (const auto &k : keys) {
    std::string flag = "--" + k;
    std::replace(flag.begin(), flag.end(), '_', '-');
    app->add_option_function<std::string>(
        flag, [&leaf, k](const std::string &v) { leaf.overrides[k] = v; },
        "override '" + k + "'");
  }
}

int run_leaf(const Leaf &leaf) {
  namespace cli = dlcombi::cli;
  try {
    json doc = leaf.config.empty() ? json::object() : cli::read_document(leaf.config);
    if (!doc.is_object())
      dlcombi::fail(dlcombi::ErrorCode::ValidationError, "at /: config must be a JSON object");
    for (const auto &[k, v] : leaf.overrides)
      doc[k] = cli::override_value(k, v);
    auto cfg = cli::parse_config(doc);
    auto out = cli::run(leaf.command, leaf.sub, cfg);
    std::cout << cli::report(leaf.command, leaf.sub, cfg, out).dump(2) << "\n";
    return out.verification_failed ? 1 : 0;
  } catch (const dlcombi::Error &e) {
    std::cout << cli::error_report(e).dump(2) << "\n";
    std::cerr << "dlcombi: " << e.what() << "\n";
    return cli::exit_code(e);
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Deligne-Lusztig series combinatorics on root data"};
  app.require_subcommand(1);
  const std::vector<std::string> common = {"datum", "q", "phi", "phi_y", "threads",
                                           "max_pairs"};
  auto with = [&](std::vector<std::string> extra) {
    auto keys = common;
    keys.insert(keys.end(), extra.begin(), extra.end());
    return keys;
  };

  std::vector<std::unique_ptr<Leaf>> leaves;
  Leaf *chosen = nullptr;
  auto leaf = [&](CLI::App *parent, const std::string &command, const std::string &sub,
                  const std::string &help, const std::vector<std::string> &keys) {
    leaves.push_back(std::make_unique<Leaf>());
    Leaf *l = leaves.back().get();
    l->command = command;
    l->sub = sub;
    CLI::App *app_leaf = parent->add_subcommand(sub.empty() ? command : sub, help);
    add_overrides(app_leaf, *l, keys);
    app_leaf->callback([&chosen, l] { chosen = l; });
  };

  leaf(&app, "datum", "", "describe the root datum and Frobenius", with({}));
  leaf(&app, "torus", "", "twisted torus T^{wF}", with({"w"}));
  auto *series = app.add_subcommand("series", "rational and geometric series");
  series->require_subcommand(1);
  leaf(series, "series", "enumerate", "enumerate series labels", with({}));
  auto *dl = app.add_subcommand("dl", "sequence numerology and root conditions");
  dl->require_subcommand(1);
  leaf(dl, "dl", "defect", "d_j of a sequence", with({"seq", "j"}));
  leaf(dl, "dl", "predicate-p", "predicate P for a sequence and character",
       with({"seq", "j", "mu"}));
  leaf(dl, "dl", "theod", "coroot containment for a radical sequence",
       with({"seq", "j", "mu", "w", "levi", "radicals", "twist"}));
  leaf(dl, "dl", "condition-c", "dual-centraliser condition for two radicals",
       with({"levi", "twist", "psi1", "psi2", "mu", "w"}));
  leaf(dl, "dl", "transitivity", "the four transitivity conditions",
       with({"seq", "j", "levi", "radicals", "twist"}));
  leaf(&app, "fold", "", "fixed-point root datum of an automorphism",
       with({"auto", "p", "c", "torus_part"}));
  leaf(&app, "jordan", "", "quasi-isolated hypothesis report", with({"mu", "w", "ell"}));
  auto *oracle = app.add_subcommand("oracle", "matrix-group ground truth");
  oracle->require_subcommand(1);
  leaf(oracle, "oracle", "verify", "compare series counts with the oracle",
       {"group", "q", "datum"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return chosen ? run_leaf(*chosen) : 2;
}
