#include <iostream>

#include "CLI11.hpp"
#include "enls_lab/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"enls_lab: experiments for the third-order cubic NLS"};
  app.require_subcommand(1);

  enls::lab::RunOptions opts;
  std::string config, out = "out";
  std::uint64_t seed = 0;
  for (const auto& name : enls::lab::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config, "sectioned key=value configuration file")
        ->envname("ENLS_CONFIG");
    sub->add_option("--out", out, "output directory")->envname("ENLS_OUT");
    sub->add_option("--seed", seed, "random seed (overrides [run] seed)")->envname("ENLS_SEED");
    sub->add_flag("--deterministic", opts.deterministic,
                  "single worker thread, no timing fields in outputs");
    sub->add_flag("--dry-run", opts.dry_run, "print the resolved configuration and exit");
    sub->callback([&opts, name] { opts.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; every usage error maps to 2.
    return app.exit(e) == 0 ? 0 : 2;
  }

  opts.config_path = config;
  opts.out = out;
  for (const auto* sub : app.get_subcommands()) {
    if (sub->count("--seed") > 0 || !sub->get_option("--seed")->empty()) opts.seed = seed;
  }
  return enls::lab::run(opts, std::cout, std::cerr);
}
