#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "catkit/catkit.hpp"

int main(int argc, char** argv) {
  CLI::App app{"catkit — finite category theory, checked exhaustively"};
  app.set_version_flag("--version", std::string("catkit 1.0.0 (") + catkit::format_name() + ")");
  app.require_subcommand(1);

  catkit::Options o;
  auto add_common = [&](CLI::App* cmd, bool constructive, const char* entity_flag) {
    cmd->add_option("input", o.input_path, "workspace file to read")->required();
    if (entity_flag) {
      auto* pos =
          cmd->add_option("entity", o.entity, "entity to act on (optional when unambiguous)");
      // The same name is also reachable as a flag, e.g. `--tuple cl3`.
      cmd->add_option(entity_flag, o.entity, "named form of the entity argument")
          ->excludes(pos);
    }
    cmd->add_option("--report", o.report, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_flag("--oplax", o.oplax,
                  "read tuples without a variant field in the oplax orientation");
    if (constructive) {
      cmd->add_option("-o,--output", o.output_path, "write the constructed workspace here");
      cmd->add_option("--max-objects", o.max_objects,
                      "refuse to build over bases larger than this")
          ->capture_default_str();
    }
    cmd->callback([&o, cmd] { o.command = cmd->get_name(); });
  };

  add_common(app.add_subcommand("validate", "check every entity in a file"), false, nullptr);
  add_common(app.add_subcommand("kleisli", "build and verify the morphism resolution"),
             true, "--monad");
  add_common(app.add_subcommand("em", "build and verify the algebra resolution"), true,
             "--monad");
  add_common(app.add_subcommand("check-interchange",
                                "run both tuple formulations and compare verdicts"),
             false, "--tuple");
  add_common(
      app.add_subcommand("lift-kleisli", "carry the tensor onto the morphism category"),
      true, "--tuple");
  add_common(app.add_subcommand("lift-em", "carry the tensor onto the algebra category"),
             true, "--tuple");
  add_common(app.add_subcommand("lift-braided",
                                "carry a braided tensor up to the matching resolution"),
             true, "--tuple");
  auto* pc = app.add_subcommand("product-check",
                                "build the product of two tuples and verify it");
  add_common(pc, true, "--tuple");
  auto* pos2 =
      pc->add_option("entity2", o.entity2, "second tuple (defaults to squaring the first)");
  pc->add_option("--tuple2", o.entity2, "named form of the second tuple")->excludes(pos2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Fold CLI11's per-error exit codes into the documented ladder:
    // usage mistakes share exit 2 with structural problems; --help stays 0.
    return app.exit(e) == 0 ? 0 : 2;
  }
  return catkit::run_command(o, std::cout, std::cerr);
}
