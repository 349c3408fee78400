#include <iostream>

#include "CLI11.hpp"

#include "xsdmerge/commands.hpp"

namespace {

void add_pipeline_options(CLI::App& cmd, xsdmerge::cli::PipelineOptions& o) {
  cmd.add_option("schema1", o.schema1, "First referenced-style XSD")->required();
  cmd.add_option("schema2", o.schema2, "Second referenced-style XSD")->required();
  cmd.add_option("-u,--severity", o.severity, "Severity level u (0..m-1)");
  cmd.add_option("-t,--thesaurus", o.thesaurus, "Synonym pairs file (default: $XSDMERGE_THESAURUS)");
  cmd.add_option("--instances1", o.instances1, "XML instances of schema1 (IDREF resolution)");
  cmd.add_option("--instances2", o.instances2, "XML instances of schema2 (IDREF resolution)");
  cmd.add_option("-o,--out", o.out, "Output file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Severity-parametric matching and integration of XML Schemas"};
  app.require_subcommand(1);

  xsdmerge::cli::MatchOptions match;
  auto* match_cmd = app.add_subcommand("match", "Extract synonymies and homonymies as JSON");
  add_pipeline_options(*match_cmd, match);
  match_cmd->add_flag("--dictionaries", match.dictionaries, "Also emit the merge and rename dictionaries");

  xsdmerge::cli::IntegrateCommandOptions integrate;
  auto* integrate_cmd = app.add_subcommand("integrate", "Build the global schema");
  add_pipeline_options(*integrate_cmd, integrate);
  integrate_cmd->add_option("--root-name", integrate.root_name, "Name of a synthesized root element");
  integrate_cmd->add_option("--audit", integrate.audit, "Write the component mapping as JSON to this file");

  xsdmerge::cli::NeighborhoodOptions hood;
  auto* hood_cmd = app.add_subcommand("neighborhood", "Print neighborhoods of a schema's components");
  hood_cmd->add_option("schema", hood.schema, "Referenced-style XSD")->required();
  hood_cmd->add_option("-c,--component", hood.component, "Component name (default: every complex element)");
  hood_cmd->add_option("-j,--level", hood.level, "Neighborhood level j");
  hood_cmd->add_option("--instances", hood.instances, "XML instances (IDREF resolution)");

  std::string properties_path, gold_path;
  auto* eval_cmd = app.add_subcommand("eval", "Correctness and completeness against a gold standard");
  eval_cmd->add_option("properties", properties_path, "Output of `match`")->required();
  eval_cmd->add_option("gold", gold_path, "Gold standard JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (*match_cmd) return xsdmerge::cli::cmd_match(match, std::cout, std::cerr);
  if (*integrate_cmd) return xsdmerge::cli::cmd_integrate(integrate, std::cout, std::cerr);
  if (*hood_cmd) return xsdmerge::cli::cmd_neighborhood(hood, std::cout, std::cerr);
  return xsdmerge::cli::cmd_eval(properties_path, gold_path, std::cout, std::cerr);
}
