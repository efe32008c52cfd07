#include <iostream>

#include <CLI11.hpp>

#include "cideal_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace cideal::cli;
  CLI::App app{"Complete ideals, adjoints and Gorenstein blowups over two-dimensional regular local rings", "cideal"};
  app.require_subcommand(1);

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"validate", "Check the document and the completeness of each ideal"},
      {"factor", "Excess vector and factorization into simple ideals"},
      {"adjoint", "Point basis of the adjoint ideal"},
      {"is-adjoint", "Whether J^n is an adjoint ideal"},
      {"min-adjoint-exponent", "Smallest n with J^n adjoint"},
      {"gorenstein", "Whether the blowup of J is Gorenstein"},
      {"gorensteinfy", "J times its adjoint"},
      {"invariants", "Order, colength, multiplicity and related invariants"},
      {"intersection", "Intersection matrix of the exceptional curves"},
      {"two-factor", "Classify I^p J^q for simple I and J"},
      {"monomial", "Closure, adjoint and point basis of a monomial ideal"},
      {"verify-corpus", "Run the cross-route property suites"},
      {"export-dot", "Graphviz rendering of the constellation"},
  };

  Options opts;
  std::string format = "text";
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    if (std::string(s.name) == "verify-corpus") continue;
    sub->add_option("--input", opts.input, "Document file");
    sub->add_option("--ideal", opts.ideals, "Ideal name (repeat for two-factor)");
    if (std::string(s.name) == "is-adjoint" || std::string(s.name) == "two-factor") {
      sub->add_option("--power", opts.power, "Exponent");
    }
    if (std::string(s.name) == "adjoint") sub->add_option("--iterate", opts.iterate, "Number of adjoint iterations");
    if (std::string(s.name) == "monomial") sub->add_option("--gens", opts.gens, "Generators such as \"x^2, y^3\"");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }
  opts.format = format == "structured" ? Format::Structured : Format::Text;
  return run_command(app.get_subcommands().front()->get_name(), opts, std::cout, std::cerr);
}
