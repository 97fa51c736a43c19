#include <unistd.h>

#include <iostream>

#include <CLI11.hpp>

#include "ontic/cli.hpp"

int main(int argc, char** argv) {
  using namespace ontic::cli;
  CLI::App app{"Type-driven semantic interpretation of a small English fragment"};

  RunConfig cfg;
  std::string sentences;
  std::string trace = "none";
  std::string format = "text";
  app.add_option("--ontology", cfg.ontology_path, "Ontology file")->required();
  app.add_option("--lexicon", cfg.lexicon_path, "Lexicon file")->required();
  app.add_option("--trace", trace, "Trace detail")
      ->check(CLI::IsMember({"none", "steps", "full"}));
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--expand-attachment", cfg.expand_attachment,
               "Report each adjective attachment as its own reading");
  app.add_flag("--repl", cfg.repl, "Interactive session on standard input");
  app.add_option("sentences", sentences, "One sentence per line");
  CLI11_PARSE(app, argc, argv);

  cfg.trace = trace == "full" ? TraceLevel::Full : trace == "steps" ? TraceLevel::Steps : TraceLevel::None;
  cfg.format = format == "structured" ? OutputFormat::Structured : OutputFormat::Text;

  if (cfg.repl) {
    cfg.prompt = isatty(STDIN_FILENO);
    return run_repl(cfg, std::cin, std::cout, std::cerr);
  }
  if (sentences.empty()) {
    std::cerr << "error: a sentences file is required unless --repl is given\n";
    return kExitLoadFailure;
  }
  return run_batch(cfg, sentences, std::cout, std::cerr);
}
