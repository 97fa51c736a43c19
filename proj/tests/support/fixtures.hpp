#pragma once

#include <filesystem>

#include "ontic/lexicon.hpp"
#include "ontic/ontology.hpp"

namespace fixtures {

inline std::filesystem::path data_dir() { return ONTIC_DATA_DIR; }

inline const ontic::Ontology& demo_ontology() {
  static const auto g = ontic::Ontology::load_file(data_dir() / "paper.ont");
  return g;
}

inline const ontic::Lexicon& demo_lexicon() {
  static const auto lex = ontic::Lexicon::load_file(data_dir() / "paper.lex", demo_ontology());
  return lex;
}

}  // namespace fixtures
