#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "ontic/cli.hpp"

namespace py = pybind11;
using namespace ontic;

namespace {

py::dict outcome_dict(const UnifyOutcome& o) {
  py::dict d;
  if (auto* s = std::get_if<UnifySingle>(&o)) {
    d["case"] = "single";
    d["type"] = s->type;
  } else if (auto* b = std::get_if<UnifyBridge>(&o)) {
    d["case"] = "bridge";
    d["relation"] = b->relation.to_string();
    d["kept_left"] = b->kept_left;
    d["kept_right"] = b->kept_right;
    d["left_slot"] = b->left_slot;
    d["tie"] = b->tie;
  } else {
    d["case"] = "bottom";
  }
  return d;
}

py::dict record_dict(const cli::StructuredRecord& r) {
  py::list trace;
  for (const auto& s : r.trace) trace.append(py::make_tuple(s.var, s.left, s.right, s.kind, s.output));
  py::dict d;
  d["version"] = r.version;
  d["sentence"] = r.sentence;
  d["readings"] = r.readings;
  d["trace"] = trace;
  d["warnings"] = r.warnings;
  return d;
}

/// Ontology and lexicon loaded together; the lexicon validates against the
/// ontology it was loaded with.
struct Grammar {
  Ontology ontology;
  Lexicon lexicon;
};

}  // namespace

PYBIND11_MODULE(_ontic, m) {
  m.doc() = "Type unification over a strongly-typed ontology";

  py::register_exception<OntologyError>(m, "OntologyError", PyExc_ValueError);
  py::register_exception<LexiconError>(m, "LexiconError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TranslationError>(m, "TranslationError", PyExc_ValueError);
  py::register_exception<UnknownType>(m, "UnknownType", PyExc_KeyError);

  py::class_<Ontology>(m, "Ontology")
      .def_static("load", &Ontology::load, py::arg("source"))
      .def_static("load_file", &Ontology::load_file, py::arg("path"))
      .def_property_readonly("types", &Ontology::types)
      .def("__len__", &Ontology::size)
      .def("__contains__", &Ontology::contains)
      .def("parents", &Ontology::parents)
      .def("subsumes", &Ontology::subsumes, py::arg("s"), py::arg("t"))
      .def(
          "unify_pair",
          [](const Ontology& g, std::string_view s, std::string_view t, bool bridge) {
            return outcome_dict(g.unify_pair(s, t, bridge));
          },
          py::arg("s"), py::arg("t"), py::arg("allow_bridge") = false)
      .def(
          "unify_sets",
          [](const Ontology& g, const std::vector<std::string>& s,
             const std::vector<std::string>& t, bool bridge) {
            auto r = g.unify_sets(TypeSet(s), TypeSet(t), bridge);
            py::list bridges;
            for (const auto& b : r.bridges) bridges.append(outcome_dict(b));
            return py::make_tuple(r.types.members(), bridges);
          },
          py::arg("s"), py::arg("t"), py::arg("allow_bridge") = false)
      .def(
          "msr",
          [](const Ontology& g, std::string_view s, std::string_view t) -> std::optional<std::string> {
            if (auto r = g.msr(s, t)) return r->to_string();
            return std::nullopt;
          },
          py::arg("s"), py::arg("t"))
      .def("print", &Ontology::print);

  py::class_<Grammar>(m, "Grammar")
      .def(py::init([](const std::string& ontology, const std::string& lexicon) {
             auto g = Ontology::load(ontology);
             auto lex = Lexicon::load(lexicon, g);
             return Grammar{std::move(g), std::move(lex)};
           }),
           py::arg("ontology"), py::arg("lexicon"))
      .def_static(
          "from_files",
          [](const std::filesystem::path& ontology, const std::filesystem::path& lexicon) {
            auto g = Ontology::load_file(ontology);
            auto lex = Lexicon::load_file(lexicon, g);
            return Grammar{std::move(g), std::move(lex)};
          },
          py::arg("ontology"), py::arg("lexicon"))
      .def_property_readonly("ontology", [](const Grammar& gr) { return gr.ontology; })
      .def("tokenize",
           [](const Grammar& gr, std::string_view s) { return tokenize(s, gr.lexicon); })
      .def("parse",
           [](const Grammar& gr, std::string_view s) {
             return to_string(parse(tokenize(s, gr.lexicon), gr.lexicon));
           })
      .def(
          "interpret",
          [](const Grammar& gr, std::string_view s, bool expand) {
            ResolveOptions opts;
            opts.expand_attachment = expand;
            return record_dict(cli::to_record(interpret(s, gr.lexicon, gr.ontology, opts)));
          },
          py::arg("sentence"), py::arg("expand_attachment") = false)
      .def(
          "interpret_structured",
          [](const Grammar& gr, std::string_view s, bool expand) {
            ResolveOptions opts;
            opts.expand_attachment = expand;
            return cli::emit_structured(interpret(s, gr.lexicon, gr.ontology, opts));
          },
          py::arg("sentence"), py::arg("expand_attachment") = false)
      .def("senses", [](const Grammar& gr, std::string_view word) {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto pos : {PartOfSpeech::Noun, PartOfSpeech::Adjective, PartOfSpeech::Verb,
                         PartOfSpeech::ProperNoun})
          for (const auto& s : gr.lexicon.lookup(word, pos))
            out.emplace_back(std::string(to_string(pos)), to_string(s));
        return out;
      });

  m.def(
      "parse_structured",
      [](std::string_view line) { return record_dict(cli::parse_structured(line)); },
      py::arg("line"));
  m.attr("RECORD_VERSION") = cli::kRecordVersion;
}
