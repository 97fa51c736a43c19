#include "ontic/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "text_util.hpp"

namespace ontic::cli {

namespace {

using nlohmann::json;

constexpr std::string_view kBlockedMarker = "@blocked";

struct Loaded {
  Ontology ontology;
  Lexicon lexicon;
};

Loaded load(const RunConfig& cfg) {
  auto g = Ontology::load_file(cfg.ontology_path);
  auto lex = Lexicon::load_file(cfg.lexicon_path, g);
  return {std::move(g), std::move(lex)};
}

std::string step_text(const TraceStep& s) {
  std::string out = s.var + " :: " + s.left.to_string() + " . " + s.right.to_string() + " -> ";
  out += s.kind == UnifyCase::MsrBridge ? s.relation : s.output.to_string();
  return out + "  [" + std::string(to_string(s.kind)) + "]";
}

std::vector<std::string> members(const TypeSet& t) { return t.members(); }

/// Result of interpreting one line, with errors folded in.
struct Outcome {
  std::optional<InterpretResult> result;
  std::string error;
};

Outcome attempt(std::string_view sentence, const Loaded& data, const RunConfig& cfg) {
  ResolveOptions opts;
  opts.expand_attachment = cfg.expand_attachment;
  try {
    return {interpret(sentence, data.lexicon, data.ontology, opts), {}};
  } catch (const std::exception& e) {
    return {std::nullopt, e.what()};
  }
}

void print_outcome(const Outcome& o, std::string_view sentence, const RunConfig& cfg,
                   std::ostream& out) {
  if (cfg.format == OutputFormat::Structured) {
    if (o.result) {
      out << emit_structured(*o.result) << '\n';
    } else {
      StructuredRecord r;
      r.sentence = std::string(sentence);
      r.warnings.push_back("error: " + o.error);
      out << emit_structured(r) << '\n';
    }
    return;
  }
  if (o.result) {
    out << format_text(*o.result, cfg.trace);
  } else {
    out << sentence << '\n' << "error: " << o.error << '\n';
  }
}

}  // namespace

std::string format_text(const InterpretResult& r, TraceLevel trace) {
  std::ostringstream out;
  out << r.sentence << '\n';
  if (trace == TraceLevel::Full) {
    for (const auto& f : r.initial_forms) out << "  initial: " << f << '\n';
    for (const auto& c : r.casts)
      out << "  cast: " << c.pred << " " << c.from << " -> " << c.to
          << (c.allowed ? " (upward)" : " (blocked)") << '\n';
  }
  if (trace != TraceLevel::None) {
    int phase = 0;
    for (const auto& s : r.trace.steps) {
      if (s.phase != phase) {
        phase = s.phase;
        out << (phase == 1 ? "  local unification:\n" : "  bridging:\n");
      }
      out << "    " << step_text(s) << '\n';
    }
  }
  const auto n = r.readings.size();
  if (n == 1) {
    out << "1 reading: " << r.readings.front().gloss << '\n';
  } else {
    out << n << " readings" << (n ? ":" : "") << '\n';
    for (std::size_t i = 0; i < n; ++i) out << "  [" << i + 1 << "] " << r.readings[i].gloss << '\n';
  }
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  return out.str();
}

StructuredRecord to_record(const InterpretResult& result) {
  StructuredRecord r;
  r.sentence = result.sentence;
  for (const auto& reading : result.readings) r.readings.push_back(reading.gloss);
  for (const auto& s : result.trace.steps) {
    StructuredStep step{s.var, members(s.left), members(s.right), std::string(to_string(s.kind)),
                        {}};
    if (s.kind == UnifyCase::MsrBridge) step.output = {s.relation};
    else step.output = members(s.output);
    r.trace.push_back(std::move(step));
  }
  r.warnings = result.warnings;
  return r;
}

std::string emit_structured(const StructuredRecord& record) {
  json trace = json::array();
  for (const auto& s : record.trace)
    trace.push_back(json::array({s.var, s.left, s.right, s.kind, s.output}));
  json j = {{"version", record.version},   {"sentence", record.sentence},
            {"readings", record.readings}, {"trace", trace},
            {"warnings", record.warnings}};
  return j.dump();
}

std::string emit_structured(const InterpretResult& result) {
  return emit_structured(to_record(result));
}

StructuredRecord parse_structured(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
  try {
    StructuredRecord r;
    r.version = j.at("version").get<int>();
    if (r.version != kRecordVersion)
      throw std::invalid_argument("unsupported record version " + std::to_string(r.version));
    r.sentence = j.at("sentence").get<std::string>();
    r.readings = j.at("readings").get<std::vector<std::string>>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    for (const auto& t : j.at("trace")) {
      if (!t.is_array() || t.size() != 5) throw std::invalid_argument("trace steps have 5 fields");
      r.trace.push_back({t[0].get<std::string>(), t[1].get<std::vector<std::string>>(),
                         t[2].get<std::vector<std::string>>(), t[3].get<std::string>(),
                         t[4].get<std::vector<std::string>>()});
    }
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
}

int run_batch(const RunConfig& cfg, const std::filesystem::path& sentences, std::ostream& out,
              std::ostream& err) {
  std::optional<Loaded> data;
  try {
    data = load(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitLoadFailure;
  }
  std::ifstream in(sentences);
  if (!in) {
    err << "error: cannot open sentences file " << sentences.string() << '\n';
    return kExitLoadFailure;
  }

  int status = kExitOk;
  bool first = true;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line = text::strip_comment(raw);
    if (line.empty()) continue;
    bool expect_blocked = false;
    if (line.size() >= kBlockedMarker.size() &&
        line.substr(line.size() - kBlockedMarker.size()) == kBlockedMarker) {
      expect_blocked = true;
      line = text::trim(line.substr(0, line.size() - kBlockedMarker.size()));
    }

    auto outcome = attempt(line, *data, cfg);
    if (cfg.format == OutputFormat::Text && !first) out << '\n';
    first = false;
    print_outcome(outcome, line, cfg, out);

    const bool has_reading = outcome.result && !outcome.result->blocked();
    const bool blocked = outcome.result && outcome.result->blocked();
    if (expect_blocked ? !blocked : !has_reading) {
      status = kExitUnexpected;
      err << "unexpected: " << line << " ("
          << (expect_blocked ? "asserted @blocked" : "expected a reading") << ")\n";
    } else if (expect_blocked && cfg.format == OutputFormat::Text) {
      out << "blocked, as asserted\n";
    }
  }
  return status;
}

int run_repl(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  std::optional<Loaded> data;
  try {
    data = load(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitLoadFailure;
  }

  RunConfig session = cfg;
  std::string raw;
  for (;;) {
    if (session.prompt) out << "ontic> " << std::flush;
    if (!std::getline(in, raw)) break;
    auto line = text::trim(raw);
    if (line.empty()) continue;
    if (line.front() != ':') {
      print_outcome(attempt(line, *data, session), line, session, out);
      continue;
    }

    auto words = text::words(line);
    const auto cmd = words.front();
    if (cmd == ":quit" && words.size() == 1) {
      return kExitOk;
    } else if (cmd == ":trace" && words.size() == 2 && (words[1] == "on" || words[1] == "off")) {
      session.trace = words[1] == "on" ? TraceLevel::Steps : TraceLevel::None;
      out << "trace " << words[1] << '\n';
    } else if (cmd == ":senses" && words.size() == 2) {
      bool any = false;
      for (auto pos : {PartOfSpeech::Noun, PartOfSpeech::Adjective, PartOfSpeech::Verb,
                       PartOfSpeech::ProperNoun}) {
        auto senses = data->lexicon.lookup(words[1], pos);
        if (senses.empty()) continue;
        any = true;
        out << to_string(pos) << " " << words[1];
        std::string joined;
        for (const auto& s : senses) {
          auto t = to_string(s);
          if (!t.empty()) joined += (joined.empty() ? "" : " | ") + t;
        }
        if (!joined.empty()) out << " : " << joined;
        out << '\n';
      }
      if (!any) out << "no senses for '" << words[1] << "'\n";
    } else if (cmd == ":msr" && words.size() == 3) {
      try {
        auto rel = data->ontology.msr(words[1], words[2]);
        out << (rel ? rel->to_string() : "no salient relation") << '\n';
      } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
      }
    } else {
      err << "error: unknown or malformed command '" << line
          << "' (try :trace on|off, :senses <word>, :msr <type> <type>, :quit)\n";
    }
  }
  return kExitOk;
}

}  // namespace ontic::cli
