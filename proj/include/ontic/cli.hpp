#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ontic/interpreter.hpp"

namespace ontic::cli {

enum class TraceLevel { None, Steps, Full };
enum class OutputFormat { Text, Structured };

struct RunConfig {
  std::filesystem::path ontology_path;
  std::filesystem::path lexicon_path;
  bool repl = false;
  TraceLevel trace = TraceLevel::None;
  OutputFormat format = OutputFormat::Text;
  bool expand_attachment = false;
  bool prompt = false;  // REPL prompt, for interactive terminals
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitLoadFailure = 1;
inline constexpr int kExitUnexpected = 2;

/// Interprets one sentence per line (`#` comments, optional `@blocked`
/// suffix asserting that no reading exists). Exit status per kExit*.
int run_batch(const RunConfig& cfg, const std::filesystem::path& sentences, std::ostream& out,
              std::ostream& err);

/// Reads sentences and `:` commands until `:quit` or end of input.
int run_repl(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);

/// Version of the structured record layout.
inline constexpr int kRecordVersion = 1;

struct StructuredStep {
  std::string var;
  std::vector<std::string> left;
  std::vector<std::string> right;
  std::string kind;
  std::vector<std::string> output;  // the relation, for msr-bridge steps

  friend bool operator==(const StructuredStep&, const StructuredStep&) = default;
};

struct StructuredRecord {
  int version = kRecordVersion;
  std::string sentence;
  std::vector<std::string> readings;
  std::vector<StructuredStep> trace;
  std::vector<std::string> warnings;

  friend bool operator==(const StructuredRecord&, const StructuredRecord&) = default;
};

StructuredRecord to_record(const InterpretResult& result);

/// One JSON object on a single line:
/// {"version":1,"sentence":...,"readings":[...],
///  "trace":[[var,[left...],[right...],case,[output...]],...],"warnings":[...]}
std::string emit_structured(const StructuredRecord& record);
std::string emit_structured(const InterpretResult& result);

/// Throws std::invalid_argument on a malformed record.
StructuredRecord parse_structured(std::string_view line);

/// The text block batch and REPL print for one sentence.
std::string format_text(const InterpretResult& result, TraceLevel trace);

}  // namespace ontic::cli
