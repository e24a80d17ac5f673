#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsphere/errors.hpp"
#include "nsphere/io.hpp"

namespace nsphere::cli {

enum class Subcommand {
  LinkEnum,
  LinkComplex,
  StarMax,
  Classify,
  Reduce,
  Remove,
  Realize,
  Witness,
  TmFamily,
  SpineEnum,
  SpinePoset,
  WhMin,
  Primitive,
};

enum class Format { Json, Dot, Text };

std::string name_of(Subcommand s);

struct CommandPlan {
  Subcommand subcommand = Subcommand::LinkEnum;
  std::map<std::string, std::string> params;  // flag name without dashes -> raw value
  std::optional<io::json> input;
  Format format = Format::Json;

  std::optional<int> integer(const std::string& flag) const;
};

// Bad command line. Maps to exit code 1 like any other InputError.
class UsageError : public InputError {
 public:
  using InputError::InputError;
};

// --help was given; carries the help text.
struct HelpRequested {
  std::string text;
};

// `args` excludes the program name. Reads the --input payload (from `in` when
// the path is "-") and parses it as JSON. Throws UsageError or HelpRequested.
CommandPlan parse(std::span<const std::string> args, std::istream& in);

struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

Outcome execute(const CommandPlan& plan);

// parse + execute with the exit-code contract applied; never throws.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nsphere::cli
