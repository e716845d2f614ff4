#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ahpeval/ahp/saaty.hpp"
#include "ahpeval/criteria/scoring.hpp"

namespace ahpeval::cli {

struct JudgmentLine {
  std::string first;
  std::string second;
  ahp::SaatyJudgment value;
  std::size_t line = 0;
};

// One pair per line: `Ci Cj intensity`, intensity an integer 1..9 or 1/k.
// Blank lines and text after '#' are ignored. Errors are
// ValidationError(kMalformedJudgment) with field "<source>:<line>".
std::vector<JudgmentLine> parse_judgment_file(std::string_view text, const std::string& source);

// One score per line: `Ci | value | evidence | ref; ref`. The refs column is
// optional. Errors are ValidationError(kInvalidScore) with "<source>:<line>".
std::vector<criteria::RubricScore> parse_score_file(std::string_view text, const std::string& source);

}  // namespace ahpeval::cli
