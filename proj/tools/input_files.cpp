#include "input_files.hpp"

#include <sstream>

namespace ahpeval::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(s);
  while (std::getline(in, cell, sep)) out.push_back(trim(cell));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

std::vector<JudgmentLine> parse_judgment_file(std::string_view text, const std::string& source) {
  std::vector<JudgmentLine> out;
  const auto lines = lines_of(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto where = source + ":" + std::to_string(k + 1);
    auto content = lines[k].substr(0, lines[k].find('#'));
    std::istringstream in(content);
    std::vector<std::string> words;
    for (std::string w; in >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (words.size() != 3) {
      throw ValidationError(ErrorKind::kMalformedJudgment, where,
                            where + ": expected `Ci Cj intensity`, got '" + trim(content) + "'");
    }
    const auto value = ahp::SaatyJudgment::try_parse(words[2]);
    if (!value) {
      throw ValidationError(ErrorKind::kMalformedJudgment, where,
                            where + ": '" + words[2] + "' is not a Saaty intensity (1..9 or 1/k)");
    }
    out.push_back({words[0], words[1], *value, k + 1});
  }
  return out;
}

std::vector<criteria::RubricScore> parse_score_file(std::string_view text, const std::string& source) {
  std::vector<criteria::RubricScore> out;
  const auto lines = lines_of(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto where = source + ":" + std::to_string(k + 1);
    const auto content = trim(lines[k]);
    if (content.empty() || content.front() == '#') continue;
    const auto cells = split(content, '|');
    if (cells.size() < 3 || cells.size() > 4) {
      throw ValidationError(ErrorKind::kInvalidScore, where,
                            where + ": expected `Ci | value | evidence | refs`");
    }
    criteria::RubricScore s;
    s.criterion_id = cells[0];
    try {
      std::size_t used = 0;
      s.value = std::stoi(cells[1], &used);
      if (used != cells[1].size()) throw std::invalid_argument(cells[1]);
    } catch (const std::exception&) {
      throw ValidationError(ErrorKind::kInvalidScore, where, where + ": score '" + cells[1] + "' is not an integer");
    }
    s.evidence = cells[2];
    if (cells.size() == 4) {
      for (auto& r : split(cells[3], ';')) {
        if (!r.empty()) s.evidence_refs.push_back(r);
      }
    }
    try {
      criteria::validate(s);
    } catch (const Error& e) {
      throw ValidationError(ErrorKind::kInvalidScore, where, where + ": " + e.what());
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace ahpeval::cli
