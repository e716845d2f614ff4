#include "ahpeval/panel/panel.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "ahpeval/error.hpp"
#include "ahpeval/panel/digest.hpp"

namespace ahpeval::panel {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Line {
  std::size_t number = 0;  // 1-based within the raw text
  std::string_view text;
};

// Lines strictly between the BEGIN and END markers. A missing END marker
// means the reply was cut off; whatever follows BEGIN is used.
std::vector<Line> block_lines(std::string_view raw) {
  std::vector<Line> lines;
  bool inside = false;
  bool found = false;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= raw.size()) {
    const auto end = raw.find('\n', pos);
    const auto text = raw.substr(pos, end == std::string_view::npos ? raw.size() - pos : end - pos);
    ++number;
    const auto t = trim(text);
    if (!inside && t == kJudgmentsBegin) {
      inside = true;
      found = true;
    } else if (inside && t == kJudgmentsEnd) {
      inside = false;
      break;
    } else if (inside && !t.empty() && t.substr(0, 3) != "```") {
      lines.push_back({number, t});
    }
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  if (!found) {
    throw MalformedJudgmentError("", 0,
                                 "reply has no '" + std::string(kJudgmentsBegin) + "' block");
  }
  return lines;
}

struct ParsedLine {
  PairIndex pair;
  ahp::SaatyJudgment value;  // oriented so that pair.i < pair.j
  std::string rationale;
  std::size_t line = 0;
};

ParsedLine parse_line(const Line& line, const criteria::CriteriaSet& set) {
  auto malformed = [&](std::string_view span, const std::string& why) {
    return MalformedJudgmentError(std::string(span), line.number,
                                  "line " + std::to_string(line.number) + ": " + why + " in '" +
                                      std::string(line.text) + "'");
  };
  std::string_view fields[3];
  std::string_view rest = line.text;
  for (auto& f : fields) {
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw malformed(line.text, "expected '<id>, <id>, <intensity>, <rationale>'");
    }
    f = trim(rest.substr(0, comma));
    rest = rest.substr(comma + 1);
  }
  const auto rationale = trim(rest);

  const auto a = set.index_of(fields[0]);
  if (!a) throw malformed(fields[0], "unknown criterion id '" + std::string(fields[0]) + "'");
  const auto b = set.index_of(fields[1]);
  if (!b) throw malformed(fields[1], "unknown criterion id '" + std::string(fields[1]) + "'");
  if (*a == *b) throw malformed(fields[1], "a criterion cannot be compared with itself");

  const auto value = ahp::SaatyJudgment::try_parse(fields[2]);
  if (!value) {
    throw malformed(fields[2], "intensity '" + std::string(fields[2]) +
                                   "' is not on the Saaty scale (k or 1/k, k = 1..9)");
  }
  if (rationale.empty()) throw malformed(line.text, "missing rationale");

  ParsedLine out;
  out.line = line.number;
  out.rationale = std::string(rationale);
  if (*a < *b) {
    out.pair = {*a, *b};
    out.value = *value;
  } else {
    out.pair = {*b, *a};
    out.value = value->reciprocal();
  }
  return out;
}

std::map<PairIndex, ParsedLine> parse_block(std::string_view raw, const criteria::CriteriaSet& set,
                                            const std::vector<PairIndex>* only) {
  std::map<PairIndex, ParsedLine> out;
  for (const auto& line : block_lines(raw)) {
    auto parsed = parse_line(line, set);
    if (only && std::find(only->begin(), only->end(), parsed.pair) == only->end()) continue;
    if (out.contains(parsed.pair)) {
      throw MalformedJudgmentError(
          std::string(line.text), line.number,
          "line " + std::to_string(line.number) + ": duplicate judgment for " +
              set.criteria[parsed.pair.i].id + ", " + set.criteria[parsed.pair.j].id);
    }
    out.emplace(parsed.pair, std::move(parsed));
  }
  return out;
}

[[noreturn]] void throw_missing(const std::vector<PairIndex>& missing,
                                const criteria::CriteriaSet& set) {
  std::vector<std::pair<std::string, std::string>> ids;
  std::string names;
  for (const auto& p : missing) {
    ids.emplace_back(set.criteria[p.i].id, set.criteria[p.j].id);
    if (!names.empty()) names += ", ";
    names += "(" + ids.back().first + ", " + ids.back().second + ")";
  }
  throw IncompleteResponseError(std::move(ids), "reply is missing judgments for " + names);
}

}  // namespace

JudgmentSet parse_response(std::string_view raw, const criteria::CriteriaSet& set) {
  const auto parsed = parse_block(raw, set, nullptr);
  const std::size_t n = set.size();
  std::vector<PairIndex> missing;
  JudgmentSet out;
  out.source = "panel";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto it = parsed.find({i, j});
      if (it == parsed.end()) {
        missing.push_back({i, j});
        continue;
      }
      out.judgments.push_back(
          {set.criteria[i].id, set.criteria[j].id, it->second.value, it->second.rationale});
    }
  }
  if (!missing.empty()) throw_missing(missing, set);
  out.metadata.response_digest = sha256_hex(raw);
  return out;
}

std::vector<Judgment> parse_revisions(std::string_view raw, const criteria::CriteriaSet& set,
                                      std::span<const PairIndex> pairs) {
  const std::vector<PairIndex> wanted(pairs.begin(), pairs.end());
  const auto parsed = parse_block(raw, set, &wanted);
  std::vector<PairIndex> missing;
  std::vector<Judgment> out;
  for (const auto& p : wanted) {
    const auto it = parsed.find(p);
    if (it == parsed.end()) {
      missing.push_back(p);
      continue;
    }
    out.push_back(
        {set.criteria[p.i].id, set.criteria[p.j].id, it->second.value, it->second.rationale});
  }
  if (!missing.empty()) throw_missing(missing, set);
  return out;
}

ahp::PairwiseMatrix to_matrix(const JudgmentSet& judgments, const criteria::CriteriaSet& set) {
  std::vector<ahp::UpperJudgment> upper;
  upper.reserve(judgments.judgments.size());
  for (const auto& j : judgments.judgments) {
    const auto a = set.index_of(j.first);
    const auto b = set.index_of(j.second);
    if (!a || !b) {
      throw Error(ErrorKind::kCoverageMismatch,
                  "judgment " + j.first + ", " + j.second + " is outside the criteria set");
    }
    if (*a < *b) {
      upper.push_back({{*a, *b}, j.value});
    } else {
      upper.push_back({{*b, *a}, j.value.reciprocal()});
    }
  }
  return ahp::build_matrix(set.size(), upper, set.ids());
}

}  // namespace ahpeval::panel
