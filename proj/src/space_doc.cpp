#include "topocheck/space_doc.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace topocheck {
namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

bool is_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
           c == '-' || c == '.';
  });
}

std::string located(int line, int column, const std::string& what) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
}

}  // namespace

SpaceDoc parse_space(std::string_view text) {
  if (text.size() > kMaxDocumentBytes) {
    throw Error(Errc::kSizeLimitExceeded,
                "document is " + std::to_string(text.size()) + " bytes; limit is " +
                    std::to_string(kMaxDocumentBytes));
  }
  SpaceDoc doc;
  bool have_name = false;
  bool have_points = false;
  std::map<std::string, int, std::less<>> index;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;
    const Token& head = tokens.front();

    if (head.text == "space") {
      if (have_name) throw ParseError("duplicate 'space' line", line_no, head.column);
      if (tokens.size() != 2) {
        const int col = tokens.size() < 2 ? static_cast<int>(line.size()) + 1 : tokens[2].column;
        throw ParseError("expected exactly one space name", line_no, col);
      }
      if (!is_name(tokens[1].text)) {
        throw ParseError("invalid space name '" + tokens[1].text + "'", line_no, tokens[1].column);
      }
      doc.name = tokens[1].text;
      have_name = true;
    } else if (head.text == "points") {
      if (!have_name) throw ParseError("expected 'space' line first", line_no, head.column);
      if (have_points) throw ParseError("duplicate 'points' line", line_no, head.column);
      if (tokens.size() < 2) {
        throw ParseError("expected at least one point", line_no, static_cast<int>(line.size()) + 1);
      }
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto [it, inserted] = index.emplace(tokens[i].text, static_cast<int>(doc.points.size()));
        if (!inserted) {
          throw Error(Errc::kDuplicateLabel,
                      located(line_no, tokens[i].column, "duplicate label '" + tokens[i].text + "'"));
        }
        doc.points.push_back(tokens[i].text);
      }
      have_points = true;
    } else if (head.text == "open") {
      if (!have_points) throw ParseError("expected 'points' line before 'open'", line_no, head.column);
      std::vector<std::string> members;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (index.find(tokens[i].text) == index.end()) {
          throw Error(Errc::kUnknownLabel,
                      located(line_no, tokens[i].column, "unknown label '" + tokens[i].text + "'"));
        }
        members.push_back(tokens[i].text);
      }
      doc.opens.push_back(std::move(members));
    } else {
      throw ParseError("unknown directive '" + head.text + "'", line_no, head.column);
    }
  }
  if (!have_name) throw ParseError("missing 'space' line", line_no, 1);
  if (!have_points) throw ParseError("missing 'points' line", line_no, 1);
  return doc;
}

SpaceDoc canonicalize(const SpaceDoc& doc) {
  std::map<std::string, int, std::less<>> index;
  for (std::size_t i = 0; i < doc.points.size(); ++i) index.emplace(doc.points[i], static_cast<int>(i));
  std::vector<std::vector<int>> sets;
  for (const auto& open : doc.opens) {
    std::vector<int> members;
    for (const std::string& label : open) {
      const auto it = index.find(label);
      if (it == index.end()) throw Error(Errc::kUnknownLabel, "unknown label '" + label + "'");
      members.push_back(it->second);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members.size() == doc.points.size()) continue;
    sets.push_back(std::move(members));
  }
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  SpaceDoc out{doc.name, doc.points, {}};
  for (const auto& members : sets) {
    std::vector<std::string> labels;
    for (int i : members) labels.push_back(doc.points[static_cast<std::size_t>(i)]);
    out.opens.push_back(std::move(labels));
  }
  return out;
}

std::string render_space(const SpaceDoc& doc) {
  const SpaceDoc c = canonicalize(doc);
  std::string out = "space " + c.name + "\npoints";
  for (const std::string& p : c.points) out += " " + p;
  out += "\n";
  for (const auto& open : c.opens) {
    out += "open";
    for (const std::string& label : open) out += " " + label;
    out += "\n";
  }
  return out;
}

FiniteSpace to_space(const SpaceDoc& doc) {
  if (doc.points.empty()) throw Error(Errc::kEmptyCarrier, "space has no points");
  if (doc.points.size() > 64) {
    throw Error(Errc::kSizeLimitExceeded,
                "space has " + std::to_string(doc.points.size()) + " points; limit is 64");
  }
  const int n = static_cast<int>(doc.points.size());
  std::map<std::string, int, std::less<>> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(doc.points[static_cast<std::size_t>(i)], i).second) {
      throw Error(Errc::kDuplicateLabel, "duplicate label '" + doc.points[static_cast<std::size_t>(i)] + "'");
    }
  }
  std::vector<PointSet> family;
  for (const auto& open : doc.opens) {
    PointSet u = PointSet::empty(n);
    for (const std::string& label : open) {
      const auto it = index.find(label);
      if (it == index.end()) throw Error(Errc::kUnknownLabel, "unknown label '" + label + "'");
      u = u.with(it->second);
    }
    family.push_back(u);
  }
  return validate_topology(n, family, TopologyMode::kStrict, doc.points);
}

SpaceDoc to_doc(const FiniteSpace& sp, std::string name) {
  SpaceDoc doc{std::move(name), sp.labels(), {}};
  for (const PointSet& u : sp.opens()) {
    if (u.is_empty() || u.is_full()) continue;
    std::vector<std::string> labels;
    u.for_each([&](int p) { labels.push_back(sp.label(p)); });
    doc.opens.push_back(std::move(labels));
  }
  return canonicalize(doc);
}

PointSet parse_label_set(const FiniteSpace& sp, std::string_view text) {
  PointSet out = sp.empty_set();
  if (text.empty()) return out;

  // Top-level comma split; parentheses group a label that contains commas.
  std::vector<std::string> items;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      items.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  items.push_back(current);

  auto lookup = [&](const std::string& label) -> std::optional<int> {
    if (auto p = sp.find_label(label)) return p;
    if (label.size() >= 2 && label.front() == '(' && label.back() == ')') {
      return sp.find_label(std::string_view(label).substr(1, label.size() - 2));
    }
    return std::nullopt;
  };

  std::size_t i = 0;
  while (i < items.size()) {
    // Longest run of items that names a single label.
    std::optional<int> match;
    std::size_t next = i + 1;
    std::string joined;
    for (std::size_t j = i; j < items.size(); ++j) {
      joined += (j == i ? "" : ",") + items[j];
      if (auto p = lookup(joined)) {
        match = p;
        next = j + 1;
      }
    }
    if (!match) throw Error(Errc::kUnknownLabel, "unknown label '" + items[i] + "'");
    out = out.with(*match);
    i = next;
  }
  return out;
}

}  // namespace topocheck
