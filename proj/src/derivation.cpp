#include "lgw/derivation.hpp"

#include <json.hpp>

#include "lgw/syntax.hpp"

namespace lgw {
namespace {

bool check_node(const Derivation& d, const Logic& logic, const std::string& path,
                CheckReport& report) {
  RuleInstance inst;
  inst.rule = d.rule;
  inst.conclusion = d.conclusion;
  for (const Derivation& c : d.children) inst.premises.push_back(c.conclusion);
  std::string why;
  if (!check(inst, logic, &why)) {
    report.ok = false;
    report.where = path;
    report.message = why;
    return false;
  }
  for (size_t i = 0; i < d.children.size(); ++i) {
    if (!check_node(d.children[i], logic, path + "." + std::to_string(i), report))
      return false;
  }
  return true;
}

}  // namespace

CheckReport check_derivation(const Derivation& d, const Logic& logic) {
  CheckReport report;
  check_node(d, logic, "root", report);
  return report;
}

Derivation erase_derivation(const Derivation& d) {
  auto mapped = erased_rule(d.rule);
  if (!mapped.has_value()) {
    // Weakening: conclusion and premise erase to the same sequent.
    return erase_derivation(d.children.at(0));
  }
  Derivation out;
  out.rule = *mapped;
  out.conclusion = erase_pure(d.conclusion);
  for (const Derivation& c : d.children) out.children.push_back(erase_derivation(c));
  return out;
}

size_t derivation_size(const Derivation& d) {
  size_t n = 1;
  for (const Derivation& c : d.children) n += derivation_size(c);
  return n;
}

namespace {

void to_text(const Derivation& d, int depth, std::string& out) {
  out.append(static_cast<size_t>(depth) * 2, ' ');
  out += rule_name(d.rule);
  out += ": ";
  out += print_sequent(d.conclusion);
  out += '\n';
  for (const Derivation& c : d.children) to_text(c, depth + 1, out);
}

}  // namespace

std::string derivation_to_text(const Derivation& d) {
  std::string out;
  to_text(d, 0, out);
  return out;
}

Derivation derivation_from_text(const std::string& text) {
  struct Line {
    int depth;
    RuleId rule;
    Sequent seq;
  };
  std::vector<Line> lines;
  size_t pos = 0, lineno = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    size_t indent = line.find_first_not_of(' ');
    if (indent == std::string::npos) continue;  // blank
    if (indent % 2 != 0)
      throw ParseError("line " + std::to_string(lineno) + ": odd indentation in derivation line");
    size_t colon = line.find(':', indent);
    if (colon == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": derivation line missing ':'");
    std::string name = line.substr(indent, colon - indent);
    auto rule = rule_from_name(name);
    if (!rule.has_value()) throw ParseError("line " + std::to_string(lineno) + ": unknown rule '" + name + "'");
    lines.push_back({static_cast<int>(indent / 2), *rule,
                     parse_sequent(line.substr(colon + 1))});
  }
  if (lines.empty()) throw ParseError("empty derivation");
  if (lines[0].depth != 0) throw ParseError("line 1: root must be unindented");

  // Attach each line to the most recent line one level shallower.
  Derivation root{lines[0].rule, lines[0].seq, {}};
  std::vector<Derivation*> stack{&root};
  for (size_t i = 1; i < lines.size(); ++i) {
    int depth = lines[i].depth;
    if (depth < 1 || depth > static_cast<int>(stack.size()))
      throw ParseError("line " + std::to_string(i + 1) + ": derivation line indented too deep");
    stack.resize(static_cast<size_t>(depth));
    Derivation* parent = stack.back();
    parent->children.push_back({lines[i].rule, lines[i].seq, {}});
    stack.push_back(&parent->children.back());
  }
  return root;
}

namespace {

nlohmann::ordered_json to_json(const Derivation& d) {
  nlohmann::ordered_json j;
  j["rule"] = rule_name(d.rule);
  j["conclusion"] = print_sequent(d.conclusion);
  j["premises"] = nlohmann::ordered_json::array();
  for (const Derivation& c : d.children) j["premises"].push_back(to_json(c));
  return j;
}

Derivation from_json(const nlohmann::json& j) {
  auto rule = rule_from_name(j.at("rule").get<std::string>());
  if (!rule.has_value())
    throw ParseError("unknown rule '" + j.at("rule").get<std::string>() + "'");
  Derivation d;
  d.rule = *rule;
  d.conclusion = parse_sequent(j.at("conclusion").get<std::string>());
  for (const auto& c : j.at("premises")) d.children.push_back(from_json(c));
  return d;
}

}  // namespace

std::string derivation_to_json(const Derivation& d) {
  return to_json(d).dump(2) + "\n";
}

Derivation derivation_from_json(const std::string& text) {
  return from_json(nlohmann::json::parse(text));
}

}  // namespace lgw
