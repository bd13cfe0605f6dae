// lgw: command-line surface over the library.  Exit codes: 0 affirmative,
// 1 negative, 2 usage or input error, 3 resource limit hit.

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgw/grammar.hpp"
#include "lgw/proofnet.hpp"
#include "lgw/prover.hpp"
#include "lgw/syntax.hpp"
#include "lgw/tables.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kYes = 0, kNo = 1, kUsage = 2, kResource = 3;

struct Limits {
  lgw::SearchLimits search;
  lgw::NetSearchLimits net;
};

// "visited=N,time=S,conn=K" plus net-search keys "work", "states", "nets".
Limits parse_limits(const std::string& text) {
  Limits out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("bad --limits item (want key=value): " + item);
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    try {
      if (key == "visited")
        out.search.max_visited = std::stoull(val);
      else if (key == "time") {
        out.search.max_seconds = std::stod(val);
        out.net.max_seconds = std::stod(val);
      } else if (key == "conn")
        out.search.max_connectives = std::stoi(val);
      else if (key == "work")
        out.net.max_work = std::stoull(val);
      else if (key == "states")
        out.net.max_states = std::stoull(val);
      else if (key == "nets")
        out.net.max_nets = std::stoull(val);
      else
        throw std::invalid_argument("unknown --limits key: " + key);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad --limits value: " + item);
    }
  }
  return out;
}

const lgw::Logic& logic_or_die(const std::string& name) {
  const lgw::Logic* l = lgw::logic_by_name(name);
  if (!l) throw std::invalid_argument("unknown logic: " + name);
  return *l;
}

bool atom_shaped(const std::string& s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  for (char c : s)
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '\''))
      return false;
  return true;
}

lgw::Lexicon lexicon_for(const std::string& path, const std::string& goal) {
  lgw::Lexicon lex = lgw::load_lexicon(path);
  if (!goal.empty()) {
    if (!atom_shaped(goal))
      throw std::invalid_argument("--goal is not an atom: " + goal);
    for (const auto& w : lex.words())
      if (w == goal)
        throw std::invalid_argument("--goal collides with lexicon word: " + goal);
    lex.goal = goal;
  }
  return lex;
}

lgw::Sentence split_sentence(const std::vector<std::string>& args) {
  lgw::Sentence s;
  for (const auto& a : args) {
    std::stringstream ss(a);
    std::string w;
    while (ss >> w) s.push_back(w);
  }
  return s;
}

std::string join(const lgw::Sentence& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += s[i];
  }
  return out;
}

void indent_into(std::ostream& o, const std::string& block) {
  std::stringstream ss(block);
  std::string line;
  while (std::getline(ss, line)) o << "  " << line << "\n";
}

ordered_json derivation_json(const lgw::Derivation& d) {
  return ordered_json::parse(lgw::derivation_to_json(d));
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// ---- prove ------------------------------------------------------------------

int cmd_prove(const std::string& logic_name, const std::string& sequent_text,
              bool analytic_cut, const std::string& limits_text,
              const std::string& format, const std::string& derivation_mode) {
  const lgw::Logic& logic = logic_or_die(logic_name);
  Limits limits = parse_limits(limits_text);
  lgw::Sequent goal = lgw::parse_sequent(sequent_text);
  lgw::Prover prover(logic, limits.search, analytic_cut);
  lgw::SearchResult res = prover.prove(goal);

  bool with_deriv = derivation_mode == "full" && res.derivation.has_value();
  if (format == "structured") {
    ordered_json j{{"command", "prove"},
                   {"logic", logic.name},
                   {"sequent", lgw::print_sequent(goal)},
                   {"mode", analytic_cut ? "analytic-cut" : "backward"}};
    switch (res.verdict) {
      case lgw::Verdict::Provable: j["verdict"] = "provable"; break;
      case lgw::Verdict::Unprovable: j["verdict"] = "unprovable"; break;
      case lgw::Verdict::ResourceExceeded:
        j["verdict"] = "undecided";
        j["limit"] = res.limit_name;
        break;
    }
    if (with_deriv) j["derivation"] = derivation_json(*res.derivation);
    emit_json(j);
  } else {
    std::cout << "logic: " << logic.name << "\n";
    std::cout << "sequent: " << lgw::print_sequent(goal) << "\n";
    std::cout << "mode: " << (analytic_cut ? "analytic-cut" : "backward") << "\n";
    switch (res.verdict) {
      case lgw::Verdict::Provable: std::cout << "verdict: provable\n"; break;
      case lgw::Verdict::Unprovable: std::cout << "verdict: unprovable\n"; break;
      case lgw::Verdict::ResourceExceeded:
        std::cout << "verdict: undecided\nlimit: " << res.limit_name << "\n";
        break;
    }
    if (with_deriv) {
      std::cout << "derivation:\n";
      indent_into(std::cout, lgw::derivation_to_text(*res.derivation));
    }
  }
  switch (res.verdict) {
    case lgw::Verdict::Provable: return kYes;
    case lgw::Verdict::Unprovable: return kNo;
    default: return kResource;
  }
}

// ---- parse ------------------------------------------------------------------

int cmd_parse(const std::string& lexicon_path, const std::string& goal_override,
              const std::string& logic_name, const std::vector<std::string>& words,
              const std::string& limits_text, const std::string& format,
              const std::string& derivation_mode) {
  const lgw::Logic& logic = logic_or_die(logic_name);
  Limits limits = parse_limits(limits_text);
  lgw::Lexicon lex = lexicon_for(lexicon_path, goal_override);
  lgw::Sentence sentence = split_sentence(words);
  if (sentence.empty()) throw std::invalid_argument("empty sentence");
  lgw::Recognition rec = lgw::recognize(lex, sentence, logic, limits.search);

  bool with_deriv = derivation_mode == "full" && rec.witness.has_value();
  if (format == "structured") {
    ordered_json j{{"command", "parse"},
                   {"logic", logic.name},
                   {"lexicon", lexicon_path},
                   {"goal", lex.goal},
                   {"sentence", join(sentence)}};
    switch (rec.outcome) {
      case lgw::RecogOutcome::Yes: j["verdict"] = "recognized"; break;
      case lgw::RecogOutcome::No: j["verdict"] = "not recognized"; break;
      case lgw::RecogOutcome::Undecided:
        j["verdict"] = "undecided";
        j["limit"] = rec.limit_name;
        break;
    }
    if (!rec.diagnostic.empty()) j["diagnostic"] = rec.diagnostic;
    j["attempts"] = rec.attempts;
    if (rec.witness) {
      ordered_json types = ordered_json::array();
      for (size_t i = 0; i < sentence.size(); ++i)
        types.push_back(sentence[i] + ": " +
                        lgw::print_formula(rec.witness->assignment[i]));
      j["assignment"] = types;
      j["bracketing"] = lgw::print_bracketing(*rec.witness->bracketing, sentence);
      j["sequent"] = lgw::print_sequent(rec.witness->sequent);
      if (with_deriv) j["derivation"] = derivation_json(rec.witness->derivation);
    }
    emit_json(j);
  } else {
    std::cout << "logic: " << logic.name << "\n";
    std::cout << "lexicon: " << lexicon_path << "\n";
    std::cout << "goal: " << lex.goal << "\n";
    std::cout << "sentence: " << join(sentence) << "\n";
    switch (rec.outcome) {
      case lgw::RecogOutcome::Yes: std::cout << "verdict: recognized\n"; break;
      case lgw::RecogOutcome::No: std::cout << "verdict: not recognized\n"; break;
      case lgw::RecogOutcome::Undecided:
        std::cout << "verdict: undecided\nlimit: " << rec.limit_name << "\n";
        break;
    }
    if (!rec.diagnostic.empty()) std::cout << "note: " << rec.diagnostic << "\n";
    std::cout << "attempts: " << rec.attempts << "\n";
    if (rec.witness) {
      std::cout << "assignment:\n";
      for (size_t i = 0; i < sentence.size(); ++i)
        std::cout << "  " << sentence[i] << ": "
                  << lgw::print_formula(rec.witness->assignment[i]) << "\n";
      std::cout << "bracketing: "
                << lgw::print_bracketing(*rec.witness->bracketing, sentence) << "\n";
      std::cout << "sequent: " << lgw::print_sequent(rec.witness->sequent) << "\n";
      if (with_deriv) {
        std::cout << "derivation:\n";
        indent_into(std::cout, lgw::derivation_to_text(rec.witness->derivation));
      }
    }
  }
  switch (rec.outcome) {
    case lgw::RecogOutcome::Yes: return kYes;
    case lgw::RecogOutcome::No: return kNo;
    default: return kResource;
  }
}

// ---- sample -----------------------------------------------------------------

int cmd_sample(const std::string& lexicon_path, const std::string& goal_override,
               const std::string& logic_name, int max_len,
               const std::string& limits_text, const std::string& format) {
  const lgw::Logic& logic = logic_or_die(logic_name);
  Limits limits = parse_limits(limits_text);
  lgw::Lexicon lex = lexicon_for(lexicon_path, goal_override);
  lgw::LanguageSample sample =
      lgw::sample_language(lex, logic, max_len, limits.search);

  if (format == "structured") {
    ordered_json j{{"command", "sample"},
                   {"logic", logic.name},
                   {"lexicon", lexicon_path},
                   {"goal", lex.goal},
                   {"max_len", max_len}};
    ordered_json rec = ordered_json::array();
    for (const auto& s : sample.recognized) rec.push_back(join(s));
    j["recognized"] = rec;
    ordered_json und = ordered_json::array();
    for (const auto& s : sample.undecided) und.push_back(join(s));
    j["undecided"] = und;
    emit_json(j);
  } else {
    std::cout << "logic: " << logic.name << "\n";
    std::cout << "lexicon: " << lexicon_path << "\n";
    std::cout << "goal: " << lex.goal << "\n";
    std::cout << "max-len: " << max_len << "\n";
    std::cout << "recognized " << sample.recognized.size() << ":\n";
    for (const auto& s : sample.recognized) std::cout << "  " << join(s) << "\n";
    std::cout << "undecided " << sample.undecided.size() << ":\n";
    for (const auto& s : sample.undecided) std::cout << "  " << join(s) << "\n";
  }
  return sample.undecided.empty() ? kYes : kResource;
}

// ---- compare ----------------------------------------------------------------

int cmd_compare(const std::string& lexicon_path, const std::string& goal_override,
                const std::string& logic_a, const std::string& logic_b,
                int max_len, const std::string& limits_text,
                const std::string& format) {
  const lgw::Logic& la = logic_or_die(logic_a);
  const lgw::Logic& lb = logic_or_die(logic_b);
  Limits limits = parse_limits(limits_text);
  lgw::Lexicon lex = lexicon_for(lexicon_path, goal_override);
  lgw::LanguageComparison cmp =
      lgw::compare_languages(lex, la, lb, max_len, limits.search);

  std::string verdict;
  switch (cmp.kind) {
    case lgw::LanguageComparison::Kind::Equal: verdict = "equal"; break;
    case lgw::LanguageComparison::Kind::Divergent: verdict = "divergent"; break;
    case lgw::LanguageComparison::Kind::Inconclusive:
      verdict = "inconclusive";
      break;
  }
  if (format == "structured") {
    ordered_json j{{"command", "compare"},   {"lexicon", lexicon_path},
                   {"goal", lex.goal},       {"logic_a", la.name},
                   {"logic_b", lb.name},     {"max_len", max_len},
                   {"verdict", verdict},     {"undecided", cmp.undecided}};
    if (cmp.divergent) {
      j["divergent"] = join(*cmp.divergent);
      j["recognized_by"] = cmp.divergent_in_a ? la.name : lb.name;
    }
    if (cmp.first_undecided) j["first_undecided"] = join(*cmp.first_undecided);
    emit_json(j);
  } else {
    std::cout << "lexicon: " << lexicon_path << "\n";
    std::cout << "goal: " << lex.goal << "\n";
    std::cout << "logic-a: " << la.name << "\n";
    std::cout << "logic-b: " << lb.name << "\n";
    std::cout << "max-len: " << max_len << "\n";
    std::cout << "verdict: " << verdict << "\n";
    if (cmp.divergent)
      std::cout << "divergent: " << join(*cmp.divergent) << "\n"
                << "recognized-by: " << (cmp.divergent_in_a ? la.name : lb.name)
                << "\n";
    std::cout << "undecided: " << cmp.undecided << "\n";
    if (cmp.first_undecided)
      std::cout << "first-undecided: " << join(*cmp.first_undecided) << "\n";
  }
  switch (cmp.kind) {
    case lgw::LanguageComparison::Kind::Equal: return kYes;
    case lgw::LanguageComparison::Kind::Divergent: return kNo;
    default: return kResource;
  }
}

// ---- net --------------------------------------------------------------------

void describe_structure(std::ostream& o, const lgw::ProofStructure& ps) {
  o << "vertices: " << ps.vertices.size() << "\n";
  for (size_t v = 0; v < ps.vertices.size(); ++v)
    o << "  v" << v << ": " << lgw::print_formula(ps.vertices[v]) << "\n";
  o << "links: " << ps.links.size() << "\n";
  for (size_t i = 0; i < ps.links.size(); ++i) {
    const lgw::Link& l = ps.links[i];
    o << "  l" << i << ": " << lgw::link_type_name(l.type) << "/"
      << lgw::conn_name(l.family);
    if (l.from_punctuation) o << " punct";
    if (l.merged) o << " merged";
    auto ent = [&](int e) {
      return (e < static_cast<int>(ps.vertices.size()) ? "v" : "l") +
             std::to_string(e < static_cast<int>(ps.vertices.size())
                                ? e
                                : e - static_cast<int>(ps.vertices.size()));
    };
    o << " " << ent(l.ports[0]) << " " << ent(l.ports[1]) << " -> "
      << (l.ports[2] >= 0 ? ent(l.ports[2]) : std::string("-")) << "\n";
  }
}

int cmd_net(const std::string& logic_name, const std::string& sequent_text,
            bool all, bool dot, const std::string& limits_text,
            const std::string& format) {
  const lgw::Logic& logic = logic_or_die(logic_name);
  Limits limits = parse_limits(limits_text);
  lgw::Sequent goal = lgw::parse_sequent(sequent_text);

  if (all) {
    lgw::NetSearchResult res = lgw::all_structures(goal, logic, limits.net);
    std::map<int, int> by_genus;
    for (const auto& ps : res.nets) ++by_genus[lgw::genus(ps)];
    bool planar = by_genus.count(0) > 0;
    if (format == "structured") {
      ordered_json j{{"command", "net"},
                     {"logic", logic.name},
                     {"sequent", lgw::print_sequent(goal)},
                     {"mode", "all"},
                     {"nets", res.nets.size()},
                     {"derivations", res.derivations},
                     {"exhausted", res.exhausted}};
      if (!res.limit_name.empty()) j["limit"] = res.limit_name;
      ordered_json g = ordered_json::object();
      for (auto [k, v] : by_genus) g[std::to_string(k)] = v;
      j["genus"] = g;
      j["planar"] = planar;
      emit_json(j);
    } else {
      std::cout << "logic: " << logic.name << "\n";
      std::cout << "sequent: " << lgw::print_sequent(goal) << "\n";
      std::cout << "nets: " << res.nets.size() << "\n";
      std::cout << "derivations: " << res.derivations << "\n";
      std::cout << "exhausted: " << (res.exhausted ? "yes" : "no") << "\n";
      if (!res.limit_name.empty()) std::cout << "limit: " << res.limit_name << "\n";
      std::cout << "genus:";
      for (auto [k, v] : by_genus) std::cout << " " << k << "x" << v;
      std::cout << "\n";
      std::cout << "planar: " << (planar ? "yes" : "no") << "\n";
    }
    if (planar) return kYes;
    return res.exhausted ? kNo : kResource;
  }

  lgw::Prover prover(logic, limits.search);
  lgw::SearchResult res = prover.prove(goal);
  if (res.verdict == lgw::Verdict::ResourceExceeded) {
    std::cout << "verdict: undecided\nlimit: " << res.limit_name << "\n";
    return kResource;
  }
  if (res.verdict == lgw::Verdict::Unprovable) {
    std::cout << "verdict: unprovable\n";
    return kNo;
  }
  lgw::ProofStructure ps = lgw::to_proof_structure(*res.derivation);
  if (dot) {
    std::cout << lgw::to_dot(ps);
    return lgw::genus(ps) == 0 ? kYes : kNo;
  }
  int g = lgw::genus(ps);
  if (format == "structured") {
    ordered_json j{{"command", "net"},
                   {"logic", logic.name},
                   {"sequent", lgw::print_sequent(goal)},
                   {"verdict", "provable"},
                   {"vertices", ps.vertices.size()},
                   {"links", ps.links.size()},
                   {"merged", ps.merged},
                   {"genus", g},
                   {"planar", g == 0}};
    ordered_json sig = ordered_json::array();
    std::stringstream ss(lgw::net_signature(ps));
    std::string line;
    while (std::getline(ss, line)) sig.push_back(line);
    j["signature"] = sig;
    emit_json(j);
  } else {
    std::cout << "logic: " << logic.name << "\n";
    std::cout << "sequent: " << lgw::print_sequent(goal) << "\n";
    std::cout << "verdict: provable\n";
    describe_structure(std::cout, ps);
    std::cout << "merged: " << ps.merged << "\n";
    std::cout << "genus: " << g << "\n";
    std::cout << "planar: " << (g == 0 ? "yes" : "no") << "\n";
  }
  return g == 0 ? kYes : kNo;
}

// ---- enumerate --------------------------------------------------------------

int cmd_enumerate(const std::string& atoms_text, int max_conn,
                  const std::vector<std::string>& logic_args,
                  const std::string& limits_text, const std::string& format) {
  std::vector<std::string> atoms;
  {
    std::stringstream ss(atoms_text);
    std::string a;
    while (std::getline(ss, a, ',')) {
      if (!atom_shaped(a)) throw std::invalid_argument("bad atom: " + a);
      atoms.push_back(a);
    }
  }
  if (atoms.empty()) throw std::invalid_argument("no atoms given");
  std::vector<const lgw::Logic*> logics;
  for (const auto& arg : logic_args) {
    std::stringstream ss(arg);
    std::string name;
    while (std::getline(ss, name, ','))
      logics.push_back(&logic_or_die(name));
  }
  if (logics.empty()) throw std::invalid_argument("no logics given");
  Limits limits = parse_limits(limits_text);

  std::vector<std::unique_ptr<lgw::Prover>> provers;
  for (const lgw::Logic* l : logics)
    provers.push_back(std::make_unique<lgw::Prover>(*l, limits.search));

  uint64_t rows = 0, undecided = 0;
  std::vector<uint64_t> provable(logics.size(), 0);
  ordered_json jrows = ordered_json::array();

  std::string header = "atoms: " + atoms_text + "\nmax-conn: " +
                       std::to_string(max_conn) + "\nlogics:";
  for (const lgw::Logic* l : logics) header += " " + l->name;
  if (format != "structured") std::cout << header << "\n";

  lgw::for_each_leaf_pair(atoms, max_conn, [&](const lgw::Sequent& s) {
    ++rows;
    std::string line = lgw::print_sequent(s) + ":";
    ordered_json cells = ordered_json::array();
    for (size_t i = 0; i < provers.size(); ++i) {
      lgw::SearchResult r = provers[i]->prove(s);
      switch (r.verdict) {
        case lgw::Verdict::Provable:
          line += " yes";
          cells.push_back("yes");
          ++provable[i];
          break;
        case lgw::Verdict::Unprovable:
          line += " no";
          cells.push_back("no");
          break;
        case lgw::Verdict::ResourceExceeded:
          line += " undecided";
          cells.push_back("undecided");
          ++undecided;
          break;
      }
    }
    if (format == "structured") {
      ordered_json row{{"sequent", lgw::print_sequent(s)}};
      row["verdicts"] = cells;
      jrows.push_back(row);
    } else {
      std::cout << line << "\n";
    }
  });

  if (format == "structured") {
    ordered_json j{{"command", "enumerate"},
                   {"atoms", atoms_text},
                   {"max_conn", max_conn}};
    ordered_json names = ordered_json::array();
    for (const lgw::Logic* l : logics) names.push_back(l->name);
    j["logics"] = names;
    j["rows"] = jrows;
    j["row_count"] = rows;
    ordered_json prov = ordered_json::object();
    for (size_t i = 0; i < logics.size(); ++i)
      prov[logics[i]->name] = provable[i];
    j["provable"] = prov;
    j["undecided"] = undecided;
    emit_json(j);
  } else {
    std::cout << "rows: " << rows << "\n";
    for (size_t i = 0; i < logics.size(); ++i)
      std::cout << "provable[" << logics[i]->name << "]: " << provable[i] << "\n";
    std::cout << "undecided: " << undecided << "\n";
  }
  return undecided == 0 ? kYes : kResource;
}

// ---- rules ------------------------------------------------------------------

int cmd_rules(const std::string& logic_name, const std::string& format) {
  const lgw::Logic* filter =
      logic_name.empty() ? nullptr : &logic_or_die(logic_name);
  if (format == "structured") {
    ordered_json j{{"command", "rules"}};
    ordered_json arr = ordered_json::array();
    for (const auto& doc : lgw::rule_table()) {
      if (filter && !filter->contains(doc.rule)) continue;
      ordered_json r{{"name", doc.name}, {"schema", doc.schema}};
      ordered_json in = ordered_json::array();
      for (const auto& l : doc.logics) in.push_back(l);
      r["logics"] = in;
      arr.push_back(r);
    }
    j["rules"] = arr;
    emit_json(j);
  } else {
    for (const auto& doc : lgw::rule_table()) {
      if (filter && !filter->contains(doc.rule)) continue;
      std::cout << doc.name << ": " << doc.schema << "  [";
      for (size_t i = 0; i < doc.logics.size(); ++i)
        std::cout << (i ? " " : "") << doc.logics[i];
      std::cout << "]\n";
    }
  }
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for the Lambek-Grishin family of display calculi"};
  app.require_subcommand(1);

  std::string logic, logic_b, sequent, lexicon, goal, atoms = "a,b";
  std::string limits, format = "text", derivation = "full";
  std::vector<std::string> words, logic_list;
  int max_len = 0, max_conn = 0;
  bool analytic_cut = false, all_nets = false, dot = false;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--limits", limits, "search limits, e.g. visited=100000,time=5");
    c->add_option("--format", format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  CLI::App* prove = app.add_subcommand("prove", "decide a sequent");
  prove->add_option("--logic", logic, "logic preset")->required();
  prove->add_option("--sequent", sequent, "sequent text")->required();
  prove->add_flag("--analytic-cut", analytic_cut, "allow analytic cuts");
  prove->add_option("--derivation", derivation, "full | none")
      ->check(CLI::IsMember({"full", "none"}));
  add_common(prove);

  CLI::App* parse = app.add_subcommand("parse", "recognize a sentence");
  parse->add_option("--lexicon", lexicon, "lexicon file")->required();
  parse->add_option("--logic", logic, "logic preset")->required();
  parse->add_option("--goal", goal, "override the lexicon goal atom");
  parse->add_option("--derivation", derivation, "full | none")
      ->check(CLI::IsMember({"full", "none"}));
  parse->add_option("sentence", words, "sentence words")->required();
  add_common(parse);

  CLI::App* sample = app.add_subcommand("sample", "list the recognized language");
  sample->add_option("--lexicon", lexicon, "lexicon file")->required();
  sample->add_option("--logic", logic, "logic preset")->required();
  sample->add_option("--goal", goal, "override the lexicon goal atom");
  sample->add_option("--max-len", max_len, "maximum sentence length")->required();
  add_common(sample);

  CLI::App* compare = app.add_subcommand("compare", "compare two logics' languages");
  compare->add_option("--lexicon", lexicon, "lexicon file")->required();
  compare->add_option("--logic", logic, "first logic")->required();
  compare->add_option("--logic-b", logic_b, "second logic")->required();
  compare->add_option("--goal", goal, "override the lexicon goal atom");
  compare->add_option("--max-len", max_len, "maximum sentence length")->required();
  add_common(compare);

  CLI::App* net = app.add_subcommand("net", "proof structure and genus");
  net->add_option("--logic", logic, "logic preset")->required();
  net->add_option("--sequent", sequent, "sequent text")->required();
  net->add_flag("--all", all_nets, "enumerate all structures exhaustively");
  net->add_flag("--dot", dot, "emit graphviz instead of the report");
  add_common(net);

  CLI::App* enumerate = app.add_subcommand("enumerate", "provability table");
  enumerate->add_option("--atoms", atoms, "comma-separated atoms");
  enumerate->add_option("--max-conn", max_conn, "connective bound")->required();
  enumerate->add_option("--logic", logic_list, "logic preset (repeatable)")
      ->required();
  add_common(enumerate);

  CLI::App* rules = app.add_subcommand("rules", "print the rule table");
  rules->add_option("--logic", logic, "restrict to one preset");
  rules->add_option("--format", format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));

  int rc = kYes;
  prove->callback([&] {
    rc = cmd_prove(logic, sequent, analytic_cut, limits, format, derivation);
  });
  parse->callback([&] {
    rc = cmd_parse(lexicon, goal, logic, words, limits, format, derivation);
  });
  sample->callback(
      [&] { rc = cmd_sample(lexicon, goal, logic, max_len, limits, format); });
  compare->callback([&] {
    rc = cmd_compare(lexicon, goal, logic, logic_b, max_len, limits, format);
  });
  net->callback(
      [&] { rc = cmd_net(logic, sequent, all_nets, dot, limits, format); });
  enumerate->callback(
      [&] { rc = cmd_enumerate(atoms, max_conn, logic_list, limits, format); });
  rules->callback([&] { rc = cmd_rules(logic, format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  } catch (const lgw::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return rc;
}
