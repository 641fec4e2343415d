#include "popmatch/textio.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace popmatch {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line(line) {}

namespace {

bool is_identifier(const std::string& token) {
  if (token.empty()) return false;
  for (char c : token) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::string padded;
  for (char c : line) {
    if (c == '(' || c == ')') {
      padded += ' ';
      padded += c;
      padded += ' ';
    } else {
      padded += c;
    }
  }
  std::istringstream in(padded);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

struct RawLine {
  int number;
  std::string text;
};

std::vector<RawLine> content_lines(const std::string& text) {
  std::vector<RawLine> lines;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    lines.push_back({number, line.substr(first, last - first + 1)});
  }
  return lines;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  std::vector<RawLine> lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing 'problem:' header");

  std::size_t pos = 0;
  {
    std::vector<std::string> tokens = tokenize(lines[0].text);
    if (tokens.size() != 2 || tokens[0] != "problem:") {
      throw ParseError(lines[0].number,
                       "expected 'problem: house|marriage|roommates'");
    }
    ++pos;
  }
  Kind kind;
  {
    std::string k = tokenize(lines[0].text)[1];
    if (k == "house") {
      kind = Kind::House;
    } else if (k == "marriage") {
      kind = Kind::Marriage;
    } else if (k == "roommates") {
      kind = Kind::Roommates;
    } else {
      throw ParseError(lines[0].number, "unknown problem kind '" + k + "'");
    }
  }

  std::vector<AgentSpec> agents;
  std::vector<std::string> items;
  std::map<std::string, Vertex> agent_id;
  std::map<std::string, int> item_index;
  struct RawPref {
    int line;
    std::string owner;
    std::vector<std::vector<std::string>> tiers;
  };
  std::vector<RawPref> raw_prefs;

  for (; pos < lines.size(); ++pos) {
    const RawLine& raw = lines[pos];
    std::vector<std::string> tokens = tokenize(raw.text);
    const std::string& verb = tokens[0];
    if (verb == "agent") {
      if (tokens.size() < 2 || !is_identifier(tokens[1])) {
        throw ParseError(raw.number, "expected 'agent <id> [...]'");
      }
      AgentSpec spec;
      spec.name = tokens[1];
      std::size_t i = 2;
      while (i < tokens.size()) {
        if (tokens[i] == "weight" && i + 1 < tokens.size()) {
          try {
            spec.weight = parse_rational(tokens[i + 1]);
          } catch (const std::invalid_argument& e) {
            throw ParseError(raw.number, e.what());
          }
          if (spec.weight < 0) {
            throw ParseError(raw.number, "agent '" + spec.name +
                                             "' has a negative weight");
          }
          i += 2;
        } else if (tokens[i] == "side" && i + 1 < tokens.size()) {
          if (tokens[i + 1] == "left") {
            spec.side = Side::Left;
          } else if (tokens[i + 1] == "right") {
            spec.side = Side::Right;
          } else {
            throw ParseError(raw.number,
                             "side must be 'left' or 'right', got '" +
                                 tokens[i + 1] + "'");
          }
          i += 2;
        } else {
          throw ParseError(raw.number,
                           "unexpected token '" + tokens[i] + "'");
        }
      }
      if (agent_id.count(spec.name) || item_index.count(spec.name)) {
        throw ParseError(raw.number,
                         "duplicate identifier '" + spec.name + "'");
      }
      agent_id[spec.name] = static_cast<Vertex>(agents.size());
      agents.push_back(std::move(spec));
    } else if (verb == "item") {
      if (kind != Kind::House) {
        throw ParseError(raw.number, "items are only valid in house instances");
      }
      if (tokens.size() != 2 || !is_identifier(tokens[1])) {
        throw ParseError(raw.number, "expected 'item <id>'");
      }
      if (agent_id.count(tokens[1]) || item_index.count(tokens[1])) {
        throw ParseError(raw.number,
                         "duplicate identifier '" + tokens[1] + "'");
      }
      item_index[tokens[1]] = static_cast<int>(items.size());
      items.push_back(tokens[1]);
    } else if (verb == "pref") {
      if (tokens.size() < 2) {
        throw ParseError(raw.number, "expected 'pref <id>: ...'");
      }
      std::string owner = tokens[1];
      bool colon_attached = false;
      if (!owner.empty() && owner.back() == ':') {
        owner.pop_back();
        colon_attached = true;
      }
      std::size_t i = 2;
      if (!colon_attached) {
        if (i >= tokens.size() || tokens[i] != ":") {
          throw ParseError(raw.number, "expected ':' after the agent name");
        }
        ++i;
      }
      RawPref pref;
      pref.line = raw.number;
      pref.owner = owner;
      while (i < tokens.size()) {
        if (tokens[i] == "(") {
          std::vector<std::string> group;
          ++i;
          while (i < tokens.size() && tokens[i] != ")") {
            group.push_back(tokens[i]);
            ++i;
          }
          if (i == tokens.size()) {
            throw ParseError(raw.number, "unterminated tie group");
          }
          if (group.empty()) {
            throw ParseError(raw.number, "empty tie group");
          }
          ++i;
          pref.tiers.push_back(std::move(group));
        } else if (tokens[i] == ")") {
          throw ParseError(raw.number, "unmatched ')'");
        } else {
          pref.tiers.push_back({tokens[i]});
          ++i;
        }
      }
      raw_prefs.push_back(std::move(pref));
    } else {
      throw ParseError(raw.number, "unknown directive '" + verb + "'");
    }
  }

  int n = static_cast<int>(agents.size());
  auto resolve = [&](const std::string& name, int line) -> Vertex {
    auto a = agent_id.find(name);
    if (a != agent_id.end()) return a->second;
    auto it = item_index.find(name);
    if (it != item_index.end()) return n + it->second;
    throw ParseError(line, "unknown identifier '" + name + "'");
  };

  std::vector<PreferenceOrder> prefs(n);
  std::vector<char> has_pref(n, 0);
  for (const RawPref& raw : raw_prefs) {
    auto owner_it = agent_id.find(raw.owner);
    if (owner_it == agent_id.end()) {
      throw ParseError(raw.line, "unknown identifier '" + raw.owner + "'");
    }
    Vertex owner = owner_it->second;
    if (has_pref[owner]) {
      throw ParseError(raw.line,
                       "duplicate pref line for '" + raw.owner + "'");
    }
    has_pref[owner] = 1;
    PreferenceOrder order;
    for (const auto& tier : raw.tiers) {
      std::vector<Vertex> resolved;
      for (const std::string& name : tier) {
        resolved.push_back(resolve(name, raw.line));
      }
      order.tiers.push_back(std::move(resolved));
    }
    prefs[owner] = std::move(order);
  }

  return Instance(kind, std::move(agents), std::move(items),
                  std::move(prefs));
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << "problem: " << kind_name(instance.kind()) << "\n";
  for (Vertex a = 0; a < instance.agent_count(); ++a) {
    const AgentSpec& spec = instance.agent(a);
    out << "agent " << spec.name;
    if (spec.weight != 1) {
      out << " weight " << rational_to_string(spec.weight);
    }
    if (spec.side.has_value()) {
      out << " side " << (*spec.side == Side::Left ? "left" : "right");
    }
    out << "\n";
  }
  for (Vertex v = instance.agent_count(); v < instance.vertex_count(); ++v) {
    out << "item " << instance.name(v) << "\n";
  }
  for (Vertex a = 0; a < instance.agent_count(); ++a) {
    const PreferenceOrder& order = instance.preferences(a);
    if (order.tiers.empty()) continue;
    out << "pref " << instance.name(a) << ":";
    for (const auto& tier : order.tiers) {
      if (tier.size() == 1) {
        out << " " << instance.name(tier.front());
      } else {
        out << " (";
        for (std::size_t i = 0; i < tier.size(); ++i) {
          if (i > 0) out << " ";
          out << instance.name(tier[i]);
        }
        out << ")";
      }
    }
    out << "\n";
  }
  return out.str();
}

namespace {

std::vector<Edge> parse_match_lines(const Instance& instance,
                                    const std::vector<RawLine>& lines) {
  std::vector<Edge> edges;
  for (const RawLine& raw : lines) {
    std::vector<std::string> tokens = tokenize(raw.text);
    if (tokens.size() != 3 || tokens[0] != "match") {
      throw ParseError(raw.number, "expected 'match <id> <id>'");
    }
    auto resolve = [&](const std::string& name) {
      auto v = instance.find_vertex(name);
      if (!v.has_value()) {
        throw ParseError(raw.number, "unknown identifier '" + name + "'");
      }
      return *v;
    };
    Vertex u = resolve(tokens[1]);
    Vertex v = resolve(tokens[2]);
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return edges;
}

std::string render_matching(const Instance& instance, const Matching& m) {
  std::vector<std::string> lines;
  for (const auto& [u, v] : m.edges()) {
    lines.push_back("match " + instance.name(u) + " " + instance.name(v));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += "\n";
  }
  return out;
}

}  // namespace

Matching parse_matching(const Instance& instance, const std::string& text) {
  std::vector<RawLine> lines = content_lines(text);
  for (const RawLine& raw : lines) {
    if (raw.text == "---") {
      throw ParseError(raw.number, "unexpected '---' in a single matching");
    }
  }
  Matching m(parse_match_lines(instance, lines));
  instance.check_matching(m);
  return m;
}

WinningSet parse_winning_set(const Instance& instance,
                             const std::string& text) {
  std::vector<RawLine> lines = content_lines(text);
  WinningSet ws;
  std::vector<RawLine> chunk;
  auto flush = [&]() {
    Matching m(parse_match_lines(instance, chunk));
    instance.check_matching(m);
    ws.matchings.push_back(std::move(m));
    chunk.clear();
  };
  for (const RawLine& raw : lines) {
    if (raw.text == "---") {
      flush();
    } else {
      chunk.push_back(raw);
    }
  }
  flush();
  return ws;
}

std::string serialize_matching(const Instance& instance, const Matching& m) {
  return render_matching(instance, m);
}

std::string serialize_winning_set(const Instance& instance,
                                  const WinningSet& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.matchings.size(); ++i) {
    if (i > 0) out += "---\n";
    out += render_matching(instance, ws.matchings[i]);
  }
  return out;
}

std::string serialize_report(const Instance& instance,
                             const VerificationReport& report) {
  if (report.verdict) return "VERIFIED\n";
  std::string out = "DEFEATED\n";
  out += "for " + rational_to_string(report.tally->weight_for) + "\n";
  out += "against " + rational_to_string(report.tally->weight_against) + "\n";
  out += render_matching(instance, *report.witness);
  return out;
}

}  // namespace popmatch
