#include "cgames/circuit.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace cgames {

CircuitParseError::CircuitParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line(line),
      column(column) {}

bool operator==(const Circuit& a, const Circuit& b) {
  if (a.inputs != b.inputs || a.output != b.output || a.gates.size() != b.gates.size())
    return false;
  for (size_t i = 0; i < a.gates.size(); ++i) {
    const auto &ga = a.gates[i], &gb = b.gates[i];
    if (ga.kind != gb.kind || ga.id != gb.id || ga.in0 != gb.in0) return false;
    if (ga.kind == Gate::Kind::Nand && ga.in1 != gb.in1) return false;
  }
  return true;
}

namespace {

bool valid_id(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::islower(static_cast<unsigned char>(c)) ||
          std::isdigit(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

struct Statement {
  int line;
  std::vector<std::pair<std::string, int>> tokens;  // (token, column)
};

std::vector<Statement> tokenize(const std::string& text) {
  std::vector<Statement> out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    Statement st{lineno, {}};
    size_t pos = 0;
    while (pos < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[pos]))) {
        ++pos;
        continue;
      }
      if (raw[pos] == '#') break;
      size_t start = pos;
      while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos])) &&
             raw[pos] != '#')
        ++pos;
      st.tokens.emplace_back(raw.substr(start, pos - start), static_cast<int>(start) + 1);
    }
    if (!st.tokens.empty()) out.push_back(std::move(st));
  }
  return out;
}

void check_acyclic(const Circuit& c) {
  std::unordered_map<std::string, const Gate*> by_id;
  for (const auto& g : c.gates) by_id[g.id] = &g;
  enum class Mark { None, Active, Done };
  std::unordered_map<std::string, Mark> marks;

  // iterative DFS over gate ids
  for (const auto& g : c.gates) {
    if (marks[g.id] == Mark::Done) continue;
    std::vector<std::pair<std::string, int>> stack{{g.id, 0}};
    marks[g.id] = Mark::Active;
    while (!stack.empty()) {
      auto& [id, next] = stack.back();
      const Gate* gate = by_id.at(id);
      std::vector<std::string> srcs{gate->in0};
      if (gate->kind == Gate::Kind::Nand) srcs.push_back(gate->in1);
      if (next < static_cast<int>(srcs.size())) {
        const std::string& src = srcs[next++];
        auto it = by_id.find(src);
        if (it != by_id.end()) {
          Mark m = marks[src];
          if (m == Mark::Active) throw std::invalid_argument("cycle through gate '" + src + "'");
          if (m == Mark::None) {
            marks[src] = Mark::Active;
            stack.emplace_back(src, 0);
          }
        }
      } else {
        marks[id] = Mark::Done;
        stack.pop_back();
      }
    }
  }
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  Circuit c;
  std::unordered_set<std::string> ids;
  bool have_output = false;
  int output_line = 0;

  auto declare = [&](const Statement& st, const std::string& id, int col) {
    if (!valid_id(id)) throw CircuitParseError(st.line, col, "bad id '" + id + "'");
    if (!ids.insert(id).second) throw CircuitParseError(st.line, col, "duplicate id '" + id + "'");
  };

  for (const auto& st : tokenize(text)) {
    const auto& [op, opcol] = st.tokens[0];
    auto want = [&](size_t n) {
      if (st.tokens.size() != n)
        throw CircuitParseError(st.line, opcol, op + " expects " + std::to_string(n - 1) +
                                                    " operand(s)");
    };
    if (op == "INPUT") {
      want(2);
      declare(st, st.tokens[1].first, st.tokens[1].second);
      c.inputs.push_back(st.tokens[1].first);
    } else if (op == "NOT") {
      want(3);
      declare(st, st.tokens[1].first, st.tokens[1].second);
      c.gates.push_back(Gate{Gate::Kind::Not, st.tokens[1].first, st.tokens[2].first, ""});
    } else if (op == "NAND") {
      want(4);
      declare(st, st.tokens[1].first, st.tokens[1].second);
      if (st.tokens[2].first == st.tokens[3].first)
        throw CircuitParseError(st.line, st.tokens[3].second,
                                "NAND gate with equal inputs '" + st.tokens[2].first + "'");
      c.gates.push_back(
          Gate{Gate::Kind::Nand, st.tokens[1].first, st.tokens[2].first, st.tokens[3].first});
    } else if (op == "OUTPUT") {
      want(2);
      if (have_output) throw CircuitParseError(st.line, opcol, "multiple OUTPUT statements");
      have_output = true;
      c.output = st.tokens[1].first;
      output_line = st.line;
    } else {
      throw CircuitParseError(st.line, opcol, "unknown statement '" + op + "'");
    }
  }

  if (c.inputs.empty()) throw CircuitParseError(1, 1, "circuit has no inputs");
  if (!have_output) throw CircuitParseError(1, 1, "missing OUTPUT statement");

  // dangling references (sources must be declared somewhere in the file)
  for (const auto& g : c.gates) {
    std::vector<std::string> srcs{g.in0};
    if (g.kind == Gate::Kind::Nand) srcs.push_back(g.in1);
    for (const auto& src : srcs)
      if (!ids.count(src))
        throw CircuitParseError(1, 1, "gate '" + g.id + "' references undefined id '" + src + "'");
  }
  bool output_is_gate = std::any_of(c.gates.begin(), c.gates.end(),
                                    [&](const Gate& g) { return g.id == c.output; });
  if (!output_is_gate)
    throw CircuitParseError(output_line, 1, "OUTPUT must name a gate, got '" + c.output + "'");

  try {
    check_acyclic(c);
  } catch (const std::invalid_argument& e) {
    throw CircuitParseError(1, 1, e.what());
  }
  return c;
}

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream out;
  for (const auto& id : c.inputs) out << "INPUT " << id << "\n";
  for (const auto& g : c.gates) {
    if (g.kind == Gate::Kind::Not)
      out << "NOT " << g.id << " " << g.in0 << "\n";
    else
      out << "NAND " << g.id << " " << g.in0 << " " << g.in1 << "\n";
  }
  out << "OUTPUT " << c.output << "\n";
  return out.str();
}

bool evaluate(const Circuit& c, const Assignment& x) {
  if (x.size() != c.inputs.size()) throw std::invalid_argument("assignment length mismatch");
  std::unordered_map<std::string, bool> value;
  for (size_t i = 0; i < c.inputs.size(); ++i) value[c.inputs[i]] = x[i];

  std::unordered_map<std::string, const Gate*> by_id;
  for (const auto& g : c.gates) by_id[g.id] = &g;

  // memoized recursion via explicit stack
  auto get = [&](const std::string& id) -> bool {
    std::vector<const Gate*> stack;
    if (!value.count(id)) stack.push_back(by_id.at(id));
    while (!stack.empty()) {
      const Gate* g = stack.back();
      bool ready = true;
      for (const std::string& src : g->kind == Gate::Kind::Nand
                                        ? std::vector<std::string>{g->in0, g->in1}
                                        : std::vector<std::string>{g->in0}) {
        if (!value.count(src)) {
          stack.push_back(by_id.at(src));
          ready = false;
          break;
        }
      }
      if (!ready) continue;
      bool v = g->kind == Gate::Kind::Not ? !value[g->in0] : !(value[g->in0] && value[g->in1]);
      value[g->id] = v;
      stack.pop_back();
    }
    return value.at(id);
  };
  return get(c.output);
}

bool is_valid_form(const Circuit& c) {
  std::unordered_map<std::string, int> fanout;
  std::unordered_map<std::string, Gate::Kind> consumer_kind;
  for (const auto& g : c.gates) {
    fanout[g.in0]++;
    consumer_kind[g.in0] = g.kind;
    if (g.kind == Gate::Kind::Nand) {
      fanout[g.in1]++;
      consumer_kind[g.in1] = g.kind;
    }
  }
  for (const auto& input : c.inputs) {
    if (fanout[input] != 1) return false;
    if (consumer_kind[input] != Gate::Kind::Not) return false;
  }
  return true;
}

Circuit make_valid(const Circuit& raw) {
  Circuit c;
  c.inputs = raw.inputs;
  std::unordered_map<std::string, std::string> rename;
  for (const auto& input : raw.inputs) {
    std::string buf = "n_" + input;
    while (std::any_of(raw.gates.begin(), raw.gates.end(),
                       [&](const Gate& g) { return g.id == buf; }) ||
           std::find(raw.inputs.begin(), raw.inputs.end(), buf) != raw.inputs.end())
      buf += "_";
    c.gates.push_back(Gate{Gate::Kind::Not, buf, input, ""});
    rename[input] = buf;
  }
  auto mapped = [&](const std::string& src) {
    auto it = rename.find(src);
    return it == rename.end() ? src : it->second;
  };
  for (const auto& g : raw.gates) {
    Gate ng = g;
    ng.in0 = mapped(g.in0);
    if (g.kind == Gate::Kind::Nand) ng.in1 = mapped(g.in1);
    c.gates.push_back(ng);
  }
  c.output = raw.output;
  return c;
}

Circuit negate_output(const Circuit& c) {
  Circuit out = c;
  std::string id = "neg_out";
  auto taken = [&](const std::string& s) {
    return std::any_of(out.gates.begin(), out.gates.end(),
                       [&](const Gate& g) { return g.id == s; }) ||
           std::find(out.inputs.begin(), out.inputs.end(), s) != out.inputs.end();
  };
  while (taken(id)) id += "_";
  out.gates.push_back(Gate{Gate::Kind::Not, id, c.output, ""});
  out.output = id;
  return out;
}

std::vector<int> CanonicalCircuit::successors_of_gate(int k) const {
  std::vector<int> out;
  for (int j = 0; j < num_gates(); ++j) {
    const auto& g = gates[j];
    if ((g.a.kind == Ref::Kind::Gate && g.a.index == k) ||
        (g.b.kind == Ref::Kind::Gate && g.b.index == k))
      out.push_back(j);
  }
  return out;
}

std::vector<int> CanonicalCircuit::successors_of_one() const {
  std::vector<int> out;
  for (int j = 0; j < num_gates(); ++j) {
    const auto& g = gates[j];
    if (g.a.kind == Ref::Kind::One || g.b.kind == Ref::Kind::One) out.push_back(j);
  }
  return out;
}

CanonicalCircuit canonicalize(const Circuit& c) {
  if (!is_valid_form(c))
    throw std::invalid_argument(
        "circuit is not in valid form (every input must feed exactly one NOT gate)");

  // NOT g -> NAND(g, one)
  struct Node {
    std::string a, b;  // b == "$one" marks the constant input
  };
  std::map<std::string, Node> nodes;
  for (const auto& g : c.gates) {
    if (g.kind == Gate::Kind::Not)
      nodes[g.id] = Node{g.in0, "$one"};
    else
      nodes[g.id] = Node{g.in0, g.in1};
  }

  // depth-first postorder from the output; per-gate inputs visited in
  // lexicographic order; unreachable gates are never visited (pruned)
  std::vector<std::string> postorder;
  std::unordered_map<std::string, int> state;  // 0 none, 1 active, 2 done
  std::vector<std::pair<std::string, int>> stack{{c.output, 0}};
  state[c.output] = 1;
  while (!stack.empty()) {
    auto& [id, next] = stack.back();
    const Node& node = nodes.at(id);
    std::vector<std::string> srcs{node.a, node.b};
    std::sort(srcs.begin(), srcs.end());
    if (next < 2) {
      const std::string& src = srcs[next++];
      if (nodes.count(src) && state[src] == 0) {
        state[src] = 1;
        stack.emplace_back(src, 0);
      }
    } else {
      state[id] = 2;
      postorder.push_back(id);
      stack.pop_back();
    }
  }

  // reverse finish order: output gets index 0 (= g_1)
  CanonicalCircuit canon;
  canon.num_inputs = c.num_inputs();
  std::unordered_map<std::string, int> gate_index;
  for (size_t i = 0; i < postorder.size(); ++i)
    gate_index[postorder[i]] = static_cast<int>(postorder.size() - 1 - i);

  std::unordered_map<std::string, int> input_index;
  for (int i = 0; i < c.num_inputs(); ++i) input_index[c.inputs[i]] = i;

  canon.gates.resize(postorder.size());
  canon.input_gate.assign(c.num_inputs(), -1);
  auto make_ref = [&](const std::string& src) {
    using Ref = CanonicalCircuit::Ref;
    if (src == "$one") return Ref{Ref::Kind::One, -1};
    if (auto it = input_index.find(src); it != input_index.end())
      return Ref{Ref::Kind::Input, it->second};
    return Ref{Ref::Kind::Gate, gate_index.at(src)};
  };
  for (const auto& [id, k] : gate_index) {
    const Node& node = nodes.at(id);
    canon.gates[k] = CanonicalCircuit::CGate{make_ref(node.a), make_ref(node.b)};
  }
  for (int k = 0; k < canon.num_gates(); ++k) {
    for (auto ref : {canon.gates[k].a, canon.gates[k].b})
      if (ref.kind == CanonicalCircuit::Ref::Kind::Input) canon.input_gate[ref.index] = k;
  }
  for (int i = 0; i < canon.num_inputs; ++i)
    if (canon.input_gate[i] < 0)
      throw std::invalid_argument("input " + c.inputs[i] + " unreachable from the output");
  return canon;
}

bool evaluate(const CanonicalCircuit& c, const Assignment& x) {
  if (static_cast<int>(x.size()) != c.num_inputs)
    throw std::invalid_argument("assignment length mismatch");
  std::vector<bool> value(c.num_gates());
  auto ref_value = [&](const CanonicalCircuit::Ref& r) {
    using Kind = CanonicalCircuit::Ref::Kind;
    switch (r.kind) {
      case Kind::One: return true;
      case Kind::Input: return static_cast<bool>(x[r.index]);
      default: return static_cast<bool>(value[r.index]);
    }
  };
  for (int k = c.num_gates() - 1; k >= 0; --k)
    value[k] = !(ref_value(c.gates[k].a) && ref_value(c.gates[k].b));
  return value[0];
}

std::uint64_t count_satisfying(const CanonicalCircuit& c) {
  if (c.num_inputs > 20) throw std::invalid_argument("too many inputs to enumerate");
  std::uint64_t count = 0;
  std::uint64_t total = std::uint64_t(1) << c.num_inputs;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Assignment x(c.num_inputs);
    for (int i = 0; i < c.num_inputs; ++i) x[i] = (bits >> i) & 1;
    if (evaluate(c, x)) ++count;
  }
  return count;
}

}  // namespace cgames
