#pragma once

#include <string>
#include <vector>

#include "cgames/rational.hpp"

namespace cgames {

// Boolean circuits of NOT and 2-input NAND gates over named nets.
//
// Netlist text format, one statement per line (ids match [a-z0-9_]+):
//   INPUT <id>
//   NOT <id> <src>
//   NAND <id> <src> <src>     (the two sources must differ)
//   OUTPUT <id>
// Blank lines and '#' comments are ignored.
struct Gate {
  enum class Kind { Not, Nand };
  Kind kind;
  std::string id;
  std::string in0, in1;  // in1 unused for NOT
};

struct Circuit {
  std::vector<std::string> inputs;
  std::vector<Gate> gates;  // in definition order
  std::string output;

  int num_inputs() const { return static_cast<int>(inputs.size()); }

  friend bool operator==(const Circuit& a, const Circuit& b);
};

class CircuitParseError : public std::runtime_error {
 public:
  CircuitParseError(int line, int column, const std::string& message);
  int line, column;
};

Circuit parse_circuit(const std::string& text);
std::string serialize_circuit(const Circuit& c);

using Assignment = std::vector<bool>;

bool evaluate(const Circuit& c, const Assignment& x);

// A circuit is *well-formed for canonicalization* when every input bit feeds
// exactly one gate and that gate is a NOT.
bool is_valid_form(const Circuit& c);

// Buffers every input through a fresh NOT gate, rewiring all of the input's
// former consumers. The result C satisfies C(x with all bits flipped) = C'(x).
Circuit make_valid(const Circuit& raw);

// Appends a NOT at the output.
Circuit negate_output(const Circuit& c);

// NAND-only circuit, indexed in reverse topological order: gates[0] is g_1
// (the output gate) and every arc g_k -> g_k' has k' < k. Each circuit input
// feeds exactly one gate, whose other operand is the constant one.
struct CanonicalCircuit {
  struct Ref {
    enum class Kind { Input, Gate, One };
    Kind kind;
    int index = -1;  // input index or gate index (0-based; gate 0 is g_1)
    friend bool operator==(const Ref&, const Ref&) = default;
  };
  struct CGate {
    Ref a, b;
  };

  int num_inputs = 0;
  std::vector<CGate> gates;
  std::vector<int> input_gate;  // input i feeds gates[input_gate[i]]

  int num_gates() const { return static_cast<int>(gates.size()); }
  // Gates consuming the given node (all have smaller index than a gate node).
  std::vector<int> successors_of_gate(int k) const;
  std::vector<int> successors_of_one() const;

  friend bool operator==(const CanonicalCircuit& a, const CanonicalCircuit& b) {
    if (a.num_inputs != b.num_inputs || a.gates.size() != b.gates.size()) return false;
    for (size_t k = 0; k < a.gates.size(); ++k)
      if (!(a.gates[k].a == b.gates[k].a && a.gates[k].b == b.gates[k].b)) return false;
    return true;
  }
};

// Requires is_valid_form(c). Replaces NOT gates by NAND-with-one, prunes
// gates unreachable from the output, and indexes the rest by depth-first
// postorder from the output with lexicographic tie-breaking on gate ids.
CanonicalCircuit canonicalize(const Circuit& c);

bool evaluate(const CanonicalCircuit& c, const Assignment& x);

// Number of satisfying assignments by exhaustive evaluation; inputs must be
// few enough to enumerate (guarded at 20).
std::uint64_t count_satisfying(const CanonicalCircuit& c);

}  // namespace cgames
