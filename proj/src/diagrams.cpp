#include "gentor/diagrams.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

namespace gentor {

namespace {

// ---------------------------------------------------------------------------
// Port graph: crossings have four slots counterclockwise from the SW corner
// (0 = SW, 1 = SE, 2 = NE, 3 = NW); strands join slot s to s + 2. Joints are
// 2-valent nodes standing in for crossingless strand pieces.

struct Port {
  int node = -1;
  int slot = -1;
  friend bool operator==(const Port&, const Port&) = default;
};

struct Node {
  bool crossing = false;
  int over_pair = 0;  // 0: slots {0,2} on top ("/" over), 1: slots {1,3}
};

class PortGraph {
 public:
  int add_crossing(int sign) {
    nodes_.push_back({true, sign > 0 ? 0 : 1});
    partner_.push_back({});
    return static_cast<int>(nodes_.size()) - 1;
  }
  int add_joint() {
    nodes_.push_back({false, 0});
    partner_.push_back({});
    return static_cast<int>(nodes_.size()) - 1;
  }
  void connect(Port a, Port b) {
    partner_[a.node][a.slot] = b;
    partner_[b.node][b.slot] = a;
  }
  const Node& node(int i) const { return nodes_[i]; }
  Port partner(Port p) const { return partner_[p.node][p.slot]; }
  std::size_t size() const { return nodes_.size(); }
  int slots(int i) const { return nodes_[i].crossing ? 4 : 2; }

 private:
  std::vector<Node> nodes_;
  std::vector<std::array<Port, 4>> partner_;
};

struct Tangle {
  Port nw, ne, sw, se;
};

Tangle zero_tangle(PortGraph& g) {
  int top = g.add_joint();
  int bottom = g.add_joint();
  return {{top, 0}, {top, 1}, {bottom, 0}, {bottom, 1}};
}

Tangle infinity_tangle(PortGraph& g) {
  int left = g.add_joint();
  int right = g.add_joint();
  return {{left, 0}, {right, 0}, {left, 1}, {right, 1}};
}

// Twist the NE and SE ends: fraction F -> F + sign.
void horizontal_twist(PortGraph& g, Tangle& t, int sign) {
  int x = g.add_crossing(sign);
  g.connect(t.ne, {x, 3});
  g.connect(t.se, {x, 0});
  t.ne = {x, 2};
  t.se = {x, 1};
}

// Twist the SW and SE ends: 1/F -> 1/F + sign.
void vertical_twist(PortGraph& g, Tangle& t, int sign) {
  int x = g.add_crossing(sign);
  g.connect(t.sw, {x, 3});
  g.connect(t.se, {x, 2});
  t.sw = {x, 0};
  t.se = {x, 1};
}

// Entries a1..ak realise a1 + 1/(a2 + ... + 1/ak); odd positions are
// horizontal boxes, even positions vertical, built innermost first.
Tangle rational_tangle(PortGraph& g, const std::vector<long>& a) {
  const std::size_t k = a.size();
  Tangle t = (k % 2 == 1) ? zero_tangle(g) : infinity_tangle(g);
  for (std::size_t i = k; i >= 1; --i) {
    const long twists = a[i - 1];
    const int sign = twists > 0 ? 1 : -1;
    for (long j = 0; j < std::abs(twists); ++j) {
      if (i % 2 == 1) {
        horizontal_twist(g, t, sign);
      } else {
        vertical_twist(g, t, sign);
      }
    }
  }
  return t;
}

Tangle tangle_sum(PortGraph& g, const Tangle& left, const Tangle& right) {
  g.connect(left.ne, right.nw);
  g.connect(left.se, right.sw);
  return {left.nw, right.ne, left.sw, right.se};
}

void numerator_closure(PortGraph& g, const Tangle& t) {
  g.connect(t.nw, t.ne);
  g.connect(t.sw, t.se);
}

struct Visit {
  int node;
  int in_slot;
  int out_slot;
  int label_in;
  int label_out;
};

// Walks every component; the one through `start` is labelled from 1.
struct Walk {
  std::vector<Visit> visits;
  int components = 0;
};

Walk walk(const PortGraph& g, Port start) {
  Walk w;
  std::vector<std::array<bool, 4>> seen(g.size(), {false, false, false, false});
  auto trace = [&](Port from, bool record) {
    Port at = from;
    int label = 1;
    do {
      const Node& n = g.node(at.node);
      int out = n.crossing ? (at.slot + 2) % 4 : 1 - at.slot;
      seen[at.node][at.slot] = true;
      seen[at.node][out] = true;
      if (n.crossing && record) {
        w.visits.push_back({at.node, at.slot, out, label, label + 1});
        ++label;
      }
      at = g.partner({at.node, out});
    } while (!(at == from));
    ++w.components;
  };
  trace(start, true);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (int s = 0; s < g.slots(static_cast<int>(i)); ++s) {
      if (!seen[i][s]) trace({static_cast<int>(i), s}, false);
    }
  }
  const int edges = static_cast<int>(w.visits.size());
  for (auto& v : w.visits) {
    if (v.label_out > edges) v.label_out = 1;
  }
  return w;
}

PlanarDiagram to_diagram(const PortGraph& g, const Walk& w) {
  std::map<int, std::vector<const Visit*>> by_node;
  for (const auto& v : w.visits) by_node[v.node].push_back(&v);
  PlanarDiagram d;
  for (const auto& [node, visits] : by_node) {
    std::array<int, 4> label_at{};
    for (const Visit* v : visits) {
      label_at[v->in_slot] = v->label_in;
      label_at[v->out_slot] = v->label_out;
    }
    const int over_pair = g.node(node).over_pair;
    const Visit* under = (visits[0]->in_slot % 2 != over_pair) ? visits[0] : visits[1];
    const Visit* over = (under == visits[0]) ? visits[1] : visits[0];
    const int u = under->in_slot;
    Crossing c;
    for (int k = 0; k < 4; ++k) c.arcs[k] = label_at[(u + k) % 4];
    c.sign = (over->in_slot == (u + 3) % 4) ? 1 : -1;
    d.crossings.push_back(c);
  }
  std::sort(d.crossings.begin(), d.crossings.end(),
            [](const Crossing& a, const Crossing& b) { return a.arcs[0] < b.arcs[0]; });
  d.arc_count = d.crossings.empty() ? 1 : static_cast<int>(d.crossings.size());
  d.component_count = w.components;
  return d;
}

std::vector<long> default_entries(const TangleWord& w) {
  std::vector<long> a = w.entries;
  switch (w.convention) {
    case Convention::Default:
      break;
    case Convention::Reversed:
      std::reverse(a.begin(), a.end());
      break;
    case Convention::Negative:
      // a1 - 1/(a2 - ...) == a1 + 1/(-a2 + 1/(a3 + ...))
      for (std::size_t i = 1; i < a.size(); i += 2) a[i] = -a[i];
      break;
  }
  return a;
}

// Orientation data read back from PD cells.
struct Flow {
  std::map<int, int> next;       // label -> following label
  std::map<int, int> in_count;   // label -> times it enters a crossing
  std::map<int, int> out_count;  // label -> times it leaves a crossing
};

Flow flow_of(const PlanarDiagram& d) {
  Flow f;
  for (const auto& c : d.crossings) {
    const auto& x = c.arcs;
    const int over_in = c.sign > 0 ? x[3] : x[1];
    const int over_out = c.sign > 0 ? x[1] : x[3];
    f.next[x[0]] = x[2];
    f.next[over_in] = over_out;
    ++f.in_count[x[0]];
    ++f.in_count[over_in];
    ++f.out_count[x[2]];
    ++f.out_count[over_out];
  }
  return f;
}

int count_components(const PlanarDiagram& d, const Flow& f) {
  if (d.crossings.empty()) return 1;
  std::map<int, bool> seen;
  for (const auto& [label, _] : f.next) seen[label] = false;
  int components = 0;
  for (auto& [label, done] : seen) {
    if (done) continue;
    ++components;
    int at = label;
    while (!seen[at]) {
      seen[at] = true;
      auto it = f.next.find(at);
      if (it == f.next.end()) break;
      at = it->second;
    }
  }
  return components;
}

PlanarDiagram close_and_label(PortGraph& g, const Tangle& t, const std::string& what) {
  numerator_closure(g, t);
  Walk w = walk(g, t.nw);
  if (w.components != 1) {
    throw DomainError(what + " closes to a link with " + std::to_string(w.components) +
                      " components");
  }
  return to_diagram(g, w);
}

}  // namespace

std::string PlanarDiagram::pd_code() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const auto& c = crossings[i];
    if (i) out << ", ";
    out << "X[" << c.arcs[0] << ',' << c.arcs[1] << ',' << c.arcs[2] << ',' << c.arcs[3]
        << "] / sign=" << (c.sign > 0 ? "+1" : "-1");
  }
  return out.str();
}

PlanarDiagram PlanarDiagram::parse(std::string_view text) {
  static const std::regex cell(
      R"(X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*/\s*sign\s*=\s*([+-]?1))");
  static const std::regex separator(R"(^[\s,]*$)");
  PlanarDiagram d;
  std::string s(text);
  auto begin = std::sregex_iterator(s.begin(), s.end(), cell);
  std::size_t consumed = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (!std::regex_match(s.substr(consumed, static_cast<std::size_t>(m.position()) - consumed),
                          separator)) {
      throw DomainError("unexpected text in PD code near position " + std::to_string(consumed));
    }
    Crossing c;
    for (int k = 0; k < 4; ++k) c.arcs[k] = std::stoi(m[k + 1].str());
    c.sign = std::stoi(m[5].str()) > 0 ? 1 : -1;
    d.crossings.push_back(c);
    consumed = static_cast<std::size_t>(m.position() + m.length());
  }
  if (!std::regex_match(s.substr(consumed), separator)) {
    throw DomainError("unexpected trailing text in PD code");
  }
  d.arc_count = d.crossings.empty() ? 1 : static_cast<int>(d.crossings.size());
  d.component_count = count_components(d, flow_of(d));
  return d;
}

ValidationReport validate(const PlanarDiagram& d) {
  if (d.crossings.empty()) {
    if (d.component_count != 1) return {false, "crossingless diagram must have one component"};
    return {};
  }
  std::map<int, int> uses;
  for (const auto& c : d.crossings) {
    if (c.sign != 1 && c.sign != -1) return {false, "crossing sign must be +1 or -1"};
    for (int a : c.arcs) ++uses[a];
  }
  for (const auto& [label, n] : uses) {
    if (n == 1) return {false, "unpaired arc " + std::to_string(label)};
    if (n > 2) return {false, "over-paired arc " + std::to_string(label)};
  }
  const Flow f = flow_of(d);
  for (const auto& [label, _] : uses) {
    auto in = f.in_count.find(label);
    auto out = f.out_count.find(label);
    if (in == f.in_count.end() || out == f.out_count.end() || in->second != 1 || out->second != 1) {
      return {false, "orientation mismatch at arc " + std::to_string(label)};
    }
  }
  const int components = count_components(d, f);
  if (components != 1) {
    return {false, "diagram has " + std::to_string(components) + " components"};
  }
  if (d.component_count != components) return {false, "component_count field disagrees with traversal"};
  if (d.arc_count != static_cast<int>(d.crossings.size())) {
    return {false, "arc_count must equal the number of crossings"};
  }
  return {};
}

int writhe(const PlanarDiagram& d) {
  int w = 0;
  for (const auto& c : d.crossings) w += c.sign;
  return w;
}

std::vector<int> traversal_order(const PlanarDiagram& d) {
  if (d.crossings.empty()) return {1};
  const Flow f = flow_of(d);
  std::vector<int> order;
  int at = 1;
  do {
    order.push_back(at);
    auto it = f.next.find(at);
    if (it == f.next.end()) throw DomainError("edge " + std::to_string(at) + " has no successor");
    at = it->second;
    if (order.size() > f.next.size()) throw DomainError("traversal from edge 1 does not close");
  } while (at != 1);
  return order;
}

PlanarDiagram two_bridge_diagram(const TangleWord& w) {
  const Fraction value = cf_eval(w);
  if (value.num() % 2 == 0) {
    throw DomainError("tangle word " + w.str() + " gives " + value.str() +
                      ", an even numerator: the closure is a two-component link");
  }
  PortGraph g;
  Tangle t = rational_tangle(g, default_entries(w));
  return close_and_label(g, t, "tangle word " + w.str());
}

PlanarDiagram montesinos_diagram(const MontesinosDescriptor& d) {
  if (d.empty()) throw DomainError("empty Montesinos descriptor");
  PortGraph g;
  std::optional<Tangle> sum;
  for (const auto& f : d.fractions()) {
    Tangle t = rational_tangle(g, cf_expand(f));
    sum = sum ? tangle_sum(g, *sum, t) : t;
  }
  return close_and_label(g, *sum, d.str());
}

PlanarDiagram add_kink(const PlanarDiagram& d, int sign) {
  const int n = static_cast<int>(d.crossings.size());
  const int edges = 2 * n + 2;
  PlanarDiagram out;
  // Edge 1 is split into 1 (tail), 2 (the loop) and 3 (head); the rest shift by 2.
  for (const auto& c : d.crossings) {
    Crossing k = c;
    const int over_in = c.sign > 0 ? 3 : 1;
    for (int i = 0; i < 4; ++i) {
      int& a = k.arcs[i];
      const bool incoming = (i == 0) || (i == over_in);
      if (a == 1) {
        a = incoming ? 3 : 1;
      } else {
        a += 2;
      }
    }
    out.crossings.push_back(k);
  }
  const int head = edges >= 3 ? 3 : 1;
  Crossing kink;
  kink.sign = sign > 0 ? 1 : -1;
  kink.arcs = kink.sign > 0 ? std::array<int, 4>{1, head, 2, 2} : std::array<int, 4>{1, 2, 2, head};
  out.crossings.insert(out.crossings.begin(), kink);
  out.arc_count = static_cast<int>(out.crossings.size());
  out.component_count = count_components(out, flow_of(out));
  return out;
}

}  // namespace gentor
