#include <map>

#include "gentor/groups.hpp"

namespace gentor {

namespace {

struct ArcData {
  std::vector<int> order;           // edge labels in traversal order
  std::map<int, std::size_t> arc;   // edge label -> Wirtinger arc index
  std::map<int, std::size_t> under; // incoming under label -> crossing index
  std::size_t arc_count = 0;
};

ArcData arcs_of(const PlanarDiagram& d) {
  if (auto report = validate(d); !report.ok) {
    throw DomainError("invalid diagram: " + report.violation);
  }
  ArcData a;
  a.order = traversal_order(d);
  for (std::size_t i = 0; i < d.crossings.size(); ++i) a.under[d.crossings[i].arcs[0]] = i;
  const std::size_t m = a.order.size();
  std::size_t current = 0;
  a.arc[a.order[0]] = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (a.under.count(a.order[i])) ++current;
    a.arc[a.order[i + 1]] = current;
  }
  // The stretch after the last under-pass continues the arc through edge 1.
  if (!a.under.count(a.order[m - 1])) {
    for (auto& [label, idx] : a.arc) {
      if (idx == current) idx = 0;
    }
    a.arc_count = current;
  } else {
    a.arc_count = current + 1;
  }
  return a;
}

std::vector<std::string> arc_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

Word longitude_from(const PlanarDiagram& d, const ArcData& a) {
  Word w;
  for (int label : a.order) {
    auto it = a.under.find(label);
    if (it == a.under.end()) continue;
    const Crossing& c = d.crossings[it->second];
    w *= Word::generator(a.arc.at(c.arcs[1]), c.sign);
  }
  w *= Word::generator(0, -writhe(d));
  return free_reduce(w);
}

}  // namespace

GroupPresentation wirtinger(const PlanarDiagram& d) {
  if (d.crossings.empty()) {
    if (auto report = validate(d); !report.ok) throw DomainError("invalid diagram: " + report.violation);
    return GroupPresentation({"x1"}, {}, {{"meridian", Word::generator(0)}, {"longitude", Word{}}});
  }
  const ArcData a = arcs_of(d);
  std::vector<Word> relators;
  relators.reserve(d.crossings.size());
  for (const auto& c : d.crossings) {
    const std::size_t over = a.arc.at(c.arcs[1]);
    const std::size_t in = a.arc.at(c.arcs[0]);
    const std::size_t out = a.arc.at(c.arcs[2]);
    // x_out = x_over^{-sign} x_in x_over^{sign}
    relators.push_back(Word({{over, -c.sign}, {in, 1}, {over, c.sign}, {out, -1}}));
  }
  return GroupPresentation(arc_names(a.arc_count), std::move(relators),
                           {{"meridian", Word::generator(0)}, {"longitude", longitude_from(d, a)}});
}

Word longitude(const PlanarDiagram& d) {
  if (d.crossings.empty()) return {};
  return longitude_from(d, arcs_of(d));
}

}  // namespace gentor
