// Oriented planar diagrams (PD codes) for two-bridge and Montesinos knots.
#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "gentor/tangles.hpp"

namespace gentor {

/// PD cell X[a,b,c,d]: edge labels counterclockwise from the incoming
/// under-strand; the under-strand runs a -> c. Positive crossings have the
/// over-strand running d -> b.
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Knot diagram in PD form. Edge labels are 1..2n for n crossings; the
/// Wirtinger arc count is n (1 for the round unknot).
struct PlanarDiagram {
  std::vector<Crossing> crossings;
  int arc_count = 1;
  int component_count = 1;

  static PlanarDiagram unknot() { return {}; }

  std::size_t crossing_count() const noexcept { return crossings.size(); }
  /// Edge labels in use (2n, or 1 for the round unknot).
  int edge_count() const noexcept {
    return crossings.empty() ? 1 : static_cast<int>(2 * crossings.size());
  }

  /// "X[1,5,2,4] / sign=+1, X[...] / sign=..." ; empty string for the unknot.
  std::string pd_code() const;
  /// Inverse of pd_code(); fills arc_count/component_count by traversal.
  static PlanarDiagram parse(std::string_view text);

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::string violation;  // first violation found, empty when ok
};

/// Checks edge pairing, orientation consistency and single-component closure.
ValidationReport validate(const PlanarDiagram& d);

/// Sum of crossing signs.
int writhe(const PlanarDiagram& d);

/// Numerator closure of the rational tangle built from w's entries
/// (alternating horizontal/vertical twist boxes, last box horizontal).
/// Words in other conventions are first rewritten as Default entries with
/// the same value. Throws DomainError for links.
PlanarDiagram two_bridge_diagram(const TangleWord& w);

/// Numerator closure of the horizontal sum of rational tangles realising
/// each beta_i/alpha_i. Throws DomainError when the closure is a link.
PlanarDiagram montesinos_diagram(const MontesinosDescriptor& d);

/// Adds a Reidemeister-I kink of the given sign on edge 1.
PlanarDiagram add_kink(const PlanarDiagram& d, int sign);

/// Sequence of edge labels met when walking the knot from edge 1.
std::vector<int> traversal_order(const PlanarDiagram& d);

}  // namespace gentor
