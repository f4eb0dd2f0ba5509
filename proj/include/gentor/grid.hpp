// Batch verification over (n, p, q) cells. Each cell is independent; the
// parallel drivers return exactly what the serial ones do, sorted by key.
#pragma once

#include <string>
#include <vector>

#include "gentor/exact.hpp"

namespace gentor {

struct GridCell {
  long n = 0;  // puncture count of the universal group
  long p = 0;
  long q = 0;
  bool check_passed = false;
  std::size_t length = 0;
  BigInt h1_order;
  BigInt order_exact;  // 0 when not certified
  std::string failure;

  /// Every exact check agrees on order p.
  bool ok() const;
  friend bool operator==(const GridCell&, const GridCell&) = default;
};

/// Cells with n in `punctures`, 1 <= q <= qmax, qn <= p <= qn + extra,
/// gcd(p, q) = 1 and p >= 2.
std::vector<GridCell> certificate_grid(const std::vector<long>& punctures, long qmax, long extra);
std::vector<GridCell> certificate_grid_serial(const std::vector<long>& punctures, long qmax, long extra);

/// One cell of the universal certificate checks.
GridCell certificate_cell(long n, long p, long q);

struct KnCell {
  long n = 0;
  long p = 0;
  long q = 0;
  bool verified = false;
  BigInt order;
  std::string failure;
  friend bool operator==(const KnCell&, const KnCell&) = default;
};

/// kn_report over nmin <= n <= nmax, 1 <= q <= qmax, (2n+4)q <= p <= pmax, gcd(p,q) = 1.
std::vector<KnCell> kn_grid(long nmin, long nmax, long pmax, long qmax);
std::vector<KnCell> kn_grid_serial(long nmin, long nmax, long pmax, long qmax);

}  // namespace gentor
