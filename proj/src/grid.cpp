#include "gentor/grid.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "gentor/gentorsion.hpp"

namespace gentor {

bool GridCell::ok() const {
  return check_passed && length == static_cast<std::size_t>(p) && h1_order == p && order_exact == p;
}

GridCell certificate_cell(long n, long p, long q) {
  GridCell cell{n, p, q, false, 0, BigInt(0), BigInt(0), {}};
  try {
    const GenTorsionCertificate c = derive_certificate(n, Slope{p, q});
    const Verdict v = check_certificate(c);
    cell.check_passed = v.pass;
    if (!v.pass) cell.failure = v.reason;
    cell.length = c.conjugators.size();
    cell.h1_order = element_h1_order(c.group, c.element);
    const GenTorsionReport r = order_bounds(c.group, c.element, c);
    if (r.order_exact) cell.order_exact = *r.order_exact;
  } catch (const DomainError& e) {
    cell.failure = e.what();
  }
  return cell;
}

namespace {

std::vector<std::tuple<long, long, long>> certificate_keys(const std::vector<long>& punctures, long qmax,
                                                           long extra) {
  std::vector<std::tuple<long, long, long>> keys;
  for (long n : punctures) {
    for (long q = 1; q <= qmax; ++q) {
      for (long p = std::max(2L, q * n); p <= q * n + extra; ++p) {
        if (std::gcd(p, q) == 1) keys.emplace_back(n, p, q);
      }
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

std::vector<std::tuple<long, long, long>> kn_keys(long nmin, long nmax, long pmax, long qmax) {
  std::vector<std::tuple<long, long, long>> keys;
  for (long n = std::max(2L, nmin); n <= nmax; ++n) {
    for (long q = 1; q <= qmax; ++q) {
      for (long p = kn_punctures(n) * q; p <= pmax; ++p) {
        if (std::gcd(p, q) == 1) keys.emplace_back(n, p, q);
      }
    }
  }
  return keys;
}

KnCell kn_cell(long n, long p, long q) {
  KnCell cell{n, p, q, false, BigInt(0), {}};
  try {
    const KnReport k = kn_report(n, Slope{p, q});
    if (!k.verdict.pass) {
      cell.failure = k.verdict.reason;
    } else if (k.report.order_exact) {
      cell.order = *k.report.order_exact;
      cell.verified = cell.order == p;
      if (!cell.verified) cell.failure = "order " + cell.order.get_str() + " differs from p";
    } else {
      cell.failure = "order not certified";
    }
  } catch (const DomainError& e) {
    cell.failure = e.what();
  }
  return cell;
}

}  // namespace

std::vector<GridCell> certificate_grid_serial(const std::vector<long>& punctures, long qmax, long extra) {
  std::vector<GridCell> out;
  for (const auto& [n, p, q] : certificate_keys(punctures, qmax, extra)) out.push_back(certificate_cell(n, p, q));
  return out;
}

std::vector<GridCell> certificate_grid(const std::vector<long>& punctures, long qmax, long extra) {
  const auto keys = certificate_keys(punctures, qmax, extra);
  std::vector<GridCell> out(keys.size());
  const long count = static_cast<long>(keys.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const auto& [n, p, q] = keys[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = certificate_cell(n, p, q);
  }
  return out;
}

std::vector<KnCell> kn_grid_serial(long nmin, long nmax, long pmax, long qmax) {
  std::vector<KnCell> out;
  for (const auto& [n, p, q] : kn_keys(nmin, nmax, pmax, qmax)) out.push_back(kn_cell(n, p, q));
  return out;
}

std::vector<KnCell> kn_grid(long nmin, long nmax, long pmax, long qmax) {
  const auto keys = kn_keys(nmin, nmax, pmax, qmax);
  std::vector<KnCell> out(keys.size());
  const long count = static_cast<long>(keys.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const auto& [n, p, q] = keys[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = kn_cell(n, p, q);
  }
  return out;
}

}  // namespace gentor
