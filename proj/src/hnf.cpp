#include "tribone/hnf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tribone {

namespace {

void drop_zeros(SparseColumn& col) {
  for (auto it = col.begin(); it != col.end();) {
    if (it->second == 0) {
      it = col.erase(it);
    } else {
      ++it;
    }
  }
}

/* dst += s * src */
void axpy(SparseColumn& dst, const Integer& s, const SparseColumn& src) {
  if (s == 0) return;
  for (const auto& [row, v] : src) {
    auto it = dst.find(row);
    if (it == dst.end()) {
      dst.emplace(row, s * v);
    } else {
      it->second += s * v;
      if (it->second == 0) dst.erase(it);
    }
  }
}

}  // namespace

LatticeDecision lattice_contains(std::vector<SparseColumn> columns, SparseColumn target) {
  for (auto& col : columns) drop_zeros(col);
  drop_zeros(target);

  /* occupancy: row -> active columns with a nonzero entry there */
  std::map<int, std::set<std::size_t>> occupancy;
  auto attach = [&](std::size_t c) {
    for (const auto& [row, v] : columns[c]) occupancy[row].insert(c);
  };
  auto detach = [&](std::size_t c) {
    for (const auto& [row, v] : columns[c]) {
      auto it = occupancy.find(row);
      it->second.erase(c);
      if (it->second.empty()) occupancy.erase(it);
    }
  };
  for (std::size_t c = 0; c < columns.size(); ++c) attach(c);

  /* Column echelon pass.  Each round picks the row held by the fewest
   * columns (cheapest elimination), clears it from all but one column with
   * unimodular pairs, and retires that column as the row's pivot.  Retired
   * pivots are never touched again, and active columns stay zero on every
   * processed row, so the pivots end up lower triangular in processing
   * order. */
  std::vector<std::pair<int, SparseColumn>> pivot_order;
  while (!occupancy.empty()) {
    int row = occupancy.begin()->first;
    std::size_t best = occupancy.begin()->second.size();
    for (const auto& [r, holders] : occupancy) {
      if (holders.size() < best) {
        best = holders.size();
        row = r;
      }
    }

    /* merge all holders into the one with the smallest entry at `row` */
    std::vector<std::size_t> holders(occupancy[row].begin(), occupancy[row].end());
    std::size_t p = holders[0];
    for (std::size_t c : holders) {
      if (abs(columns[c].at(row)) < abs(columns[p].at(row))) p = c;
    }
    for (std::size_t o : holders) {
      if (o == p) continue;
      const Integer a0 = columns[p].at(row);
      const Integer b0 = columns[o].at(row);
      const Bezout bz = extended_gcd(a0, b0);
      detach(p);
      detach(o);
      SparseColumn new_p;
      axpy(new_p, bz.a, columns[p]);
      axpy(new_p, bz.b, columns[o]);
      SparseColumn new_o;
      axpy(new_o, a0 / bz.g, columns[o]);
      axpy(new_o, -(b0 / bz.g), columns[p]);
      columns[p] = std::move(new_p);
      columns[o] = std::move(new_o);
      attach(p);
      attach(o);
    }
    detach(p);
    pivot_order.emplace_back(row, std::move(columns[p]));
    columns[p].clear();
  }

  /* Reduce the target in pivot order.  Later pivots vanish on earlier pivot
   * rows, so each coefficient is forced and must divide exactly. */
  for (const auto& [row, piv] : pivot_order) {
    auto it = target.find(row);
    if (it == target.end()) continue;
    const Integer d = piv.at(row);
    if (it->second % d != 0) return {false, pivot_order.size()};
    axpy(target, -(it->second / d), piv);
  }

  return {target.empty(), pivot_order.size()};
}

}  // namespace tribone
