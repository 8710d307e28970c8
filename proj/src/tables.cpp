#include "abound/tables.hpp"

namespace abound {

const std::vector<ReferenceCell>& reference_cells() {
  static const std::vector<ReferenceCell> cells = {
      {4, -1, 5},  {4, 0, 11},  {4, 1, 23},  {4, 2, 77},   {5, -1, 6},  {5, 0, 12},  {5, 1, 23},
      {6, -1, 7},  {6, 0, 14},  {6, 1, 25},  {6, 2, 115},  {7, -1, 8},  {7, 0, 16},  {7, 1, 27},
      {7, 2, 80},  {8, -1, 9},  {8, 0, 18},  {8, 1, 30},   {8, 2, 72},  {9, -1, 10}, {9, 0, 20},
      {9, 1, 33},  {9, 2, 70},  {10, -1, 11}, {10, 0, 22}, {10, 1, 36}, {10, 2, 70},
  };
  return cells;
}

double allowed_bound(const ReferenceCell& cell) {
  return cell.z <= 1.0 ? static_cast<double>(cell.value) : 1.15 * static_cast<double>(cell.value);
}

std::vector<CellCheck> verify_reference_tables(int k_lo, int k_hi, const OptimizerConfig& cfg) {
  std::vector<CellCheck> out;
  for (const ReferenceCell& cell : reference_cells()) {
    if (cell.k < k_lo || cell.k > k_hi) continue;
    CellCheck c;
    c.cell = cell;
    c.allowed = allowed_bound(cell);
    TableEntry e = table_bounds(cell.k, {cell.z}, cfg).front();
    c.best = e.best;
    c.errors = e.errors;
    if (c.best) {
      c.pass = cell.z <= 1.0 ? c.best->vertex_bound_int <= cell.value
                             : c.best->vertex_bound <= c.allowed;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace abound
