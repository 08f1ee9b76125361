#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shimura/tracesets.hpp"

namespace shimura::table1 {

struct Row {
  std::int64_t n;
  unsigned e;
  tracesets::IntSet c_set;
  tracesets::IntSet d_set;
  tracesets::IntSet p_set;
};

/// The published trace-set table, (N, e) in {2, 3} x {2, 4, ..., 16}, with
/// "+-a" entries expanded.
const std::vector<Row>& goldens();

struct CellDiff {
  std::int64_t n;
  unsigned e;
  std::string column;  // "C", "D" or "P"
  tracesets::IntSet missing;     // in the golden, not computed
  tracesets::IntSet unexpected;  // computed, not in the golden

  std::string describe() const;
};

/// Recomputes every row and returns the cells that differ.
std::vector<CellDiff> diff(const std::vector<Row>& golden_rows);

}  // namespace shimura::table1
