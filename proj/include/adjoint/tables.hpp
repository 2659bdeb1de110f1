#pragma once
// The four worked example chains: an embedded reference copy of every row
// (contraction counts, invariants, and the level-bound column), builders
// that recompute the same tables from the library, and the comparison the
// table command and the tests run against the reference.

#include <string>
#include <vector>

#include <json.hpp>

#include "adjoint/builder.hpp"
#include "adjoint/chain.hpp"
#include "adjoint/ints.hpp"

namespace adjoint {

// A recomputed example table: the constructed chain for the recorded
// (l, end, c) together with the exact level bound max_level(h(i), beta(i),
// p) for every step.
struct ExampleTable {
  Int id = 0;  // 1..4
  Int l = 0;
  EndPair end;
  Int c = 0;
  Int p = 0;
  AdjointChain chain;
  std::vector<Int> level_bounds;
};

// Reference rows the recomputed table is compared against.
struct GoldenTable {
  Int id = 0;
  Int l = 0;
  EndPair end;
  Int c = 0;
  std::vector<Int> n;
  std::vector<Int> gamma;
  std::vector<Int> beta;
  std::vector<Int> h;
  std::vector<Int> alpha;
  std::vector<Int> level_bounds;
};

// The embedded reference table; id must be 1..4 (DomainError otherwise).
const GoldenTable& golden_table(Int id);

// Reconstructs table `id` from scratch: runs construct_adjoint_chain on
// the recorded inputs, realizes and validates the chain, and computes the
// level-bound column with max_level.
ExampleTable build_example_table(Int id);

// Cell-by-cell comparison.  Chain rows (n, gamma, beta, h, alpha) and the
// level-bound row are tracked separately: the reference level-bound row of
// table 2 disagrees with the exact search in rows 8..11, and the split
// lets callers report that without distrusting the chain itself.
struct TableComparison {
  bool rows_match = true;
  bool bounds_match = true;
  std::vector<std::string> differences;

  bool ok() const { return rows_match && bounds_match; }
};

TableComparison compare_to_golden(const ExampleTable& table);

// Transposed layout, one row per quantity, i / n / gamma / beta / h /
// alpha / l~; the final n cell is blank.
std::string example_table_markdown(const ExampleTable& table);
std::string example_table_csv(const ExampleTable& table);
nlohmann::json example_table_json(const ExampleTable& table);

}  // namespace adjoint
