#include "adjoint/tables.hpp"

#include <array>
#include <sstream>
#include <string>

#include "adjoint/bounds.hpp"
#include "adjoint/errors.hpp"

namespace adjoint {

namespace {

const std::array<GoldenTable, 4>& golden_tables() {
  static const std::array<GoldenTable, 4> tables = {{
      {1,
       8,
       {1, -1, 1},
       8,
       {0, 0, 1, 0, 0, 0, 0, 1, 0},
       {-1, -1, -1, 0, 0, 0, 0, 0, 1},
       {2, 1, 0, -1, -1, -1, -1, -1, -1},
       {6, 10, 12, 12, 10, 8, 6, 4, 2},
       {8, 11, 12, 11, 9, 7, 5, 3, 1},
       {8, 7, 6, 5, 4, 3, 2, 1, 0}},
      {2,
       12,
       {3, -3, 3},
       11,
       {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 3, 0},
       {-1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 0, 0, 3},
       {5, 4, 3, 2, 1, 0, -1, -2, -3, -3, -3, -3, -3},
       {6, 16, 24, 30, 34, 36, 36, 34, 30, 24, 18, 12, 6},
       {11, 20, 27, 32, 35, 36, 35, 32, 27, 21, 15, 9, 3},
       {23, 22, 21, 20, 19, 18, 17, 8, 4, 3, 2, 1, 0}},
      {3,
       8,
       {1, -1, 0},
       8,
       {0, 0, 1, 0, 0, 0, 0, 0, 0},
       {-1, -1, -1, 0, 0, 0, 0, 0, 0},
       {2, 1, 0, -1, -1, -1, -1, -1, -1},
       {6, 10, 12, 12, 10, 8, 6, 4, 2},
       {8, 11, 12, 11, 9, 7, 5, 3, 1},
       {8, 7, 6, 5, 4, 3, 2, 1, 0}},
      {4,
       9,
       {0, -40, -8},
       72,
       {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
       {-8, -8, -8, -8, -8, -8, -8, -8, -8, -8},
       {32, 24, 16, 8, 0, -8, -16, -24, -32, -40},
       {40, 104, 152, 184, 200, 200, 184, 152, 104, 40},
       {72, 128, 168, 192, 200, 192, 168, 128, 72, 0},
       {9, 8, 7, 6, 5, 4, 3, 2, 1, 0}},
  }};
  return tables;
}

std::vector<std::vector<std::string>> table_rows(const ExampleTable& table) {
  const Int l = table.chain.level();
  std::vector<std::vector<std::string>> rows(7);
  rows[0].push_back("i");
  rows[1].push_back("n");
  rows[2].push_back("gamma");
  rows[3].push_back("beta");
  rows[4].push_back("h");
  rows[5].push_back("alpha");
  rows[6].push_back("l~");
  for (Int i = 0; i <= l; ++i) {
    const auto& s = table.chain.steps[static_cast<size_t>(i)];
    rows[0].push_back(std::to_string(i));
    rows[1].push_back(i == l ? "" : std::to_string(s.n));
    rows[2].push_back(std::to_string(s.gamma));
    rows[3].push_back(std::to_string(s.beta));
    rows[4].push_back(std::to_string(s.h));
    rows[5].push_back(std::to_string(s.alpha));
    rows[6].push_back(std::to_string(table.level_bounds[static_cast<size_t>(i)]));
  }
  return rows;
}

void note_difference(TableComparison& cmp, const std::string& quantity, Int i,
                     Int got, Int want) {
  cmp.differences.push_back(quantity + "(" + std::to_string(i) +
                            ") = " + std::to_string(got) + ", reference " +
                            std::to_string(want));
}

}  // namespace

const GoldenTable& golden_table(Int id) {
  if (id < 1 || id > 4) {
    throw DomainError("table id must be 1..4, got " + std::to_string(id));
  }
  return golden_tables()[static_cast<size_t>(id - 1)];
}

ExampleTable build_example_table(Int id) {
  const GoldenTable& golden = golden_table(id);
  ExampleTable table;
  table.id = id;
  table.l = golden.l;
  table.end = golden.end;
  table.c = golden.c;
  table.p = genus_from_end(golden.end.gamma_l);

  const auto n = construct_adjoint_chain(golden.l, golden.end, golden.c);
  if (!n) {
    throw InternalError("example table " + std::to_string(id) +
                        " is infeasible for its own start degree");
  }
  table.chain = realize_chain(golden.l, golden.end, *n);

  table.level_bounds.reserve(table.chain.steps.size());
  for (const StepInvariants& s : table.chain.steps) {
    table.level_bounds.push_back(max_level(s.h, s.beta, table.p));
  }
  return table;
}

TableComparison compare_to_golden(const ExampleTable& table) {
  const GoldenTable& golden = golden_table(table.id);
  TableComparison cmp;
  const Int l = table.chain.level();
  if (l != golden.l) {
    cmp.rows_match = false;
    note_difference(cmp, "l", 0, l, golden.l);
    return cmp;
  }
  for (Int i = 0; i <= l; ++i) {
    const auto k = static_cast<size_t>(i);
    const StepInvariants& s = table.chain.steps[k];
    const Int n_here = i == l ? 0 : s.n;
    if (n_here != golden.n[k]) {
      cmp.rows_match = false;
      note_difference(cmp, "n", i, n_here, golden.n[k]);
    }
    if (s.gamma != golden.gamma[k]) {
      cmp.rows_match = false;
      note_difference(cmp, "gamma", i, s.gamma, golden.gamma[k]);
    }
    if (s.beta != golden.beta[k]) {
      cmp.rows_match = false;
      note_difference(cmp, "beta", i, s.beta, golden.beta[k]);
    }
    if (s.h != golden.h[k]) {
      cmp.rows_match = false;
      note_difference(cmp, "h", i, s.h, golden.h[k]);
    }
    if (s.alpha != golden.alpha[k]) {
      cmp.rows_match = false;
      note_difference(cmp, "alpha", i, s.alpha, golden.alpha[k]);
    }
    if (table.level_bounds[k] != golden.level_bounds[k]) {
      cmp.bounds_match = false;
      note_difference(cmp, "l~", i, table.level_bounds[k],
                      golden.level_bounds[k]);
    }
  }
  return cmp;
}

std::string example_table_markdown(const ExampleTable& table) {
  const auto rows = table_rows(table);
  std::ostringstream os;
  bool header = true;
  for (const auto& row : rows) {
    os << "|";
    for (const auto& cell : row) os << " " << cell << " |";
    os << "\n";
    if (header) {
      os << "|";
      for (size_t k = 0; k < row.size(); ++k) os << " --- |";
      os << "\n";
      header = false;
    }
  }
  return os.str();
}

std::string example_table_csv(const ExampleTable& table) {
  const auto rows = table_rows(table);
  std::ostringstream os;
  for (const auto& row : rows) {
    for (size_t k = 0; k < row.size(); ++k) {
      if (k) os << ",";
      os << row[k];
    }
    os << "\n";
  }
  return os.str();
}

nlohmann::json example_table_json(const ExampleTable& table) {
  nlohmann::json j = chain_to_json(table.chain);
  j["id"] = table.id;
  j["c"] = table.c;
  j["level_bounds"] = table.level_bounds;
  return j;
}

}  // namespace adjoint
