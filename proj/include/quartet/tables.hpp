#pragma once

// Golden rows of the printed tables together with the (family, parameter)
// that produced them, and the regeneration pipeline that checks each one.
//
// Tables 1-4 compare raw rows literally, signs and order included. Table 7
// compares canonical classes: the family coefficient is made positive,
// fourth powers are absorbed, and the printed row must lie in the orbit of
// the regenerated quadruple.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quartet/exactnum.hpp"
#include "quartet/families.hpp"
#include "quartet/quartic.hpp"

namespace quartet {

struct TableRow {
  std::string group;     // "(17)", "(18)" in Table 4; empty elsewhere
  FamilyId family;
  Rat param;
  int index = 0;         // Table 5/6 line for Table 7 rows
  Rat a;                 // coefficient as printed
  std::array<Int, 4> printed;
};

struct RowCheck {
  TableRow row;
  std::optional<Quadruple> produced;  // raw row (Tables 1-4) or the matching orbit element (Table 7)
  bool match = false;
  std::string detail;                 // failure reason or empty
};

const std::vector<int>& table_ids();
/// Throws DomainError for ids outside table_ids().
const std::vector<TableRow>& table_rows(int table);
std::string table_caption(int table);

/// Table 7 only: Table 5 (alpha_i(u), t_i(u)) through rho1_solve, or the
/// line-12 spec directly, then the positive-coefficient form for a < 0.
Quadruple table7_raw(const TableRow& row);

RowCheck check_row(int table, const TableRow& row);
std::vector<RowCheck> check_table(int table);

/// Fixed-width text rendering; one line per row ending in "ok" or "MISMATCH".
std::string render_table(int table, const std::vector<RowCheck>& rows);

}  // namespace quartet
