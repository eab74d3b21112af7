#include "quartet/tables.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace quartet {

namespace {

TableRow row(FamilyId f, const char* param, Rat a, long A, long B, long C, long D,
             std::string group = "") {
  return {std::move(group), f, Rat::parse(param), 0, a, {Int(A), Int(B), Int(C), Int(D)}};
}

TableRow row7(long a, const char* A, const char* B, const char* C, const char* D, int i,
              const char* u) {
  const FamilyId f = i == 12 ? FamilyId::T6_12 : table5_row(i).table6;
  return {"", f, Rat::parse(u), i, Rat(a),
          {parse_int(A), parse_int(B), parse_int(C), parse_int(D)}};
}

std::vector<TableRow> build(int table) {
  using F = FamilyId;
  switch (table) {
    case 1:
      return {row(F::Euler1, "3", 1, 158, -59, 133, 134), row(F::Euler1, "2", 1, 1203, -76, 653, 1176),
              row(F::Euler1, "5", 1, 3351, -2338, 3494, 1623),
              row(F::Euler1, "5/3", 1, 17332, 529, 6673, 17236)};
    case 2:
      // Row t = 2 is kept as printed; it does not satisfy the equation.
      return {row(F::Euler2, "3", 1, 10381, 10203, 2903, 12231),
              row(F::Euler2, "2", 1, 1584749, 2061373, -555707, 2219449),
              row(F::Euler2, "5", 1, 2533177, 1123601, 1834883, 2367869)};
    case 3:
      return {row(F::NegA16, "1", -1, 7, 157, -227, 239),
              row(F::NegA16, "-2", -1, -257, 292, 193, -256),
              row(F::NegA16, "-1/2", -1, 502, 298, -497, -271),
              row(F::NegA16, "-3/2", -1, -6842, 9018, -4903, -8409),
              row(F::NegA16, "1/2", -1, 6742, 5098, -9043, 8531),
              row(F::NegA16, "2", -1, -10757, 18292, -45883, 46136),
              row(F::NegA16, "-3", -1, -28997, 33237, 59777, -60369),
              row(F::NegA16, "-1/3", -1, 89841, 27879, -90829, -43307)};
    case 4:
      return {row(F::Deg13, "1", 1, 292, 193, 257, 256, "(17)"),
              row(F::Deg13, "-2", 1, -2797, 248, 2131, -2524, "(17)"),
              row(F::Deg13, "-1/2", 1, 2345, -2986, 3190, 1577, "(17)"),
              row(F::Deg13, "1/2", 1, 60763, 38078, 62206, 29531, "(17)"),
              row(F::Deg15, "-2", 1, -239, 7, -227, 157, "(18)"),
              row(F::Deg15, "1", 1, 4288, 4303, 3364, 4849, "(18)"),
              row(F::Deg15, "-1/2", 1, 2707, 6730, 3070, -6701, "(18)"),
              row(F::Deg15, "-3/2", 1, -73703, 154522, -151394, -92839, "(18)")};
    case 7:
      return {
          row7(1, "631", "222", "558", "503", 3, "7/4"),
          row7(1, "631", "222", "558", "503", 8, "1/3"),
          row7(1, "1381", "878", "1342", "997", 8, "3"),
          row7(1, "2949", "1034", "2854", "1797", 5, "7/4"),
          row7(1, "10943964", "1733885", "10758915", "5558948", 10, "7/16"),
          row7(2, "248", "223", "44", "257", 7, "3"),
          row7(2, "16727", "36384", "41513", "23532", 7, "7/9"),
          row7(3, "4", "1", "2", "3", 3, "1"),
          row7(3, "11", "2", "7", "8", 5, "1"),
          row7(3, "11", "2", "7", "8", 9, "1"),
          row7(3, "37", "1", "23", "27", 7, "2"),
          row7(3, "86", "997", "1256", "631", 9, "3"),
          row7(3, "93", "134", "63", "136", 3, "5"),
          row7(3, "277", "149", "241", "191", 8, "2"),
          row7(3, "277", "149", "241", "191", 9, "2"),
          row7(3, "304", "127", "268", "193", 8, "1/2"),
          row7(3, "444", "49", "426", "211", 5, "5"),
          row7(3, "16897", "3348", "16703", "6064", 7, "7"),
          row7(4, "9", "4", "7", "6", 1, "1"),
          row7(4, "19", "46", "61", "32", 1, "3"),
          row7(4, "47", "3", "33", "31", 1, "1/2"),
          row7(4, "101", "77", "107", "73", 1, "3/2"),
          row7(4, "137", "14", "103", "88", 1, "1/3"),
          row7(4, "219", "122", "11", "168", 1, "5"),
          row7(5, "3", "0", "1", "2", 4, "1"),
          row7(5, "22", "17", "4", "19", 12, "3/2"),
          row7(5, "197", "85", "49", "137", 6, "3/2"),
          row7(5, "58879", "15860", "59201", "10064", 7, "9"),
          row7(5, "64151", "34620", "51031", "43152", 7, "1/9"),
          row7(9, "625", "77", "85", "361", 2, "3/2"),
          row7(9, "830", "329", "250", "503", 2, "8/3"),
          row7(9, "2159", "1367", "1513", "1519", 2, "15/4"),
          row7(9, "2509", "233", "1105", "1435", 2, "5/6"),
      };
    default:
      throw DomainError("no table " + std::to_string(table) + " (known: 1, 2, 3, 4, 7)");
  }
}

std::string tuple_str(const std::array<Int, 4>& v) {
  return "(" + to_string(v[0]) + ", " + to_string(v[1]) + ", " + to_string(v[2]) + ", " +
         to_string(v[3]) + ")";
}

}  // namespace

const std::vector<int>& table_ids() {
  static const std::vector<int> ids{1, 2, 3, 4, 7};
  return ids;
}

const std::vector<TableRow>& table_rows(int table) {
  static const std::vector<std::vector<TableRow>> all = [] {
    std::vector<std::vector<TableRow>> v;
    for (int id : table_ids()) v.push_back(build(id));
    return v;
  }();
  const auto& ids = table_ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == table) return all[i];
  }
  build(table);  // throws with the message
  throw std::logic_error("unreachable");
}

std::string table_caption(int table) {
  switch (table) {
    case 1: return "Table 1: Euler's 1st solution of A^4 + B^4 = C^4 + D^4 (euler1, raw)";
    case 2: return "Table 2: Euler's 2nd solution of A^4 + B^4 = C^4 + D^4 (euler2, raw)";
    case 3: return "Table 3: solutions of A^4 - B^4 = C^4 - D^4 (nega16, raw)";
    case 4: return "Table 4: more small solutions of A^4 + B^4 = C^4 + D^4 (deg13, deg15, raw)";
    case 7: return "Table 7: numerical solutions of A^4 + aB^4 = C^4 + aD^4 (canonical classes)";
    default: throw DomainError("no table " + std::to_string(table));
  }
}

Quadruple table7_raw(const TableRow& row) {
  PqrsTuple ps;
  if (row.index == 12) {
    ps = eval_family(FamilyId::T6_12, row.param);
  } else {
    const Table5Row& line = table5_row(row.index);
    Rat alpha = line.alpha.eval(row.param, "u");
    Rat t = line.t.eval(row.param, "u");
    ps = rho1_solve({std::move(alpha), std::move(t)});
  }
  Quadruple q = pqrs_to_quadruple(ps, Mode::Raw);
  return q.a.sign() < 0 ? positive_coefficient_form(q) : q;
}

RowCheck check_row(int table, const TableRow& row) {
  RowCheck out{row, std::nullopt, false, ""};
  try {
    if (table == 7) {
      const Quadruple canon = canonicalize(table7_raw(row));
      for (const auto& e : orbit(canon)) {
        if (e.a == row.a && e.entries() == row.printed) {
          out.produced = e;
          out.match = true;
          break;
        }
      }
      if (!out.match) {
        out.produced = canon;
        out.detail = "printed row is not in the orbit of " + canon.str();
      }
    } else {
      Quadruple q = generate(row.family, row.param, Mode::Raw);
      out.produced = q;
      out.match = q.a == row.a && q.entries() == row.printed;
      if (!out.match) out.detail = "printed " + tuple_str(row.printed) + ", generated " + q.str();
    }
    if (out.produced && !verify_quadruple(*out.produced).is_zero()) {
      throw std::logic_error("regenerated row is not a solution: " + out.produced->str());
    }
  } catch (const DomainError& e) {
    out.match = false;
    out.detail = e.what();
  }
  return out;
}

std::vector<RowCheck> check_table(int table) {
  std::vector<RowCheck> out;
  for (const auto& r : table_rows(table)) out.push_back(check_row(table, r));
  return out;
}

std::string render_table(int table, const std::vector<RowCheck>& rows) {
  std::ostringstream os;
  os << table_caption(table) << '\n';
  const auto cell = [&](const std::string& s, int w) { os << std::setw(w) << s; };
  if (table == 7) {
    cell("a", 3); cell("A", 10); cell("B", 10); cell("C", 10); cell("D", 10); cell("i", 4);
    cell("u", 6);
  } else {
    if (table == 4) cell("eq", 5);
    cell(table == 1 || table == 2 ? "t" : "n", 6);
    for (const char* h : {"A", "B", "C", "D"}) cell(h, 10);
  }
  os << "  status\n";
  for (const auto& r : rows) {
    const auto& shown = r.match ? r.produced->entries() : r.row.printed;
    if (table == 7) {
      cell(r.row.a.str(), 3);
      for (const auto& v : shown) cell(to_string(v), 10);
      cell(std::to_string(r.row.index), 4);
      cell(r.row.param.str(), 6);
    } else {
      if (table == 4) cell(r.row.group, 5);
      cell(r.row.param.str(), 6);
      for (const auto& v : shown) cell(to_string(v), 10);
    }
    os << "  " << (r.match ? "ok" : "MISMATCH: " + r.detail) << '\n';
  }
  return os.str();
}

}  // namespace quartet
