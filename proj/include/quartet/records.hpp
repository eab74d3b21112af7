#pragma once

// One emitted solution in machine-readable form. Integers and rationals are
// carried as exact base-10 strings in both encodings.

#include <optional>
#include <string>
#include <string_view>

#include "quartet/exactnum.hpp"
#include "quartet/quartic.hpp"

namespace quartet {

struct OutputRecord {
  std::optional<std::string> family;
  std::optional<Rat> param;
  Int A, B, C, D;
  Rat a;
  Mode mode = Mode::Raw;
  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_record(const Quadruple& q, Mode mode, std::optional<std::string> family = {},
                         std::optional<Rat> param = {});

std::string_view mode_name(Mode m);

/// {"family":..., "param":..., "A":..., "B":..., "C":..., "D":..., "a":..., "mode":...}
std::string to_json_line(const OutputRecord& r);
/// Throws DomainError on malformed input.
OutputRecord parse_json_line(std::string_view line);

std::string_view csv_header();  // family,param,A,B,C,D,a,mode
/// Absent family/param become empty fields.
std::string to_csv_line(const OutputRecord& r);
OutputRecord parse_csv_line(std::string_view line);

}  // namespace quartet
