#include "quartet/records.hpp"

#include <json.hpp>
#include <sstream>
#include <vector>

namespace quartet {

namespace {

using json = nlohmann::ordered_json;

Mode parse_mode(std::string_view s) {
  if (s == "raw") return Mode::Raw;
  if (s == "canonical") return Mode::Canonical;
  throw DomainError("unknown mode '" + std::string(s) + "'");
}

}  // namespace

OutputRecord make_record(const Quadruple& q, Mode mode, std::optional<std::string> family,
                         std::optional<Rat> param) {
  return {std::move(family), std::move(param), q.A, q.B, q.C, q.D, q.a, mode};
}

std::string_view mode_name(Mode m) { return m == Mode::Raw ? "raw" : "canonical"; }

std::string to_json_line(const OutputRecord& r) {
  json j;
  j["family"] = r.family ? json(*r.family) : json(nullptr);
  j["param"] = r.param ? json(r.param->str()) : json(nullptr);
  j["A"] = to_string(r.A);
  j["B"] = to_string(r.B);
  j["C"] = to_string(r.C);
  j["D"] = to_string(r.D);
  j["a"] = r.a.str();
  j["mode"] = mode_name(r.mode);
  return j.dump();
}

OutputRecord parse_json_line(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
    OutputRecord r;
    if (!j.at("family").is_null()) r.family = j.at("family").get<std::string>();
    if (!j.at("param").is_null()) r.param = Rat::parse(j.at("param").get<std::string>());
    r.A = parse_int(j.at("A").get<std::string>());
    r.B = parse_int(j.at("B").get<std::string>());
    r.C = parse_int(j.at("C").get<std::string>());
    r.D = parse_int(j.at("D").get<std::string>());
    r.a = Rat::parse(j.at("a").get<std::string>());
    r.mode = parse_mode(j.at("mode").get<std::string>());
    return r;
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad json record: ") + e.what());
  }
}

std::string_view csv_header() { return "family,param,A,B,C,D,a,mode"; }

std::string to_csv_line(const OutputRecord& r) {
  std::ostringstream os;
  os << r.family.value_or("") << ',' << (r.param ? r.param->str() : "") << ',' << to_string(r.A)
     << ',' << to_string(r.B) << ',' << to_string(r.C) << ',' << to_string(r.D) << ','
     << r.a.str() << ',' << mode_name(r.mode);
  return os.str();
}

OutputRecord parse_csv_line(std::string_view line) {
  std::vector<std::string> f;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      f.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  f.push_back(cur);
  if (f.size() != 8) throw DomainError("bad csv record: expected 8 fields");
  OutputRecord r;
  if (!f[0].empty()) r.family = f[0];
  if (!f[1].empty()) r.param = Rat::parse(f[1]);
  r.A = parse_int(f[2]);
  r.B = parse_int(f[3]);
  r.C = parse_int(f[4]);
  r.D = parse_int(f[5]);
  r.a = Rat::parse(f[6]);
  r.mode = parse_mode(f[7]);
  return r;
}

}  // namespace quartet
