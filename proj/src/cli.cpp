#include "quartet/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <ostream>
#include <stdexcept>

#include "quartet/derive.hpp"
#include "quartet/families.hpp"
#include "quartet/records.hpp"
#include "quartet/search.hpp"
#include "quartet/tables.hpp"

namespace quartet {

namespace {

enum class Format { Text, Json, Csv };

const std::map<std::string, Format> kFormats{
    {"text", Format::Text}, {"json", Format::Json}, {"jsonl", Format::Json}, {"csv", Format::Csv}};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rat parse_rat_arg(const std::string& text, const std::string& what) {
  try {
    return Rat::parse(text);
  } catch (const DomainError&) {
    throw UsageError(what + ": expected an integer or p/q, got '" + text + "'");
  }
}

FamilyId parse_family_arg(const std::string& tag) {
  auto id = parse_family(tag);
  if (!id) throw UsageError("unknown family '" + tag + "' (see `quartet families`)");
  return *id;
}

// The CLI never prints a row that fails the equation.
void require_solution(const Quadruple& q) {
  if (!verify_quadruple(q).is_zero()) {
    throw std::logic_error("refusing to print a non-solution: " + q.str());
  }
}

class Emitter {
 public:
  Emitter(std::ostream& out, Format f) : out_(out), format_(f) {}
  void emit(const OutputRecord& r) {
    if (format_ == Format::Csv && !header_done_) {
      out_ << csv_header() << '\n';
      header_done_ = true;
    }
    switch (format_) {
      case Format::Json: out_ << to_json_line(r) << '\n'; break;
      case Format::Csv: out_ << to_csv_line(r) << '\n'; break;
      case Format::Text:
        out_ << "A=" << to_string(r.A) << " B=" << to_string(r.B) << " C=" << to_string(r.C)
             << " D=" << to_string(r.D) << " a=" << r.a.str();
        if (r.family) out_ << "  [" << *r.family << ' ' << (r.param ? r.param->str() : "") << ' '
                           << mode_name(r.mode) << ']';
        out_ << '\n';
        break;
    }
  }

 private:
  std::ostream& out_;
  Format format_;
  bool header_done_ = false;
};

std::size_t index_cap() {
  if (const char* env = std::getenv("QUARTET_MAX_INDEX_BYTES")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw UsageError(std::string("QUARTET_MAX_INDEX_BYTES is not a byte count: ") + env);
    }
  }
  return kDefaultMaxIndexBytes;
}

struct GenArgs {
  std::string family, param, alpha, format = "text";
  bool canonical = false;
};

int cmd_gen(const GenArgs& g, std::ostream& out, std::ostream& err) {
  const FamilyId id = parse_family_arg(g.family);
  const Rat param = parse_rat_arg(g.param, "--param");
  const Mode mode = g.canonical ? Mode::Canonical : Mode::Raw;
  Quadruple q = [&] {
    if (id != FamilyId::Rho1) return generate(id, param, mode);
    if (g.alpha.empty()) throw UsageError("rho1 needs --alpha in addition to --param (= t)");
    Quadruple raw = pqrs_to_quadruple(rho1_solve({parse_rat_arg(g.alpha, "--alpha"), param}));
    return mode == Mode::Canonical ? canonicalize(raw) : raw;
  }();
  require_solution(q);
  if (is_trivial(q)) err << "warning: trivial solution (both sides agree termwise)\n";
  Emitter(out, kFormats.at(g.format)).emit(make_record(q, mode, g.family, param));
  return kExitOk;
}

int cmd_verify(const std::string& a_text, const std::vector<std::string>& quad, std::ostream& out) {
  const Rat a = parse_rat_arg(a_text, "--a");
  if (a.is_zero()) throw UsageError("--a must be nonzero");
  std::array<Int, 4> v;
  for (std::size_t i = 0; i < 4; ++i) {
    try {
      v[i] = parse_int(quad[i]);
    } catch (const DomainError&) {
      throw UsageError("-q: expected four integers, got '" + quad[i] + "'");
    }
  }
  if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; })) {
    throw UsageError("-q: all entries are zero");
  }
  const Quadruple q(v[0], v[1], v[2], v[3], a);
  const Rat res = verify_quadruple(q);
  out << "residual = " << res.str() << '\n';
  if (!res.is_zero()) {
    out << "NOT A SOLUTION\n";
    return kExitFail;
  }
  out << "SOLUTION" << (is_trivial(q) ? " (trivial)" : "") << '\n';
  return kExitOk;
}

struct SearchArgs {
  std::string a;
  long bound = 0;
  std::string format = "jsonl";
  int workers = 1;
  bool no_zero = false;
};

int cmd_search(const SearchArgs& s, std::ostream& out, std::ostream& err) {
  SearchConfig cfg{parse_rat_arg(s.a, "--a"), s.bound, !s.no_zero, s.workers};
  if (cfg.a.is_zero()) throw UsageError("--a must be nonzero");
  if (cfg.bound < 1) throw UsageError("--bound must be >= 1");
  if (cfg.workers < 1) throw UsageError("--workers must be >= 1");
  const std::size_t need = estimate_index_bytes(cfg);
  const std::size_t cap = index_cap();
  if (need > cap) {
    throw UsageError("search index would need ~" + std::to_string(need) + " bytes, over the cap of " +
                     std::to_string(cap) + " (QUARTET_MAX_INDEX_BYTES)");
  }
  const auto hits = brute_search(cfg);
  Emitter em(out, kFormats.at(s.format));
  for (const auto& h : hits) {
    require_solution(h.quad);
    em.emit(make_record(h.quad, Mode::Canonical));
  }
  err << hits.size() << " hit(s), a = " << cfg.a.str() << ", bound " << cfg.bound << '\n';
  return kExitOk;
}

int cmd_table(int id, const std::string& format, std::ostream& out, std::ostream& err) {
  const auto rows = check_table(id);
  const Format f = kFormats.at(format);
  if (f == Format::Text) {
    out << render_table(id, rows);
  } else {
    Emitter em(out, f);
    const Mode mode = id == 7 ? Mode::Canonical : Mode::Raw;
    for (const auto& r : rows) {
      if (!r.match) continue;
      require_solution(*r.produced);
      em.emit(make_record(*r.produced, mode, std::string(family_tag(r.row.family)), r.row.param));
    }
  }
  int bad = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].match) continue;
    ++bad;
    err << "table " << id << " row " << i + 1 << " (" << family_tag(rows[i].row.family) << " at "
        << rows[i].row.param.str() << "): " << rows[i].detail << '\n';
  }
  return bad == 0 ? kExitOk : kExitFail;
}

int cmd_identity(const std::string& target, std::ostream& out) {
  std::vector<FamilyId> ids;
  if (target == "all") {
    ids = registered_families();
  } else {
    const FamilyId id = parse_family_arg(target);
    if (id == FamilyId::Rho1) throw UsageError("rho1 has two parameters; it is checked per Table 5 line");
    ids.push_back(id);
  }
  bool all_ok = true;
  for (FamilyId id : ids) {
    const FamilySpec& spec = family_spec(id);
    const RatFn res = identity_residual(spec);
    const bool structural = is_identically_zero(res);
    const bool sampled = identity_holds_numerically(spec);
    if (structural && sampled) {
      out << "PASS " << family_tag(id) << '\n';
    } else {
      all_ok = false;
      out << "FAIL " << family_tag(id) << "  residual = " << res.str(spec.param)
          << (sampled ? "" : "  (nonzero at sample points)") << '\n';
    }
  }
  return all_ok ? kExitOk : kExitFail;
}

struct DeriveArgs {
  int which = 0;
  std::string variant = "linear";
  std::string t, n;
};

void print_final(const RhoState& st, std::ostream& out) {
  out << "eq7_residual = " << eq7_residual(st).str() << '\n';
  const Quadruple q = pqrs_to_quadruple(state_to_pqrs(st), Mode::Raw);
  require_solution(q);
  out << "quadruple = " << q.str() << (is_trivial(q) ? "  (trivial)" : "") << '\n';
}

int cmd_derive(const DeriveArgs& d, std::ostream& out) {
  if (d.which == 1) {
    if (d.t.empty()) throw UsageError("--case 1 needs --t");
    if (d.variant != "linear" && d.variant != "quadratic") {
      throw UsageError("--variant must be linear or quadratic");
    }
    const Rat t = parse_rat_arg(d.t, "--t");
    const auto v = d.variant == "linear" ? Case1Variant::Linear : Case1Variant::Quadratic;
    const auto c = derive_case1(t, v);
    out << "case 1: a = 1, rho = 1 + z, " << d.variant << " omega ansatz, t = " << t.str() << '\n'
        << "z = " << c.z.str() << '\n'
        << "rho = " << c.rho.str() << '\n'
        << "omega = " << c.omega.str() << '\n';
    print_final({Rat(1), c.rho, t, c.omega}, out);
    return kExitOk;
  }
  if (d.which == 2) {
    if (d.n.empty()) throw UsageError("--case 2 needs --n");
    const Rat n = parse_rat_arg(d.n, "--n");
    const auto c = derive_case2(n);
    out << "case 2: a = -1, n = " << n.str() << '\n'
        << "v = " << c.v.str() << '\n'
        << "rho = " << c.rho.str() << '\n'
        << "t = " << c.t.str() << '\n'
        << "k = " << c.k.str() << '\n'
        << "z = " << c.z.str() << '\n'
        << "omega = " << c.omega.str() << '\n'
        << "Delta = " << c.delta.str() << "  (t^2 = (3rho^2 + 1 " << (c.delta_sign > 0 ? '+' : '-')
        << " Delta)/(2rho^3))\n";
    print_final({Rat(-1), c.rho, c.t, c.omega}, out);
    return kExitOk;
  }
  throw UsageError("--case must be 1 or 2");
}

int cmd_families(std::ostream& out) {
  for (FamilyId id : registered_families()) {
    const FamilySpec& s = family_spec(id);
    const std::string& v = s.param;
    out << family_tag(id) << " (" << v << "): " << s.description << '\n'
        << "  p = " << s.p.str(v) << '\n'
        << "  q = " << s.q.str(v) << '\n'
        << "  r = " << s.r.str(v) << '\n'
        << "  s = " << s.s.str(v) << '\n'
        << "  a = " << s.a.str(v) << '\n';
  }
  out << "rho1 (alpha, t): a = (alpha^2 + t^2)/((2alpha + 3)t^2 + 1), p = t(at^2 + 1), "
         "q = at^2 - alpha, r = tq, s = t^2 + 1\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solutions of A^4 + aB^4 = C^4 + aD^4", "quartet"};
  app.require_subcommand(1);

  GenArgs g;
  auto* gen = app.add_subcommand("gen", "evaluate a family at a parameter");
  gen->add_option("--family", g.family, "family tag")->required();
  gen->add_option("--param", g.param, "parameter, p or p/q (t for rho1)")->required();
  gen->add_option("--alpha", g.alpha, "alpha, rho1 only");
  auto* raw_flag = gen->add_flag("--raw", "signed, gcd-reduced row (default)");
  gen->add_flag("--canonical", g.canonical, "canonical orbit representative")->excludes(raw_flag);
  gen->add_option("--format", g.format)->check(CLI::IsMember({"text", "json", "jsonl", "csv"}));

  std::string verify_a;
  std::vector<std::string> verify_q;
  auto* verify = app.add_subcommand("verify", "check a quadruple");
  verify->add_option("--a", verify_a, "coefficient")->required();
  verify->add_option("-q,--quad", verify_q, "A,B,C,D")->delimiter(',')->expected(4)->required();

  SearchArgs s;
  auto* search = app.add_subcommand("search", "brute-force all solutions up to a bound");
  search->add_option("--a", s.a, "coefficient")->required();
  search->add_option("--bound", s.bound, "largest entry N")->required();
  search->add_option("--format", s.format)->check(CLI::IsMember({"json", "jsonl", "csv"}));
  search->add_option("--workers", s.workers, "OpenMP threads");
  search->add_flag("--no-zero", s.no_zero, "skip zero entries");

  int table_id = 0;
  std::string table_format = "text";
  auto* table = app.add_subcommand("table", "regenerate a printed table and compare");
  table->add_option("id", table_id, "1, 2, 3, 4 or 7")->required();
  table->add_option("--format", table_format)->check(CLI::IsMember({"text", "json", "jsonl", "csv"}));

  std::string identity_target;
  auto* identity = app.add_subcommand("identity", "symbolic identity check");
  identity->add_option("family", identity_target, "family tag or 'all'")->required();

  DeriveArgs d;
  auto* derive = app.add_subcommand("derive", "print a derivation chain");
  derive->add_option("--case", d.which, "1 (a = 1) or 2 (a = -1)")->required();
  derive->add_option("--variant", d.variant, "linear or quadratic (case 1)");
  derive->add_option("--t", d.t, "t (case 1)");
  derive->add_option("--n", d.n, "n (case 2)");

  auto* families = app.add_subcommand("families", "list registered families");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << '\n' << "run `quartet --help`\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(g, out, err);
    if (verify->parsed()) return cmd_verify(verify_a, verify_q, out);
    if (search->parsed()) return cmd_search(s, out, err);
    if (table->parsed()) {
      if (std::find(table_ids().begin(), table_ids().end(), table_id) == table_ids().end()) {
        throw UsageError("no table " + std::to_string(table_id) + " (known: 1, 2, 3, 4, 7)");
      }
      return cmd_table(table_id, table_format, out, err);
    }
    if (identity->parsed()) return cmd_identity(identity_target, out);
    if (derive->parsed()) return cmd_derive(d, out);
    if (families->parsed()) return cmd_families(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace quartet
