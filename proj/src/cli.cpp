#include "aode/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aode/solver.hpp"

namespace aode::cli {
namespace {

using arith::FieldContext;
using arith::FieldElement;
using arith::Rational;
using nlohmann::ordered_json;
using poly::MultiPoly;
using poly::TablePtr;
using solve::SolStatus;
using solve::SolutionDescription;

const char* errc_label(Errc c) {
  switch (c) {
    case Errc::syntax: return "syntax";
    case Errc::usage: return "usage";
    case Errc::mixed_field: return "mixed-field";
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::incompatible_tables: return "incompatible-tables";
    case Errc::zero_polynomial: return "zero-polynomial";
    case Errc::y_free: return "y-free";
    case Errc::hypothesis: return "hypothesis";
    case Errc::insufficient_jet: return "insufficient-jet";
    case Errc::length_mismatch: return "length-mismatch";
    case Errc::precondition: return "precondition";
    case Errc::unsupported: return "unsupported";
    case Errc::internal: return "internal";
  }
  return "internal";
}

struct Opts {
  std::string equation;
  std::string field = "rational";
  std::string params;
  std::string initial;
  int order = -1;  // truncation order; negative means pick a default
  int bound = -1;  // global search bound; negative means unset
  std::string out;
  bool json = false;
  std::string object;  // inspect target
  int level = 0;       // inspect index (m, i or k)
  std::string input;   // verify source, "-" reads stdin
};

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  auto push = [&] {
    std::size_t a = cur.find_first_not_of(" \t");
    std::size_t b = cur.find_last_not_of(" \t");
    check(a != std::string::npos, Errc::usage, "empty parameter name");
    out.push_back(cur.substr(a, b - a + 1));
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ',') push();
    else cur += ch;
  }
  push();
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i];
  }
  return s;
}

/// Field tags: "rational", "gaussian", "param" with --params, or the
/// self-contained "param(c_0,c_1)" form that solve writes into JSON.
FieldContext context_from_tag(const std::string& field, const std::string& params) {
  if (field == "rational" || field == "gaussian") {
    check(params.empty(), Errc::usage, "--params requires --field param");
    return field == "rational" ? FieldContext::rationals()
                               : FieldContext::gaussian_rationals();
  }
  if (field == "param") {
    check(!params.empty(), Errc::usage,
          "--field param needs --params with at least one name");
    return FieldContext::parametric(split_names(params));
  }
  if (field.size() > 7 && field.rfind("param(", 0) == 0 && field.back() == ')') {
    check(params.empty(), Errc::usage,
          "give parameter names either in the tag or via --params, not both");
    return FieldContext::parametric(
        split_names(field.substr(6, field.size() - 7)));
  }
  fail(Errc::usage, "unknown field tag; use rational, gaussian or param");
}

std::string tag_of(const FieldContext& ctx) {
  switch (ctx.kind) {
    case arith::FieldKind::rational: return "rational";
    case arith::FieldKind::gaussian: return "gaussian";
    case arith::FieldKind::parametric: {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < ctx.params->size(); ++i)
        names.push_back(ctx.params->name(i));
      return "param(" + join(names, ",") + ")";
    }
  }
  return "rational";
}

void emit(const std::string& text, const std::string& outpath) {
  if (outpath.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(outpath, std::ios::binary);
  check(os.good(), Errc::usage, "cannot open the output file");
  os << text;
}

std::string series_render(const MultiPoly& c, const mpz_class& fac) {
  return poly::render_multipoly(c.times_rat(Rational(mpz_class(1), fac)));
}

std::string render_solution_text(const diff::DiffPoly& f, const FieldContext& ctx,
                                 const SolutionDescription& d) {
  std::ostringstream os;
  os << "equation: " << parse::render_diffpoly(f) << "\n";
  os << "field: " << tag_of(ctx) << "\n";
  os << "order: " << f.order() << "\n";
  const char* st = d.status == SolStatus::empty ? "empty"
                   : d.status == SolStatus::unique ? "unique"
                                                   : "parametrized";
  os << "status: " << st << "\n";
  if (d.status == SolStatus::empty) {
    os << "the tuple cannot be extended to a formal power series solution\n";
    if (!d.note.empty()) os << "note: " << d.note << "\n";
    return os.str();
  }
  os << "provenance: m=" << d.prov.m << " i=" << d.prov.i << " r=" << d.prov.r
     << " q=" << d.prov.q << " M=" << d.prov.M << "\n";
  os << "free indeterminates: "
     << (d.free_vars.empty() ? "(none)" : join(d.free_vars, ", ")) << "\n";
  if (d.constraints.empty()) {
    os << "constraints: (none)\n";
  } else {
    os << "constraints:\n";
    for (const MultiPoly& g : d.constraints)
      os << "  " << poly::render_multipoly(g) << " = 0\n";
  }
  os << "coefficients (l = " << d.ell << "):\n";
  mpz_class fac = 1;
  for (std::size_t j = 0; j < d.coeffs.size(); ++j) {
    if (j > 0) fac *= static_cast<long>(j);
    os << "  c_" << j << " = " << poly::render_multipoly(d.coeffs[j])
       << "  |  x^" << j << " coefficient "
       << series_render(d.coeffs[j], fac) << "\n";
  }
  return os.str();
}

ordered_json solution_json(const diff::DiffPoly& f, const FieldContext& ctx,
                           const SolutionDescription& d) {
  ordered_json j;
  j["equation"] = parse::render_diffpoly(f);
  j["field"] = tag_of(ctx);
  j["order"] = f.order();
  j["provenance"] = {{"m", d.prov.m}, {"i", d.prov.i}, {"r", d.prov.r},
                     {"q", d.prov.q}, {"M", d.prov.M}};
  j["status"] = d.status == SolStatus::empty ? "empty"
                : d.status == SolStatus::unique ? "unique"
                                                : "parametrized";
  j["free_vars"] = d.free_vars;
  ordered_json cons = ordered_json::array();
  for (const MultiPoly& g : d.constraints) cons.push_back(poly::render_multipoly(g));
  j["constraints"] = cons;
  ordered_json coeffs = ordered_json::array();
  mpz_class fac = 1;
  for (std::size_t j2 = 0; j2 < d.coeffs.size(); ++j2) {
    if (j2 > 0) fac *= static_cast<long>(j2);
    coeffs.push_back({{"index", j2},
                      {"c_value", poly::render_multipoly(d.coeffs[j2])},
                      {"series_value", series_render(d.coeffs[j2], fac)}});
  }
  j["coefficients"] = coeffs;
  return j;
}

int cmd_solve(const Opts& o) {
  FieldContext ctx = context_from_tag(o.field, o.params);
  diff::DerivativeCache f(parse::parse_diffpoly(o.equation, ctx));
  check(!o.initial.empty(), Errc::usage, "solve needs --initial");
  auto entries = parse::parse_tuple(o.initial, ctx);
  int n = f.base().order();
  int len = static_cast<int>(entries.size());
  int ell = o.order >= 0 ? o.order : std::max(len - 1, n + 6);
  check(ell >= len - 1, Errc::usage,
        "--order must be at least the tuple length minus one");
  auto d = solve::solve_auto(f, entries, ell);
  if (o.json) {
    emit(solution_json(f.base(), ctx, d).dump(2) + "\n", o.out);
    if (d.status == SolStatus::empty && !d.note.empty())
      std::cerr << "note: " << d.note << "\n";
  } else {
    emit(render_solution_text(f.base(), ctx, d), o.out);
  }
  return d.status == SolStatus::empty ? 2 : 0;
}

int cmd_vanishing_order(const Opts& o) {
  FieldContext ctx = context_from_tag(o.field, o.params);
  diff::DerivativeCache f(parse::parse_diffpoly(o.equation, ctx));
  std::ostringstream os;
  ordered_json j;
  j["equation"] = parse::render_diffpoly(f.base());
  j["field"] = tag_of(ctx);
  j["order"] = f.base().order();
  if (!o.initial.empty()) {
    auto entries = parse::parse_tuple(o.initial, ctx);
    std::vector<FieldElement> vals;
    for (const auto& e : entries) {
      check(e.value.has_value(), Errc::usage,
            "local mode needs a fully concrete tuple");
      vals.push_back(*e.value);
    }
    auto m = jets::detect_local_order(f, vals);
    j["mode"] = "local";
    os << "mode: local\n";
    if (m) {
      j["vanishing_order"] = *m;
      os << "vanishing order at the tuple: " << *m << "\n";
    } else {
      j["vanishing_order"] = nullptr;
      os << "vanishing order at the tuple: none certified by a tuple of this "
            "length\n";
    }
  } else {
    check(o.bound < 0 || o.bound >= 0, Errc::usage, "bound must be nonnegative");
    auto cap = solve::quasilinear_bound(f.base());
    auto rep = solve::global_vanishing_order(
        f, o.bound >= 0 ? std::optional<int>(o.bound) : std::nullopt);
    if (!rep.capped && o.bound < 0)
      std::cerr << "warning: no degree cap applies; searching up to the default "
                   "bound "
                << rep.bound << " (a negative result is inconclusive)\n";
    j["mode"] = "global";
    j["bound"] = rep.bound;
    j["capped"] = rep.capped;
    os << "mode: global\n";
    os << "bound: " << rep.bound << (rep.capped ? " (degree cap)" : "") << "\n";
    if (cap) os << "degree cap: " << *cap << "\n";
    if (rep.order) {
      j["vanishing_order"] = *rep.order;
      os << "global vanishing order: " << *rep.order << "\n";
    } else {
      j["vanishing_order"] = nullptr;
      os << "global vanishing order: not found up to " << rep.bound << "\n";
    }
  }
  emit(o.json ? j.dump(2) + "\n" : os.str(), o.out);
  return 0;
}

int cmd_inspect(const Opts& o) {
  FieldContext ctx = context_from_tag(o.field, o.params);
  diff::DerivativeCache f(parse::parse_diffpoly(o.equation, ctx));
  check(o.level >= 0, Errc::usage, "--level must be nonnegative");
  std::ostringstream os;
  if (o.object == "jet-ideal") {
    for (const MultiPoly& g : jets::jet_ideal(f, o.level))
      os << poly::render_multipoly(g) << "\n";
  } else if (o.object == "separant") {
    if (o.level == 0) {
      os << poly::render_multipoly(diff::separant(f.base())) << "\n";
    } else {
      auto gs = diff::gen_separant(f.base(), o.level);
      TablePtr ext = gs.table->extended({"t"});
      MultiPoly sum(ext);
      for (std::size_t d = 0; d < gs.t_coeffs.size(); ++d)
        sum = sum + gs.t_coeffs[d].lifted(ext) *
                        poly::mp_variable(ext, ext->size() - 1, ctx,
                                          static_cast<std::uint32_t>(d));
      os << poly::render_multipoly(sum) << "\n";
    }
  } else if (o.object == "separant-matrix") {
    for (const auto& row : diff::separant_matrix(f.base(), o.level)) {
      std::vector<std::string> cells;
      for (const MultiPoly& e : row) cells.push_back(poly::render_multipoly(e));
      os << "[" << join(cells, ", ") << "]\n";
    }
  } else if (o.object == "derivative") {
    os << poly::render_multipoly(f.nth(o.level).poly()) << "\n";
  } else {
    fail(Errc::usage,
         "inspect target must be jet-ideal, separant, separant-matrix or "
         "derivative");
  }
  emit(os.str(), o.out);
  return 0;
}

int cmd_verify(const Opts& o) {
  std::string text;
  if (o.input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream is(o.input, std::ios::binary);
    check(is.good(), Errc::usage, "cannot open the input file");
    std::ostringstream buf;
    buf << is.rdbuf();
    text = buf.str();
  }
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::usage, std::string("malformed JSON record: ") + e.what());
  }
  try {
    std::string status = j.at("status").get<std::string>();
    check(status == "unique" || status == "parametrized", Errc::usage,
          "only records with a nonempty status can be verified");
    FieldContext ctx = context_from_tag(j.at("field").get<std::string>(), "");
    diff::DiffPoly f =
        parse::parse_diffpoly(j.at("equation").get<std::string>(), ctx);
    check(f.order() == j.at("order").get<int>(), Errc::usage,
          "order field disagrees with the equation");
    SolutionDescription d;
    d.status = status == "unique" ? SolStatus::unique : SolStatus::parametrized;
    d.free_vars = j.at("free_vars").get<std::vector<std::string>>();
    d.free_table = poly::VarTable::make(d.free_vars);
    for (const auto& c : j.at("constraints"))
      d.constraints.push_back(
          parse::parse_poly(c.get<std::string>(), d.free_table, ctx));
    const auto& coeffs = j.at("coefficients");
    check(!coeffs.empty(), Errc::usage, "record carries no coefficients");
    d.coeffs.resize(coeffs.size(), MultiPoly(d.free_table));
    std::size_t seen = 0;
    for (const auto& c : coeffs) {
      std::size_t idx = c.at("index").get<std::size_t>();
      check(idx < d.coeffs.size(), Errc::usage, "coefficient indices have gaps");
      d.coeffs[idx] =
          parse::parse_poly(c.at("c_value").get<std::string>(), d.free_table, ctx);
      ++seen;
    }
    check(seen == d.coeffs.size(), Errc::usage, "coefficient indices have gaps");
    d.ell = static_cast<int>(d.coeffs.size()) - 1;
    check(d.ell >= f.order(), Errc::usage,
          "record is shorter than the equation order");
    bool ok = solve::verify_truncation(f, d);
    if (ok) {
      emit("verified: back-substitution leaves no residue below the truncation "
           "order\n",
           o.out);
      return 0;
    }
    emit("verification failed: back-substitution leaves a nonzero residue\n",
         o.out);
    return 2;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::usage, std::string("malformed JSON record: ") + e.what());
  }
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"formal power series solutions of algebraic ODEs at the origin"};
  app.require_subcommand(1);
  Opts o;

  auto add_common = [&](CLI::App* c, bool need_eq) {
    auto* eq = c->add_option("--equation", o.equation,
                             "differential polynomial in x, y, y', ...");
    if (need_eq) eq->required();
    c->add_option("--field", o.field, "rational | gaussian | param");
    c->add_option("--params", o.params, "comma-separated parameter names");
    c->add_option("--out", o.out, "write output to this file");
  };

  CLI::App* s = app.add_subcommand("solve", "extend an initial tuple");
  add_common(s, true);
  s->add_option("--initial", o.initial, "initial tuple, e.g. (1, 0, c_2)");
  s->add_option("--order", o.order, "truncation order l");
  s->add_flag("--json", o.json, "machine-readable output");

  CLI::App* v = app.add_subcommand("vanishing-order",
                                   "certify a vanishing order");
  add_common(v, true);
  v->add_option("--initial", o.initial, "tuple for local mode");
  v->add_option("--bound", o.bound, "global search bound");
  v->add_flag("--json", o.json, "machine-readable output");

  CLI::App* i = app.add_subcommand("inspect", "print derived objects");
  add_common(i, true);
  i->add_option("object", o.object,
                "jet-ideal | separant | separant-matrix | derivative")
      ->required();
  i->add_option("--level", o.level, "index m, i or k of the object");

  CLI::App* w = app.add_subcommand("verify", "check an emitted JSON record");
  w->add_option("input", o.input, "JSON file, or - for stdin")->default_val("-");
  w->add_option("--out", o.out, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (s->parsed()) return cmd_solve(o);
    if (v->parsed()) return cmd_vanishing_order(o);
    if (i->parsed()) return cmd_inspect(o);
    return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error[" << errc_label(e.code) << "]: " << e.what();
    if (e.pos) std::cerr << " (byte " << *e.pos << ")";
    std::cerr << "\n";
    return e.code == Errc::internal ? 3 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace aode::cli
