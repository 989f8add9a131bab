#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "enumerate.hpp"
#include "gin.hpp"
#include "parse.hpp"
#include "regularity.hpp"

namespace cmreg::cli {

using nlohmann::json;

struct Options {
  std::string command;
  std::string input_path; // "-" reads the in stream
  TermOrder order = TermOrder::degrevlex;
  long charac = -1; // >= 0 overrides the document's characteristic
  std::uint64_t seed = 0;
  int trials = 3;
  int upto = -1;
  bool csv = false;
  int r = -1;
  int m = -1;
  int d = -1;
  long e = -1;
  std::string fixtures = "fixtures";
};

inline int exit_code_for(errc k) {
  switch (k) {
    case errc::usage:
    case errc::parse:
    case errc::mismatched_rings:
    case errc::non_homogeneous:
      return 1;
    default:
      return 2;
  }
}

namespace detail {

inline long to_long(const std::string& s, const std::string& flag) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw error(errc::usage, "bad value for " + flag + ": '" + s + "'");
  }
}

inline Options parse_args(const std::vector<std::string>& args) {
  static const std::vector<std::string> commands = {
      "hf",        "series",    "reg",       "gin",
      "lex",       "gotzmann",  "sat",       "bounds",
      "enumerate", "check-mumford", "verify-paper"};
  Options o;
  std::size_t i = 0;
  if (i < args.size() && !args[i].empty() && args[i][0] != '-') o.command = args[i++];
  if (std::find(commands.begin(), commands.end(), o.command) == commands.end())
    throw error(errc::usage, o.command.empty() ? "missing command"
                                               : "unknown command '" + o.command + "'");
  auto value = [&](const std::string& flag, const std::string& inline_val,
                   bool has_inline) -> std::string {
    if (has_inline) return inline_val;
    if (i >= args.size()) throw error(errc::usage, flag + " needs a value");
    return args[i++];
  };
  while (i < args.size()) {
    std::string a = args[i++];
    if (a.size() < 2 || a[0] != '-' || a[1] != '-') {
      if (o.input_path.empty() && (a == "-" || a[0] != '-')) { o.input_path = a; continue; }
      throw error(errc::usage, "unexpected argument '" + a + "'");
    }
    std::string flag = a, inline_val;
    bool has_inline = false;
    if (auto eq = a.find('='); eq != std::string::npos) {
      flag = a.substr(0, eq);
      inline_val = a.substr(eq + 1);
      has_inline = true;
    }
    if (flag == "--json") { o.csv = false; continue; }
    if (flag == "--csv") { o.csv = true; continue; }
    std::string v = value(flag, inline_val, has_inline);
    if (flag == "--order") {
      if (v == "degrevlex") o.order = TermOrder::degrevlex;
      else if (v == "lex") o.order = TermOrder::lex;
      else throw error(errc::usage, "unknown order '" + v + "'");
    } else if (flag == "--char") {
      o.charac = to_long(v, flag);
      if (o.charac < 0) throw error(errc::usage, "--char must be nonnegative");
    } else if (flag == "--seed") {
      o.seed = static_cast<std::uint64_t>(to_long(v, flag));
    } else if (flag == "--trials") {
      o.trials = static_cast<int>(to_long(v, flag));
      if (o.trials < 2) throw error(errc::usage, "--trials must be at least 2");
    } else if (flag == "--upto") {
      o.upto = static_cast<int>(to_long(v, flag));
      if (o.upto < 0) throw error(errc::usage, "--upto must be nonnegative");
    } else if (flag == "--r") {
      o.r = static_cast<int>(to_long(v, flag));
    } else if (flag == "--m") {
      o.m = static_cast<int>(to_long(v, flag));
    } else if (flag == "--d") {
      o.d = static_cast<int>(to_long(v, flag));
    } else if (flag == "--e") {
      o.e = to_long(v, flag);
    } else if (flag == "--fixtures") {
      o.fixtures = v;
    } else {
      throw error(errc::usage, "unknown flag '" + flag + "'");
    }
  }
  return o;
}

inline json j_big(const Int& v) { return v.get_str(); }

inline json j_bigs(const std::vector<Int>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(j_big(v));
  return a;
}

inline std::string ratpoly_text(const RatPoly& p, const std::string& var) {
  if (p.degree() < 0) return "0";
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    Rat c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    bool neg = c < 0;
    Rat ab = abs(c);
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    std::string cs = rat_str(ab);
    if (k == 0) s += cs;
    else {
      if (cs != "1") s += cs + "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

inline json j_ratpoly(const RatPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(rat_str(c));
  return json{{"coeffs", coeffs}, {"text", ratpoly_text(p, "n")}};
}

inline json j_hp(const HilbertPolynomial& hp) {
  json j = j_ratpoly(hp.p);
  j["dim"] = hp.dim;
  return j;
}

inline json j_series(const HilbertSeries& s) {
  return json{{"numerator", j_bigs(s.numerator)},
              {"denom_exponent", s.denom_exponent},
              {"zero_ring", s.zero_ring}};
}

inline json j_monideal(const MonomialIdeal& j) {
  json a = json::array();
  for (const auto& g : j.gens()) a.push_back(g.str(j.ring()->vars));
  return a;
}

template <class F>
json j_input(const Options& o, const IdealDocument& doc, const Ideal<F>& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.gens) gens.push_back(poly_str(g, ideal.ring->vars));
  return json{{"file", o.input_path},
              {"name", doc.name},
              {"vars", ideal.ring->vars},
              {"char", ideal.ring->field.characteristic},
              {"order", o.order == TermOrder::lex ? "lex" : "degrevlex"},
              {"gens", gens}};
}

inline GinOptions gin_options(const Options& o) {
  GinOptions g;
  g.max_trials = o.trials;
  return g;
}

template <class F>
MonomialIdeal working_ideal(const Ideal<F>& ideal, TermOrder order) {
  if (ideal.gens.empty()) return MonomialIdeal::zero(ideal.ring);
  if (ideal.all_monomial()) {
    std::vector<Monomial> mons;
    for (const auto& g : ideal.gens) mons.push_back(g.lm());
    return MonomialIdeal(ideal.ring, std::move(mons));
  }
  return initial_ideal(ideal, order);
}

/// Degree bound through which the lex-segment ideal of the input's Hilbert
/// function is generated: past it only the shifts repeat.
inline int lex_through_degree(const HilbertSeries& s, const HilbertFunction& hf, int max_gen_deg) {
  GotzmannRep rep = gotzmann_representation(hilbert_polynomial(s));
  long t = std::max<long>({rep.s(), hf.agreement_index, max_gen_deg});
  return static_cast<int>(t) + 2;
}

template <class F>
json cmd_hf(const Options& o, const Ideal<F>& ideal, int& code, std::ostream& out) {
  MonomialIdeal w = working_ideal(ideal, o.order);
  HilbertSeries s = hilbert_series(w);
  int n_max = o.upto >= 0 ? o.upto : w.max_gen_degree() + ideal.ring->nvars() + 4;
  HilbertFunction hf = tabulate_hf(s, n_max);
  if (o.csv) {
    out << "n,h\n";
    for (std::size_t n = 0; n < hf.values.size(); ++n)
      out << n << "," << hf.values[n].get_str() << "\n";
    code = 0;
    return json();
  }
  return json{{"values", j_bigs(hf.values)},
              {"agreement_index", hf.agreement_index},
              {"polynomial", j_hp(hilbert_polynomial(s))},
              {"dim", s.dimension()},
              {"dim_zero", s.dimension_zero()},
              {"multiplicity", j_big(s.numerator_at_one())},
              {"embdim", j_big(hf.embdim())}};
}

template <class F>
json cmd_series(const Options& o, const Ideal<F>& ideal) {
  MonomialIdeal w = working_ideal(ideal, o.order);
  HilbertSeries s = hilbert_series(w);
  json j = j_series(s);
  j["dim"] = s.dimension();
  j["dim_zero"] = s.dimension_zero();
  j["multiplicity"] = j_big(s.numerator_at_one());
  return j;
}

template <class F>
json cmd_reg(const Options& o, const Ideal<F>& ideal, std::vector<std::string>& warnings) {
  RegularityReport rep = regularity(ideal, o.seed, gin_options(o));
  warnings = rep.warnings;
  json j{{"reg", rep.reg},
         {"g_reg", rep.g_reg},
         {"route", route_name(rep.route)},
         {"upper_bound_only", rep.upper_bound_only},
         {"dim", rep.dim},
         {"dim_zero", rep.dim_zero},
         {"multiplicity", j_big(rep.mult)},
         {"embdim", rep.embdim},
         {"max_gen_degree", rep.max_gen_degree},
         {"working_gens", j_monideal(rep.working)},
         {"series", j_series(rep.series)}};
  if (rep.gin_used) {
    j["gin"] = json{{"trials_used", rep.gin_used->trials_used},
                    {"seed", rep.gin_used->seed},
                    {"borel_fixed", rep.gin_used->borel_fixed}};
  }
  return j;
}

template <class F>
json cmd_gin(const Options& o, const Ideal<F>& ideal, std::vector<std::string>& warnings) {
  if (o.order != TermOrder::degrevlex)
    throw error(errc::usage, "gin is computed for the degrevlex order only");
  GinOptions go = gin_options(o);
  GinResult res = gin(ideal, o.seed, go);
  if (!res.borel_fixed) warnings.push_back("NOT-BOREL");
  return json{{"gens", j_monideal(res.gin)},
              {"borel_fixed", res.borel_fixed},
              {"trials_used", res.trials_used},
              {"seed", res.seed},
              {"max_gen_degree", res.max_gen_degree}};
}

template <class F>
json cmd_lex(const Options& o, const Ideal<F>& ideal) {
  MonomialIdeal w = working_ideal(ideal, o.order);
  HilbertSeries s = hilbert_series(w);
  int through = o.upto >= 0
                    ? o.upto
                    : lex_through_degree(s, tabulate_hf(s, w.max_gen_degree() + ideal.ring->nvars() + 4),
                                         w.max_gen_degree());
  std::vector<Int> h = series_values(s, through);
  MonomialIdeal lex = lex_segment_ideal(ideal.ring, h);
  return json{{"gens", j_monideal(lex)},
              {"computed_through", through},
              {"hf_prefix", j_bigs(h)}};
}

template <class F>
json cmd_gotzmann(const Options& o, const Ideal<F>& ideal) {
  MonomialIdeal w = working_ideal(ideal, o.order);
  HilbertSeries s = hilbert_series(w);
  HilbertPolynomial hp = hilbert_polynomial(s);
  GotzmannRep rep = gotzmann_representation(hp);
  json a = json::array();
  for (long ai : rep.a) a.push_back(ai);
  return json{{"a", a}, {"s", rep.s()}, {"bound", rep.bound()}, {"polynomial", j_hp(hp)}};
}

template <class F>
json cmd_sat(const Options&, const Ideal<F>& ideal) {
  if (!ideal.all_monomial())
    throw error(errc::unsupported, "saturation is implemented for monomial ideals");
  std::vector<Monomial> mons;
  for (const auto& g : ideal.gens) mons.push_back(g.lm());
  MonomialIdeal j(ideal.ring, std::move(mons));
  MonomialIdeal sj = saturate(j);
  return json{{"input_gens", j_monideal(j)},
              {"saturation_gens", j_monideal(sj)},
              {"saturated", j == sj}};
}

inline json cmd_bounds(const Options& o) {
  if (o.d < 1) throw error(errc::usage, "bounds needs --d >= 1");
  json j{{"d", o.d},
         {"F_poly", j_ratpoly(bound_polynomial_F(o.d))},
         {"Q_poly", j_ratpoly(bound_polynomial_Q(o.d))}};
  if (o.e >= 0) {
    if (o.e < 1) throw error(errc::usage, "--e must be at least 1");
    Int e(o.e);
    auto [reg_bound, embdim_bound] = kleiman_bounds(o.d, e);
    j["e"] = o.e;
    j["kleiman_reg_bound"] = j_big(reg_bound);
    j["kleiman_embdim_bound"] = j_big(embdim_bound);
    j["cm_tangent_cone_bound"] = j_big(cm_tangent_cone_bound(o.d, e));
    j["abhyankar_bound"] = j_big(abhyankar_bound(o.d, e));
  }
  return j;
}

inline RingPtr census_ring(int r) {
  static const char* short_names[] = {"x", "y", "z", "t", "u", "v"};
  std::vector<std::string> names;
  for (int i = 0; i < r; ++i)
    names.push_back(r <= 6 ? short_names[i] : "x" + std::to_string(i + 1));
  return make_ring(names, 0);
}

inline json cmd_enumerate(const Options& o, int& code, std::ostream& out) {
  if (o.r < 1 || o.m < 0) throw error(errc::usage, "enumerate needs --r >= 1 and --m >= 0");
  auto census = enumerate_hilbert_functions(census_ring(o.r), o.m);
  if (o.csv) {
    out << "index,prefix,polynomial\n";
    int idx = 0;
    for (const auto& sig : census) {
      out << idx++ << ",";
      for (std::size_t n = 0; n < sig.prefix.size(); ++n)
        out << (n ? " " : "") << sig.prefix[n].get_str();
      out << "," << ratpoly_text(sig.poly.p, "n") << "\n";
    }
    code = 0;
    return json();
  }
  json sigs = json::array();
  for (const auto& sig : census)
    sigs.push_back(json{{"prefix", j_bigs(sig.prefix)}, {"polynomial", j_hp(sig.poly)}});
  return json{{"r", o.r}, {"m", o.m}, {"count", census.size()}, {"signatures", sigs}};
}

template <class F>
json cmd_check_mumford(const Options& o, const Ideal<F>& ideal, int& code) {
  MumfordReport rep = check_mumford(ideal, o.seed, gin_options(o));
  code = rep.holds() ? 0 : 3;
  return json{{"m", rep.m},
              {"reg", rep.reg},
              {"window_lo", rep.window_lo},
              {"delta", j_bigs(rep.delta)},
              {"h0_quotient", j_bigs(rep.h0_quotient)},
              {"ok_window", rep.ok_window},
              {"ok_a", rep.ok_a},
              {"ok_b", rep.ok_b},
              {"status", rep.status()}};
}

// ---- fixture verification ----------------------------------------------

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

inline std::vector<Int> parse_int_list(const std::string& s) {
  std::istringstream in(s);
  std::vector<Int> out;
  std::string tok;
  while (in >> tok) out.emplace_back(tok);
  return out;
}

template <class F>
std::vector<CheckResult> run_fixture(const Options& o, const IdealDocument& doc,
                                     const Ideal<F>& ideal) {
  std::vector<CheckResult> results;
  auto record = [&](const std::string& name, bool ok, const std::string& detail) {
    results.push_back({name, ok, detail});
  };

  RegularityReport rep = regularity(ideal, o.seed, gin_options(o));
  HilbertSeries s = rep.series;
  HilbertPolynomial hp = hilbert_polynomial(s);
  int n_max = std::max({rep.reg, rep.g_reg, rep.max_gen_degree, 0}) + 6;
  HilbertFunction hf = tabulate_hf(s, n_max);

  for (const auto& [key, raw] : doc.expects) {
    if (key == "reg" || key == "g_reg" || key == "dim" || key == "embdim") {
      long want = detail::to_long(raw, "expect " + key);
      long got = key == "reg"     ? rep.reg
                 : key == "g_reg" ? rep.g_reg
                 : key == "dim"   ? rep.dim
                                  : rep.embdim;
      record("expect:" + key, got == want,
             "expected " + std::to_string(want) + ", got " + std::to_string(got));
    } else if (key == "mult") {
      Int want(raw);
      record("expect:mult", rep.mult == want,
             "expected " + want.get_str() + ", got " + rep.mult.get_str());
    } else if (key == "hf") {
      std::vector<Int> want = parse_int_list(raw);
      std::vector<Int> got_v =
          want.empty() ? std::vector<Int>{} : series_values(s, static_cast<int>(want.size()) - 1);
      bool ok = got_v == want;
      std::string got;
      for (std::size_t n = 0; n < got_v.size(); ++n) got += (n ? " " : "") + got_v[n].get_str();
      record("expect:hf", ok, "expected '" + raw + "', got '" + got + "'");
    } else {
      record("expect:" + key, false, "unknown expectation key");
    }
  }

  for (const auto& check : doc.checks) {
    if (check == "mumford") {
      MumfordReport mr = check_mumford(ideal, o.seed, gin_options(o));
      record("mumford", mr.holds(),
             "m=" + std::to_string(mr.m) + " status=" + mr.status());
    } else if (check == "kleiman") {
      if (rep.dim < 1) {
        record("kleiman", false, "needs dim >= 1");
      } else {
        auto [reg_bound, embdim_bound] = kleiman_bounds(rep.dim, rep.mult);
        bool ok = Int(std::max(rep.reg, rep.g_reg)) <= reg_bound &&
                  Int(rep.embdim) <= embdim_bound;
        record("kleiman", ok,
               "reg=" + std::to_string(std::max(rep.reg, rep.g_reg)) +
                   " bound=" + reg_bound.get_str() + ", embdim=" + std::to_string(rep.embdim) +
                   " bound=" + embdim_bound.get_str());
      }
    } else if (check == "cm-dim1") {
      bool ok = rep.dim == 1 && Int(rep.reg) <= rep.mult - 1;
      record("cm-dim1", ok,
             "reg=" + std::to_string(rep.reg) + " e-1=" + Int(rep.mult - 1).get_str());
    } else {
      record(check, false, "unknown check");
    }
  }

  // every fixture also exercises the order-independence, eventual-polynomial,
  // growth, and saturation-bound facts
  {
    HilbertSeries s_lex = hilbert_series(working_ideal(ideal, TermOrder::lex));
    bool ok = s_lex.numerator == s.numerator && s_lex.denom_exponent == s.denom_exponent;
    record("hf-order-independence", ok, "lex and degrevlex initial ideals give one series");
  }
  {
    bool ok = true;
    int from = std::max(rep.reg + 1, 0);
    for (int n = from; n <= n_max; ++n)
      if (deficiency(hf.values, hp, n) != 0) ok = false;
    record("hf-eventually-polynomial", ok,
           "h(n) = p(n) for n = " + std::to_string(from) + ".." + std::to_string(n_max));
  }
  {
    bool ok = true;
    int bad = -1;
    for (int t = 1; t < n_max; ++t) {
      if (hf.values[static_cast<std::size_t>(t + 1)] >
          macaulay_growth_bound(hf.values[static_cast<std::size_t>(t)], t)) {
        ok = false;
        bad = t;
      }
    }
    record("macaulay-growth", ok,
           ok ? "growth admissible through degree " + std::to_string(n_max)
              : "violated from degree " + std::to_string(bad));
  }
  {
    GotzmannRep grep = gotzmann_representation(hp);
    bool ok = rep.g_reg <= grep.bound();
    record("gotzmann-bound", ok,
           "g_reg=" + std::to_string(rep.g_reg) + " s-1=" + std::to_string(grep.bound()));
  }
  return results;
}

// ---- driver --------------------------------------------------------------

inline std::string read_input(const Options& o, std::istream& in) {
  if (o.input_path.empty())
    throw error(errc::usage, o.command + " needs an input file (or '-' for the in stream)");
  if (o.input_path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(o.input_path);
  if (!f) throw error(errc::usage, "cannot open '" + o.input_path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

template <class Fn>
auto with_field(const IdealDocument& doc, long charac_override, Fn&& fn) {
  unsigned long p = doc.ring->field.characteristic;
  RingPtr ring = doc.ring;
  if (charac_override >= 0 && static_cast<unsigned long>(charac_override) != p) {
    p = static_cast<unsigned long>(charac_override);
    ring = make_ring(ring->vars, p);
  }
  if (p == 0) return fn(ring, instantiate(doc, ring, Rationals{}));
  return fn(ring, instantiate(doc, ring, PrimeField(p)));
}

inline int run_command(const std::vector<std::string>& args, std::istream& in,
                       std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o = detail::parse_args(args);
    json envelope{{"command", o.command}, {"warnings", json::array()}};
    std::vector<std::string> warnings;
    int code = 0;

    if (o.command == "bounds") {
      envelope["input"] = json{{"d", o.d}, {"e", o.e}};
      envelope["result"] = detail::cmd_bounds(o);
    } else if (o.command == "enumerate") {
      envelope["input"] = json{{"r", o.r}, {"m", o.m}};
      envelope["result"] = detail::cmd_enumerate(o, code, out);
      if (o.csv) return code;
    } else if (o.command == "verify-paper") {
      namespace fs = std::filesystem;
      if (!fs::is_directory(o.fixtures))
        throw error(errc::usage, "fixture directory '" + o.fixtures + "' not found");
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(o.fixtures))
        if (entry.path().extension() == ".ideal") files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      if (files.empty())
        throw error(errc::usage, "no .ideal files in '" + o.fixtures + "'");
      json fixture_reports = json::array();
      int failed = 0;
      for (const auto& file : files) {
        std::ifstream f(file);
        std::ostringstream ss;
        ss << f.rdbuf();
        json checks = json::array();
        std::string name = file.filename().string();
        bool all_ok = true;
        try {
          IdealDocument doc = parse_document(ss.str());
          if (!doc.name.empty()) name = doc.name;
          auto results = detail::with_field(doc, o.charac, [&](const RingPtr&, auto ideal) {
            return detail::run_fixture(o, doc, ideal);
          });
          for (const auto& cr : results) {
            all_ok = all_ok && cr.ok;
            checks.push_back(json{{"name", cr.name}, {"ok", cr.ok}, {"detail", cr.detail}});
          }
        } catch (const std::exception& ex) {
          all_ok = false;
          checks.push_back(json{{"name", "run"}, {"ok", false}, {"detail", ex.what()}});
        }
        if (!all_ok) ++failed;
        err << (all_ok ? "PASS" : "FAIL") << "  " << name << "\n";
        if (!all_ok)
          for (const auto& c : checks)
            if (!c["ok"].get<bool>())
              err << "      " << c["name"].get<std::string>() << ": "
                  << c["detail"].get<std::string>() << "\n";
        fixture_reports.push_back(json{{"file", file.filename().string()},
                                       {"name", name},
                                       {"ok", all_ok},
                                       {"checks", checks}});
      }
      envelope["input"] = json{{"fixtures", o.fixtures}};
      envelope["result"] = json{{"fixtures", fixture_reports},
                                {"total", files.size()},
                                {"failed", failed}};
      code = failed == 0 ? 0 : 3;
    } else {
      std::string text = detail::read_input(o, in);
      IdealDocument doc = parse_document(text);
      envelope["result"] = detail::with_field(doc, o.charac, [&](const RingPtr&, auto ideal) {
        envelope["input"] = detail::j_input(o, doc, ideal);
        if (o.command == "hf") return detail::cmd_hf(o, ideal, code, out);
        if (o.command == "series") return detail::cmd_series(o, ideal);
        if (o.command == "reg") return detail::cmd_reg(o, ideal, warnings);
        if (o.command == "gin") return detail::cmd_gin(o, ideal, warnings);
        if (o.command == "lex") return detail::cmd_lex(o, ideal);
        if (o.command == "gotzmann") return detail::cmd_gotzmann(o, ideal);
        if (o.command == "sat") return detail::cmd_sat(o, ideal);
        if (o.command == "check-mumford") return detail::cmd_check_mumford(o, ideal, code);
        throw error(errc::internal, "unhandled command");
      });
      if (o.csv && (o.command == "hf")) return code;
    }
    for (const auto& w : warnings) envelope["warnings"].push_back(w);
    out << envelope.dump(2) << "\n";
    return code;
  } catch (const parse_error& ex) {
    err << "error [PARSE]: " << ex.what() << "\n";
    return 1;
  } catch (const error& ex) {
    err << "error [" << errc_name(ex.kind()) << "]: " << ex.what() << "\n";
    return exit_code_for(ex.kind());
  } catch (const std::exception& ex) {
    err << "error [INTERNAL]: " << ex.what() << "\n";
    return 2;
  }
}

} // namespace detail

using detail::run_command;

} // namespace cmreg::cli
