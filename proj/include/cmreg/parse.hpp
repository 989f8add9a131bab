#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace cmreg {

/// Field-independent parsed generator: integer coefficients on exponent vectors.
struct RawTerm {
  Int coeff;
  std::vector<int> exps;
};
struct RawPoly {
  std::vector<RawTerm> terms;
};

/// A parsed input document:
///   ring: x, y, z ; char 0
///   gens: x^2, x*y
/// plus optional metadata lines (name:, expect:, check:, # comments).
struct IdealDocument {
  RingPtr ring;
  std::vector<RawPoly> gens;
  std::string name;
  std::vector<std::pair<std::string, std::string>> expects;
  std::vector<std::string> checks;
};

namespace detail {

struct Cursor {
  const std::string& s;
  int line;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(msg, line, static_cast<int>(pos) + 1);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  void expect(char c, const std::string& what) {
    if (!accept(c)) fail("expected '" + std::string(1, c) + "' " + what);
  }
  std::string ident() {
    skip_ws();
    if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
      fail("expected an identifier");
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }
  std::string word() { // identifiers plus '-' for check names
    std::string w = ident();
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '-'))
      w += s[pos++];
    return w;
  }
  Int integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected an integer");
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return Int(s.substr(start, pos - start));
  }
};

inline int var_index(Cursor& c, const std::string& name, const std::vector<std::string>& vars) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  c.fail("unknown variable '" + name + "'");
}

inline RawTerm parse_term(Cursor& c, const std::vector<std::string>& vars, int sign) {
  RawTerm t{Int(sign), std::vector<int>(vars.size(), 0)};
  bool first = true;
  while (true) {
    c.skip_ws();
    if (first || c.accept('*')) {
      if (c.peek() == '\0') c.fail("unexpected end of term");
      if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        t.coeff *= c.integer();
      } else {
        int v = var_index(c, c.ident(), vars);
        int e = 1;
        if (c.accept('^')) {
          Int p = c.integer();
          if (p < 0) c.fail("negative exponent");
          e = static_cast<int>(p.get_si());
        }
        t.exps[static_cast<std::size_t>(v)] += e;
      }
      first = false;
    } else {
      break;
    }
  }
  return t;
}

inline RawPoly parse_poly(Cursor& c, const std::vector<std::string>& vars) {
  RawPoly p;
  int sign = 1;
  if (c.accept('-')) sign = -1;
  else c.accept('+');
  p.terms.push_back(parse_term(c, vars, sign));
  while (true) {
    c.skip_ws();
    if (c.accept('+')) p.terms.push_back(parse_term(c, vars, 1));
    else if (c.accept('-')) p.terms.push_back(parse_term(c, vars, -1));
    else break;
  }
  // reject visibly inhomogeneous input here for a positioned message
  int deg = -1;
  for (const auto& t : p.terms) {
    int d = 0;
    for (int e : t.exps) d += e;
    if (deg < 0) deg = d;
    else if (d != deg) throw error(errc::non_homogeneous, "generator is not homogeneous");
  }
  if (deg == 0) throw error(errc::non_homogeneous, "constant generator");
  return p;
}

} // namespace detail

/// Parse one document.  Throws parse_error with position info on bad syntax and
/// NON-HOMOGENEOUS on inhomogeneous generators.
inline IdealDocument parse_document(const std::string& text) {
  IdealDocument doc;
  std::vector<std::string> vars;
  unsigned long characteristic = 0;
  bool have_ring = false, have_gens = false;
  std::vector<std::pair<int, std::string>> gen_lines;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    detail::Cursor c{line, lineno};
    if (c.done()) continue;
    std::string key = c.ident();
    c.expect(':', "after '" + key + "'");
    if (key == "ring") {
      if (have_ring) c.fail("duplicate ring declaration");
      vars.push_back(c.ident());
      while (c.accept(',')) vars.push_back(c.ident());
      c.expect(';', "after the variable list");
      std::string kw = c.ident();
      if (kw != "char") c.fail("expected 'char'");
      Int p = c.integer();
      if (p < 0) c.fail("characteristic must be nonnegative");
      characteristic = p.get_ui();
      if (!c.done()) c.fail("trailing input after the ring declaration");
      for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
          if (vars[i] == vars[j]) c.fail("duplicate variable '" + vars[i] + "'");
      have_ring = true;
    } else if (key == "gens") {
      if (!have_ring) c.fail("gens before ring declaration");
      if (have_gens) c.fail("duplicate gens declaration");
      have_gens = true;
      doc.gens.push_back(detail::parse_poly(c, vars));
      while (c.accept(',')) doc.gens.push_back(detail::parse_poly(c, vars));
      if (!c.done()) c.fail("trailing input after the generator list");
    } else if (key == "name") {
      c.skip_ws();
      doc.name = line.substr(c.pos);
      while (!doc.name.empty() && std::isspace(static_cast<unsigned char>(doc.name.back())))
        doc.name.pop_back();
    } else if (key == "expect") {
      std::string ekey = c.ident();
      c.expect('=', "in expect line");
      c.skip_ws();
      std::string val = line.substr(c.pos);
      while (!val.empty() && std::isspace(static_cast<unsigned char>(val.back()))) val.pop_back();
      doc.expects.emplace_back(ekey, val);
    } else if (key == "check") {
      doc.checks.push_back(c.word());
      while (c.accept(',')) doc.checks.push_back(c.word());
      if (!c.done()) c.fail("trailing input after the check list");
    } else {
      c.fail("unknown key '" + key + "'");
    }
  }
  if (!have_ring) throw parse_error("missing ring declaration", lineno, 1);
  doc.ring = make_ring(vars, characteristic);
  return doc;
}

/// Build a typed ideal over the given field from the parsed document.
template <class F>
Ideal<F> instantiate(const IdealDocument& doc, const RingPtr& ring, const F& field,
                     TermOrder order = TermOrder::degrevlex) {
  std::vector<Poly<F>> gens;
  for (const auto& rp : doc.gens) {
    std::vector<Term<F>> terms;
    for (const auto& t : rp.terms) {
      auto c = field.from_int(t.coeff);
      if (field.is_zero(c)) continue;
      terms.push_back({c, Monomial(t.exps)});
    }
    gens.emplace_back(ring, field, order, std::move(terms));
  }
  return Ideal<F>::make(ring, field, std::move(gens));
}

inline std::string raw_poly_str(const RawPoly& rp, const std::vector<std::string>& names) {
  Rationals field;
  std::vector<Term<Rationals>> terms;
  for (const auto& t : rp.terms)
    if (t.coeff != 0) terms.push_back({Rat(t.coeff), Monomial(t.exps)});
  RingPtr ring = make_ring(names, 0);
  Poly<Rationals> p(ring, field, TermOrder::degrevlex, std::move(terms));
  return poly_str(p, names);
}

/// Canonical text form; parsing it back yields a structurally equal document.
inline std::string document_str(const IdealDocument& doc) {
  std::string s = "ring: ";
  for (std::size_t i = 0; i < doc.ring->vars.size(); ++i) {
    if (i) s += ", ";
    s += doc.ring->vars[i];
  }
  s += " ; char " + std::to_string(doc.ring->field.characteristic) + "\n";
  if (!doc.gens.empty()) {
    s += "gens: ";
    for (std::size_t i = 0; i < doc.gens.size(); ++i) {
      if (i) s += ", ";
      s += raw_poly_str(doc.gens[i], doc.ring->vars);
    }
    s += "\n";
  }
  return s;
}

} // namespace cmreg
