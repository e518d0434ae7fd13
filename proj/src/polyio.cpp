#include "sns2/polyio.hpp"

#include <cctype>
#include <limits>

namespace sns2 {

std::string to_text(const MultiPoly& p, char letter) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    Integer c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.monomial.is_one()) {
      out += c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < t.monomial.arity(); ++i) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (wrote) out += '*';
      out += letter;
      out += std::to_string(i + 1);
      if (e > 1) out += '^' + std::to_string(e);
      wrote = true;
    }
  }
  return out;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& msg) {
  throw Error(ErrorCode::Parse, msg + " at offset " + std::to_string(pos) + " in \"" +
                                    std::string(text) + "\"");
}

bool is_var_letter(char c) { return c == 'X' || c == 'x' || c == 'J' || c == 'j'; }

std::size_t infer_arity(std::string_view s) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!is_var_letter(s[i])) continue;
    std::size_t j = i + 1, v = 0;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) v = v * 10 + (s[j++] - '0');
    best = std::max(best, v);
  }
  return std::max<std::size_t>(best, 1);
}

class Parser {
 public:
  Parser(std::string_view s, std::size_t arity) : s_(s), arity_(arity) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) parse_fail(s_, pos_, "unexpected character");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) parse_fail(s_, pos_, "expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }
  MultiPoly term() {
    MultiPoly acc = unary();
    while (eat('*')) acc = acc * unary();
    return acc;
  }
  MultiPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  MultiPoly power() {
    MultiPoly base = primary();
    if (eat('^')) {
      std::string d = digits();
      if (d.size() > 3 || std::stoul(d) > 255) parse_fail(s_, pos_, "exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(d)));
    }
    return base;
  }
  MultiPoly primary() {
    skip();
    if (pos_ >= s_.size()) parse_fail(s_, pos_, "unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!eat(')')) parse_fail(s_, pos_, "expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return MultiPoly::constant(arity_, Integer(digits()));
    }
    if (is_var_letter(c)) {
      ++pos_;
      std::string d = digits();
      std::size_t idx = std::stoul(d);
      if (idx == 0 || idx > arity_) parse_fail(s_, pos_, "variable index out of range");
      return MultiPoly::variable(arity_, idx - 1);
    }
    parse_fail(s_, pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, std::size_t arity) {
  if (arity == 0) arity = infer_arity(text);
  return Parser(text, arity).run();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) {
      throw Error(ErrorCode::Parse, "bad integer string \"" + j.get<std::string>() + "\"");
    }
    return z;
  }
  throw Error(ErrorCode::Parse, "expected an integer, got " + j.dump());
}

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) {
      throw Error(ErrorCode::Parse, "bad rational \"" + j.get<std::string>() + "\"");
    }
    q.canonicalize();
    return q;
  }
  return Rational(integer_from_json(j));
}

Json rational_to_json(const Rational& q) {
  if (q.get_den() == 1) return integer_to_json(q.get_num());
  return Json(q.get_str());
}

Json to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const Term& t : p.terms()) {
    Json e = Json::array();
    for (std::size_t i = 0; i < t.monomial.arity(); ++i) e.push_back(t.monomial[i]);
    out.push_back(Json::array({integer_to_json(t.coeff), e}));
  }
  return out;
}

MultiPoly poly_from_json(const Json& j, std::size_t arity) {
  if (j.is_string()) return parse_poly(j.get<std::string>(), arity);
  if (j.is_number_integer()) return MultiPoly::constant(arity, integer_from_json(j));
  if (!j.is_array()) throw Error(ErrorCode::Parse, "polynomial must be a term list or a string");
  std::vector<Term> terms;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[1].is_array()) {
      throw Error(ErrorCode::Parse, "term must be [coeff, [exponents]]: " + t.dump());
    }
    if (t[1].size() != arity) {
      throw Error(ErrorCode::ArityMismatch, "exponent vector length " + std::to_string(t[1].size()) +
                                                " does not match arity " + std::to_string(arity));
    }
    std::vector<Exp> e;
    for (const Json& x : t[1]) {
      if (!x.is_number_unsigned() || x.get<std::uint64_t>() > 255) {
        throw Error(ErrorCode::Parse, "exponent must be an integer in 0..255");
      }
      e.push_back(static_cast<Exp>(x.get<unsigned>()));
    }
    terms.push_back({Monomial(std::move(e)), integer_from_json(t[0])});
  }
  return MultiPoly::from_terms(arity, std::move(terms));
}

Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  Json out;
  out["n"] = m.size();
  out["arity"] = m.arity();
  out["entries"] = rows;
  return out;
}

PolyMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    throw Error(ErrorCode::Parse, "matrix JSON needs \"n\" and \"entries\"");
  }
  if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0) {
    throw Error(ErrorCode::Parse, "\"n\" must be a positive integer");
  }
  const std::size_t n = j["n"].get<std::size_t>();
  std::size_t arity = 1;
  if (j.contains("arity")) {
    if (!j["arity"].is_number_unsigned() || j["arity"].get<std::size_t>() == 0) {
      throw Error(ErrorCode::Parse, "\"arity\" must be a positive integer");
    }
    arity = j["arity"].get<std::size_t>();
  }
  const Json& rows = j["entries"];
  if (!rows.is_array() || rows.size() != n) throw Error(ErrorCode::Parse, "entries must have n rows");
  PolyMatrix m(n, arity);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) {
      throw Error(ErrorCode::Parse, "row " + std::to_string(r + 1) + " must have n entries");
    }
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, poly_from_json(rows[r][c], arity));
  }
  return m;
}

}  // namespace sns2
