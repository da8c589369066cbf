#include "x0gal/qexp_io.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace x0gal {

namespace {

struct Header {
  long N = 0, weight = -1, prec = 0;
  std::string label;
};

[[noreturn]] void fail(const std::string& origin, size_t lineno, const std::string& what) {
  throw ParseError(origin + ":" + std::to_string(lineno) + ": " + what);
}

long parse_long(const std::string& origin, size_t lineno, const std::string& s) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) fail(origin, lineno, "not an integer: '" + s + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    fail(origin, lineno, "not an integer: '" + s + "'");
  }
}

Rat parse_rational(const std::string& origin, size_t lineno, const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) fail(origin, lineno, "zero denominator");
    return Rat(num, den);
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    fail(origin, lineno, "malformed coefficient: '" + s + "'");
  }
}

}  // namespace

std::vector<LabeledForm> parse_qexp_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  bool saw_magic = false;
  std::vector<LabeledForm> out;
  std::optional<Header> header;
  std::optional<QExpansion> current;
  std::set<long> seen_exponents;

  auto flush = [&]() {
    if (header) {
      out.push_back({header->label, *current});
      header.reset();
      current.reset();
      seen_exponents.clear();
    }
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) {
      if (lineno == 1) {
        if (line.rfind("# qexp v1", 0) != 0) fail(origin, lineno, "missing '# qexp v1' magic");
        saw_magic = true;
        continue;
      }
      line = line.substr(0, pos);
    }
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!saw_magic) fail(origin, lineno, "file must start with '# qexp v1'");

    if (tok[0].find('=') != std::string::npos) {
      flush();
      Header h;
      bool have_n = false, have_w = false, have_p = false, have_l = false;
      for (const auto& t : tok) {
        auto eq = t.find('=');
        if (eq == std::string::npos) fail(origin, lineno, "malformed header token '" + t + "'");
        std::string key = t.substr(0, eq), val = t.substr(eq + 1);
        if (key == "N") {
          h.N = parse_long(origin, lineno, val);
          have_n = true;
        } else if (key == "weight") {
          h.weight = parse_long(origin, lineno, val);
          have_w = true;
        } else if (key == "prec") {
          h.prec = parse_long(origin, lineno, val);
          have_p = true;
        } else if (key == "label") {
          h.label = val;
          have_l = true;
        } else {
          fail(origin, lineno, "unknown header key '" + key + "'");
        }
      }
      if (!have_n || !have_w || !have_p || !have_l)
        fail(origin, lineno, "header needs N, weight, label, prec");
      if (h.N < 1) fail(origin, lineno, "level must be positive");
      if (h.prec < 1) fail(origin, lineno, "precision must be positive");
      header = h;
      current.emplace(h.N, h.weight, h.prec);
      continue;
    }

    if (!header) fail(origin, lineno, "coefficient line before any header");
    if (tok.size() != 2) fail(origin, lineno, "expected 'exponent coefficient'");
    long n = parse_long(origin, lineno, tok[0]);
    if (n < 0) fail(origin, lineno, "negative exponent");
    if (n > header->prec) fail(origin, lineno, "exponent exceeds declared precision");
    if (!seen_exponents.insert(n).second) fail(origin, lineno, "duplicate exponent");
    current->set_coeff(n, parse_rational(origin, lineno, tok[1]));
  }
  flush();
  if (!saw_magic) fail(origin, lineno ? lineno : 1, "empty file");
  return out;
}

std::vector<LabeledForm> parse_qexp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_qexp_text(buf.str(), path);
}

}  // namespace x0gal
