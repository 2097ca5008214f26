#include "spinorbit/gaussrat.hpp"

#include <ostream>
#include <stdexcept>

namespace spinorbit {

GaussRat GaussRat::inv() const {
  if (is_zero()) throw std::domain_error("GaussRat: division by zero");
  mpq_class n = norm();
  return GaussRat(re / n, -im / n);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  mpq_class r = re * o.re - im * o.im;
  mpq_class i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) { return *this *= o.inv(); }

std::string to_string(const mpq_class& q) { return q.get_str(); }

std::string to_string(const GaussRat& z) {
  if (z.is_zero()) return "0";
  std::string out;
  if (z.re != 0) out = z.re.get_str();
  if (z.im != 0) {
    mpq_class a = abs(z.im);
    std::string mag = (a == 1) ? "i" : a.get_str() + "*i";
    if (z.re == 0) {
      out = (z.im < 0 ? "-" : "") + mag;
    } else {
      out += (z.im < 0 ? "-" : "+") + mag;
    }
  }
  return out;
}

namespace {

// Parses an unsigned rational "a" or "a/b" starting at pos; advances pos.
bool parse_unsigned_rat(std::string_view s, size_t& pos, mpq_class& out) {
  size_t start = pos;
  while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) pos++;
  if (pos == start) return false;
  std::string num(s.substr(start, pos - start));
  std::string den = "1";
  if (pos < s.size() && s[pos] == '/') {
    pos++;
    size_t dstart = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) pos++;
    if (pos == dstart) return false;
    den = std::string(s.substr(dstart, pos - dstart));
  }
  out = mpq_class(num + "/" + den);
  // the zero check must precede canonicalize(), which divides by the gcd
  // and raises SIGFPE on a zero denominator
  if (out.get_den() == 0) return false;
  out.canonicalize();
  return true;
}

// Parses one signed summand: [+|-] ("i" | rat | rat"*i"); advances pos.
// Adds the summand into z; returns false on malformed input.
bool parse_summand(std::string_view s, size_t& pos, GaussRat& z, bool first) {
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = (s[pos] == '-');
    pos++;
  } else if (!first) {
    return false;  // summands after the first need an explicit sign
  }
  if (pos < s.size() && s[pos] == 'i') {
    pos++;
    z.im += neg ? -1 : 1;
    return true;
  }
  mpq_class q;
  if (!parse_unsigned_rat(s, pos, q)) return false;
  if (neg) q = -q;
  if (pos + 1 < s.size() && s[pos] == '*' && s[pos + 1] == 'i') {
    pos += 2;
    z.im += q;
  } else {
    z.re += q;
  }
  return true;
}

}  // namespace

std::optional<GaussRat> parse_gaussrat(std::string_view s) {
  if (s.empty()) return std::nullopt;
  GaussRat z;
  size_t pos = 0;
  if (!parse_summand(s, pos, z, true)) return std::nullopt;
  while (pos < s.size()) {
    if (!parse_summand(s, pos, z, false)) return std::nullopt;
  }
  return z;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) {
  return os << to_string(z);
}

}  // namespace spinorbit
