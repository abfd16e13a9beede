#include "fiberwalk/types.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "fiberwalk/errors.hpp"

namespace fiberwalk {

Rat rat_from_string(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw Error(ErrorCode::InvalidInstance, "empty rational literal");

  if (s.find('/') != std::string::npos) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
      throw Error(ErrorCode::InvalidInstance, "bad rational literal '" + text + "'");
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
      throw Error(ErrorCode::InvalidInstance, "zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
  }

  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
      throw Error(ErrorCode::InvalidInstance, "bad integer literal '" + text + "'");
    r.canonicalize();
    return r;
  }

  // Finite decimal: digits '.' digits, optional sign. Converted exactly.
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::size_t frac_len = s.size() - dot - 1;
  if (digits.empty() || frac_len == 0)
    throw Error(ErrorCode::InvalidInstance, "bad decimal literal '" + text + "'");
  mpz_class num;
  if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
    throw Error(ErrorCode::InvalidInstance, "bad decimal literal '" + text + "'");
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

Coord l1_norm(const Point& p) {
  Coord sum = 0;
  for (Coord c : p) sum += c < 0 ? -c : c;
  return sum;
}

Coord linf_norm(const Point& p) {
  Coord best = 0;
  for (Coord c : p) best = std::max(best, c < 0 ? -c : c);
  return best;
}

bool is_zero(const Point& p) {
  return std::all_of(p.begin(), p.end(), [](Coord c) { return c == 0; });
}

Point add(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Point sub(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Point negate(const Point& a) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Point scale(const Point& a, Coord factor) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * factor;
  return out;
}

Point positive_part(const Point& p) {
  Point out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = std::max<Coord>(p[i], 0);
  return out;
}

Point negative_part(const Point& p) {
  Point out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = std::max<Coord>(-p[i], 0);
  return out;
}

bool conformal_leq(const Point& g, const Point& z) {
  if (g.size() != z.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] > 0 && (z[i] < g[i])) return false;
    if (g[i] < 0 && (z[i] > g[i])) return false;
  }
  return true;
}

bool collinear(const Point& a, const Point& b) {
  if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
  // rank-1 test plus orientation consistency
  std::size_t pivot = 0;
  while (pivot < a.size() && a[pivot] == 0 && b[pivot] == 0) ++pivot;
  if (pivot == a.size()) return false;
  if (a[pivot] == 0 || b[pivot] == 0) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    // b[i]/b[pivot] == a[i]/a[pivot] cross-multiplied
    if (static_cast<__int128>(a[i]) * b[pivot] !=
        static_cast<__int128>(b[i]) * a[pivot])
      return false;
  }
  return true;
}

std::string point_to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

}  // namespace fiberwalk
