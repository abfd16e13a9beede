#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace fiberwalk {

/// Integer coordinate of a lattice point or move vector.
using Coord = std::int64_t;

/// A point in Z^d, a move vector, or an integer right-hand side.
using Point = std::vector<Coord>;

/// Exact rational number. All transition matrices, weights, and bound
/// arithmetic stay rational; floating point enters only in the spectral
/// module.
using Rat = mpq_class;

inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p/q", plain integers, or finite decimals ("0.35") exactly.
Rat rat_from_string(const std::string& text);

std::string rat_to_string(const Rat& value);

Coord l1_norm(const Point& p);
Coord linf_norm(const Point& p);
bool is_zero(const Point& p);

Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
Point negate(const Point& a);
Point scale(const Point& a, Coord factor);

/// max(p, 0) componentwise.
Point positive_part(const Point& p);
/// max(-p, 0) componentwise.
Point negative_part(const Point& p);

/// Conformal order: g and z agree in sign componentwise and |g| <= |z|.
bool conformal_leq(const Point& g, const Point& z);

/// True when b = lambda * a for some nonzero rational lambda.
bool collinear(const Point& a, const Point& b);

std::string point_to_string(const Point& p);

}  // namespace fiberwalk
