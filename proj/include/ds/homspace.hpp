#pragma once

#include <array>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "ds/modmath.hpp"

// Point search on quartic principal homogeneous spaces y^2 = q(x) over real
// quadratic fields, exact rational arithmetic throughout.

namespace ds {
namespace homspace {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::rational<bigint>;

// u + v*sqrt(d), d squarefree, d != 0, 1
struct QuadraticFieldElement {
    i64 d;
    bigrat u, v;
};

// y^2 = q4 x^4 + q3 x^3 + q2 x^2 + q1 x + q0
struct QuarticSpace {
    i64 q4, q3, q2, q1, q0;
    std::string label;
};

// Exact square root in Q(sqrt(d)) if one exists.
std::optional<QuadraticFieldElement> sqrt_in_quadratic_field(const QuadraticFieldElement& w);

struct QuarticPoint {
    i64 a, b, c;  // x = (a + b sqrt(d)) / c
    QuadraticFieldElement x, y;
};

// First x = (a + b sqrt(d))/c in the deterministic enumeration order
// (increasing max(|a|,|b|,c), then lexicographic in (a, b, c)) with q(x) a
// square in Q(sqrt(d)). height <= 10^4.
std::optional<QuarticPoint> search_point(const QuarticSpace& space, i64 d, i64 height);

enum class TableEntry { Found, NotFoundUpToHeight };

struct Table571 {
    std::array<std::array<TableEntry, 3>, 3> outcome;
    std::array<std::array<std::optional<QuarticPoint>, 3>, 3> points;
};

// The 571A1 homogeneous spaces X1, X2, X3 against d = 17, 41, 89.
// Throws if a diagonal entry is not found at the given height.
Table571 table_571a1(i64 height);

// The three quartics, exposed for tests.
const std::array<QuarticSpace, 3>& spaces_571a1();

}  // namespace homspace
}  // namespace ds
