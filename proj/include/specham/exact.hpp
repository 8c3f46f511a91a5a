#pragma once

#include <functional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "specham/errors.hpp"

namespace specham::exact {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Integer polynomial, coefficients in ascending degree order, trailing zeros
// trimmed (the zero polynomial is the empty vector).
using Poly = std::vector<Int>;

Poly make_poly(std::vector<long long> ascending_coeffs);
Poly trim(Poly p);
int degree(const Poly& p); // -1 for the zero polynomial

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Int& c);
Poly derivative(const Poly& p);
Poly primitive_part(const Poly& p); // divides by content, keeps leading sign

Rational eval(const Poly& p, const Rational& x);
int sign_at(const Poly& p, const Rational& x); // -1, 0, +1

// Sign of p((a + b*sqrt(d))/c) for integer a, b, d >= 0, c > 0; exact even
// when d is a perfect square.
int sign_at_quadratic(const Poly& p, const Int& a, const Int& b, const Int& d, const Int& c);

// Characteristic polynomial det(xI - M) of an integer matrix (not necessarily
// symmetric) via the Faddeev-LeVerrier recurrence; all divisions are exact.
Poly charpoly(const std::vector<std::vector<Int>>& m);

// Exact division helpers; both throw PreconditionError if the division leaves
// a remainder (i.e. the claimed root is not a root).
Poly deflate_linear(const Poly& p, const Rational& root);   // divide by (x - root)
Poly deflate_quadratic(const Poly& p, const Rational& c);   // divide by (x^2 - c)

// Canonical Sturm chain of p (primitive parts, pseudo-remainders).
std::vector<Poly> sturm_chain(const Poly& p);

// Number of distinct real roots of p strictly greater than the point, where
// the point is described by its sign evaluator (rational or quadratic).
// Requires the point itself not to be a root; callers deflate first.
int count_roots_above(const std::vector<Poly>& chain,
                      const std::function<int(const Poly&)>& sign_at_point);
int count_roots_above(const Poly& p, const Rational& x);

// strictly_exceeds / reaches: exact comparisons of the largest real root of p
// against a rational threshold. `reaches` treats the threshold itself being a
// root as success. Both require p to have at least one real root when called
// (true for characteristic polynomials).
bool largest_root_exceeds(const Poly& p, const Rational& threshold);    // root > threshold
bool largest_root_reaches(const Poly& p, const Rational& threshold);    // root >= threshold
// Same comparisons against (a + b*sqrt(d))/c.
bool largest_root_exceeds_quadratic(const Poly& p, const Int& a, const Int& b, const Int& d,
                                    const Int& c);
bool largest_root_reaches_quadratic(const Poly& p, const Int& a, const Int& b, const Int& d,
                                    const Int& c);

// Exclusive upper bound on the absolute value of every real root (Cauchy).
Rational root_bound(const Poly& p);

// Shrinks [lo, hi] around the single largest real root via Sturm-guided
// bisection until hi - lo <= width. Requires a real root to exist.
std::pair<Rational, Rational> isolate_largest_root(const Poly& p, const Rational& width);

// Fast floating-point estimate of the largest real root for polynomials with
// all-real roots (characteristic polynomials of symmetrizable matrices):
// Newton iteration started above every root converges monotonically from
// above, so the true root lies within `error` of `estimate`. Callers needing
// a verdict sharper than that window must fall back to the Sturm routines.
struct RootEstimate {
    long double estimate;
    long double error;
};
RootEstimate largest_root_newton(const Poly& p);

} // namespace specham::exact
