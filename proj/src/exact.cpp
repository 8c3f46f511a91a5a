#include "specham/exact.hpp"

#include <algorithm>
#include <cmath>

namespace specham::exact {

namespace {

Int content(const Poly& p) {
    Int g = 0;
    for (const Int& c : p) g = boost::multiprecision::gcd(g, c);
    return g;
}

int sign(const Int& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }
int sign(const Rational& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

using RatPoly = std::vector<Rational>;

RatPoly to_rational(const Poly& p) {
    RatPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = Rational(p[i]);
    return out;
}

RatPoly trim_rational(RatPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// Exact division over the rationals; throws if a nonzero remainder is left.
RatPoly div_exact(RatPoly num, const RatPoly& den, const char* what) {
    if (den.empty()) throw PreconditionError(std::string(what) + ": division by zero polynomial");
    num = trim_rational(std::move(num));
    if (num.size() < den.size()) {
        if (!num.empty()) throw PreconditionError(std::string(what) + ": nonzero remainder");
        return {};
    }
    RatPoly quotient(num.size() - den.size() + 1, Rational(0));
    for (std::size_t k = quotient.size(); k-- > 0;) {
        Rational coeff = num[k + den.size() - 1] / den.back();
        quotient[k] = coeff;
        for (std::size_t j = 0; j < den.size(); ++j) {
            num[k + j] -= coeff * den[j];
        }
    }
    for (const Rational& r : num) {
        if (r != 0) throw PreconditionError(std::string(what) + ": nonzero remainder");
    }
    return quotient;
}

Poly to_integer(const RatPoly& p) {
    Int denom_lcm = 1;
    for (const Rational& r : p) {
        Int den = boost::multiprecision::denominator(r);
        denom_lcm = boost::multiprecision::lcm(denom_lcm, den);
    }
    Poly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rational scaled = p[i] * denom_lcm;
        out[i] = boost::multiprecision::numerator(scaled);
    }
    return trim(std::move(out));
}

} // namespace

Poly make_poly(std::vector<long long> ascending_coeffs) {
    Poly out(ascending_coeffs.size());
    for (std::size_t i = 0; i < ascending_coeffs.size(); ++i) out[i] = ascending_coeffs[i];
    return trim(std::move(out));
}

Poly trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return trim(std::move(out));
}

Poly sub(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return trim(std::move(out));
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return trim(std::move(out));
}

Poly scale(const Poly& a, const Int& c) {
    if (c == 0) return {};
    Poly out = a;
    for (Int& v : out) v *= c;
    return out;
}

Poly derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<long long>(i);
    return trim(std::move(out));
}

Poly primitive_part(const Poly& p) {
    if (p.empty()) return {};
    Int g = content(p);
    Poly out = p;
    for (Int& v : out) v /= g;
    return out;
}

Rational eval(const Poly& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Rational(p[i]);
    return acc;
}

int sign_at(const Poly& p, const Rational& x) { return sign(eval(p, x)); }

int sign_at_quadratic(const Poly& p, const Int& a, const Int& b, const Int& d, const Int& c) {
    if (d < 0) throw PreconditionError("sign_at_quadratic: negative radicand");
    if (c <= 0) throw PreconditionError("sign_at_quadratic: denominator must be positive");
    Int s = boost::multiprecision::sqrt(d);
    if (s * s == d) {
        return sign_at(p, Rational(a + b * s, c));
    }
    // Horner in Q[sqrt(d)]: the running value is P + Q*sqrt(d).
    Rational P = 0, Q = 0;
    const Rational ra(a, c), rb(b, c);
    const Rational rd(d);
    for (std::size_t i = p.size(); i-- > 0;) {
        Rational nP = P * ra + Q * rb * rd + Rational(p[i]);
        Rational nQ = P * rb + Q * ra;
        P = std::move(nP);
        Q = std::move(nQ);
    }
    int sp = sign(P), sq = sign(Q);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Mixed signs: compare P^2 against Q^2 d; sqrt(d) is irrational here, so
    // the value cannot be exactly zero unless the squares tie.
    Rational lhs = P * P, rhs = Q * Q * rd;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sp : sq;
}

Poly charpoly(const std::vector<std::vector<Int>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw PreconditionError("charpoly: matrix is not square");
    }
    Poly coeffs(n + 1, Int(0));
    coeffs[n] = 1;
    if (n == 0) return coeffs;

    std::vector<std::vector<Int>> N = m; // N_1 = M
    auto trace = [&](const std::vector<std::vector<Int>>& t) {
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += t[i][i];
        return tr;
    };
    Int c = -trace(N);
    coeffs[n - 1] = c;
    for (std::size_t k = 2; k <= n; ++k) {
        // N_k = M (N_{k-1} + c_{n-k+1} I)
        std::vector<std::vector<Int>> shifted = N;
        for (std::size_t i = 0; i < n; ++i) shifted[i][i] += c;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Int acc = 0;
                for (std::size_t l = 0; l < n; ++l) acc += m[i][l] * shifted[l][j];
                N[i][j] = std::move(acc);
            }
        }
        Int tr = trace(N);
        if (tr % Int(static_cast<long long>(k)) != 0) {
            throw PreconditionError("charpoly: non-exact trace division (internal error)");
        }
        c = -tr / Int(static_cast<long long>(k));
        coeffs[n - k] = c;
    }
    return coeffs;
}

Poly deflate_linear(const Poly& p, const Rational& root) {
    RatPoly divisor{-root, Rational(1)};
    return to_integer(div_exact(to_rational(p), divisor, "deflate_linear"));
}

Poly deflate_quadratic(const Poly& p, const Rational& c) {
    RatPoly divisor{-c, Rational(0), Rational(1)};
    return to_integer(div_exact(to_rational(p), divisor, "deflate_quadratic"));
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    Poly f0 = primitive_part(trim(p));
    if (f0.empty()) throw PreconditionError("sturm_chain: zero polynomial");
    chain.push_back(f0);
    if (degree(f0) == 0) return chain;
    Poly f1 = primitive_part(derivative(f0));
    chain.push_back(f1);
    while (degree(chain.back()) >= 0) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain.back();
        if (degree(b) == 0) break; // next remainder is identically zero
        // Pseudo-remainder with a positive multiplier so signs are preserved.
        int delta = degree(a) - degree(b);
        Int lc = b.back();
        Int mult = 1;
        for (int i = 0; i <= delta; ++i) mult *= lc;
        if (mult < 0) mult *= lc; // one more factor makes it positive
        Poly rem = scale(a, mult);
        while (degree(rem) >= degree(b)) {
            Int factor = rem.back() / b.back();
            if (rem.back() % b.back() != 0) {
                throw PreconditionError("sturm_chain: pseudo-division not exact (internal)");
            }
            int shift = degree(rem) - degree(b);
            Poly step(static_cast<std::size_t>(shift), Int(0));
            step.insert(step.end(), b.begin(), b.end());
            rem = sub(rem, scale(step, factor));
        }
        if (rem.empty()) break;
        Poly next = primitive_part(rem);
        for (Int& v : next) v = -v;
        chain.push_back(std::move(next));
    }
    return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

} // namespace

int count_roots_above(const std::vector<Poly>& chain,
                      const std::function<int(const Poly&)>& sign_at_point) {
    if (chain.empty()) throw PreconditionError("count_roots_above: empty chain");
    std::vector<int> at_point, at_inf;
    at_point.reserve(chain.size());
    at_inf.reserve(chain.size());
    for (const Poly& f : chain) {
        at_point.push_back(sign_at_point(f));
        at_inf.push_back(f.empty() ? 0 : sign(f.back()));
    }
    if (at_point[0] == 0) {
        throw PreconditionError("count_roots_above: the point is a root; deflate first");
    }
    return variations(at_point) - variations(at_inf);
}

int count_roots_above(const Poly& p, const Rational& x) {
    return count_roots_above(sturm_chain(p),
                             [&](const Poly& f) { return sign_at(f, x); });
}

bool largest_root_exceeds(const Poly& p, const Rational& threshold) {
    Poly q = trim(p);
    while (!q.empty() && sign_at(q, threshold) == 0) q = deflate_linear(q, threshold);
    if (degree(q) <= 0) return false;
    return count_roots_above(q, threshold) >= 1;
}

bool largest_root_reaches(const Poly& p, const Rational& threshold) {
    if (sign_at(p, threshold) == 0) return true;
    return largest_root_exceeds(p, threshold);
}

namespace {

bool quadratic_exceeds_impl(Poly q, const Int& a, const Int& b, const Int& d, const Int& c) {
    auto signer = [&](const Poly& f) { return sign_at_quadratic(f, a, b, d, c); };
    while (!q.empty() && signer(q) == 0) {
        Int s = boost::multiprecision::sqrt(d);
        if (b == 0 || s * s == d) {
            q = deflate_linear(q, Rational(a + b * s, c));
        } else {
            // Minimal polynomial of (a + b sqrt(d))/c over Q:
            // "c^2 x^2 - 2ac x + (a^2 - b^2 d)".
            RatPoly divisor{Rational(a * a - b * b * d, c * c), Rational(-2 * a, c),
                            Rational(1)};
            q = to_integer(div_exact(to_rational(q), divisor, "quadratic deflation"));
        }
    }
    if (degree(q) <= 0) return false;
    return count_roots_above(sturm_chain(q), signer) >= 1;
}

} // namespace

bool largest_root_exceeds_quadratic(const Poly& p, const Int& a, const Int& b, const Int& d,
                                    const Int& c) {
    return quadratic_exceeds_impl(trim(p), a, b, d, c);
}

bool largest_root_reaches_quadratic(const Poly& p, const Int& a, const Int& b, const Int& d,
                                    const Int& c) {
    if (sign_at_quadratic(p, a, b, d, c) == 0) return true;
    return quadratic_exceeds_impl(trim(p), a, b, d, c);
}

Rational root_bound(const Poly& p) {
    Poly q = trim(p);
    if (degree(q) < 1) throw PreconditionError("root_bound: constant polynomial");
    Int lead = boost::multiprecision::abs(q.back());
    Int biggest = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
        biggest = std::max(biggest, Int(boost::multiprecision::abs(q[i])));
    }
    return Rational(1) + Rational(biggest, lead);
}

std::pair<Rational, Rational> isolate_largest_root(const Poly& p, const Rational& width) {
    if (width <= 0) throw PreconditionError("isolate_largest_root: width must be positive");
    Poly q = trim(p);
    if (degree(q) < 1) throw PreconditionError("isolate_largest_root: constant polynomial");
    std::vector<Poly> chain = sturm_chain(q);
    Rational bound = root_bound(q);
    Rational lo = -bound, hi = bound;
    if (count_roots_above(q, lo) < 1) {
        throw PreconditionError("isolate_largest_root: polynomial has no real roots");
    }
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        if (sign_at(q, mid) == 0) {
            // mid is an exact root; the largest root is mid itself unless
            // roots remain above it after deflating mid out.
            Poly deflated = q;
            while (!deflated.empty() && sign_at(deflated, mid) == 0) {
                deflated = deflate_linear(deflated, mid);
            }
            if (degree(deflated) <= 0 || count_roots_above(deflated, mid) == 0) {
                return {mid, mid};
            }
            lo = mid;
            continue;
        }
        if (count_roots_above(q, mid) >= 1) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

RootEstimate largest_root_newton(const Poly& p) {
    Poly q = trim(p);
    if (degree(q) < 1) throw PreconditionError("largest_root_newton: constant polynomial");
    if (q.back() < 0) {
        for (Int& v : q) v = -v;
    }
    std::vector<long double> coeffs(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) coeffs[i] = q[i].convert_to<long double>();
    auto horner = [&](long double x, long double& value, long double& deriv) {
        value = 0;
        deriv = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            deriv = deriv * x + value;
            value = value * x + coeffs[i];
        }
    };
    long double lead = coeffs.back();
    long double biggest = 0;
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
        biggest = std::max(biggest, std::fabs(coeffs[i]));
    }
    long double x = 1 + biggest / lead;
    long double step = 0;
    for (int iter = 0; iter < 400; ++iter) {
        long double value, deriv;
        horner(x, value, deriv);
        if (value <= 0 || deriv <= 0) break; // at or just below the root
        step = value / deriv;
        x -= step;
        if (step <= 1e-17L * std::max(1.0L, std::fabs(x))) break;
    }
    long double error = std::max(8 * std::fabs(step), 1e-15L * (1 + std::fabs(x)));
    return RootEstimate{x, error};
}

} // namespace specham::exact
