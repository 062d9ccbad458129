#pragma once

// Scalar special functions and generalized Gauss-Laguerre quadrature used
// throughout the toolkit: Pochhammer symbols, associated Laguerre
// polynomials (double recurrence plus exact rational forms), Bessel J of
// real order, terminating Gauss hypergeometric sums in exact arithmetic,
// Jacobi P_n^{(p,0)}(0), and Bernoulli numbers with zeta at negative
// integers.

#include <vector>

#include "farey/rational.hpp"

namespace farey {

// (a)_p = Gamma(a + p) / Gamma(a).  Throws std::domain_error when either
// gamma argument is a pole (nonpositive integer).
double pochhammer(double a, double p);

// L_n^p(t) by the three-term recurrence
// (k+1) L_{k+1} = (2k+1+p-t) L_k - (k+p) L_{k-1}.
double laguerre(unsigned n, double p, double t);

// Fills out[k] = L_k^p(t) for k = 0..n, one recurrence pass.
void laguerre_all(unsigned n, double p, double t, std::vector<double>& out);

// Monomial coefficients of L_n^p: coeff of t^j is (-1)^j C(n+p, n-j) / j!.
std::vector<Rational> laguerre_coefficients(unsigned n, const Rational& p);

Rational laguerre_exact(unsigned n, const Rational& p, const Rational& t);

// J_p(x) for p > -1, x >= 0.  Ascending series up to max(18, p^2), Hankel
// asymptotic expansion with stop-at-smallest-term beyond; validated to
// ~1e-10 absolute for p in [0, 5], x in [0, 1000].  Accuracy degrades for
// larger p (series crossover moves out as p^2).
double bessel_j(double p, double x);

// J_p(x) / (x/2)^p, entire in x^2, finite at x = 0 (1/Gamma(p+1)); the
// cancellation-free form for kernels of the type J_p(2 sqrt(st))/(st)^{p/2}.
double bessel_j_scaled(double p, double x);

struct QuadratureRule {
	double alpha = 0.0;
	std::vector<double> nodes;           // ascending, strictly positive
	std::vector<double> weights;         // for weight t^alpha e^{-t}
	std::vector<double> scaled_weights;  // weights[i] * exp(nodes[i])
	double total_mass() const;           // sum of weights = Gamma(alpha+1)
};

// Golub-Welsch on the symmetric Jacobi matrix of the generalized Laguerre
// weight t^alpha e^{-t}; exact for polynomials of degree <= 2*count - 1.
// Requires alpha > -1, count >= 1.
QuadratureRule gauss_laguerre(double alpha, int count);

struct LegendreRule {
	std::vector<double> nodes;    // ascending
	std::vector<double> weights;  // positive, sum to the interval length
};

// Gauss-Legendre rule, exact for polynomials of degree <= 2*count - 1.
// The two-argument form maps the rule onto [a, b].
LegendreRule gauss_legendre(int count);
LegendreRule gauss_legendre(int count, double a, double b);

// 2F1(-n, b; c; z) as the terminating sum over j = 0..n, exact rational
// arithmetic.  Throws std::domain_error when (c)_j vanishes before the
// numerator terminates the series.
Rational hyp2f1_terminating(unsigned n, const Rational& b, const Rational& c,
			    const Rational& z);

// P_n^{(p,0)}(0) = (-2)^{-n} sum_k (-1)^k C(n+p, k) C(n, k).
double jacobi_p0_at_zero(unsigned n, double p);
Rational jacobi_p0_at_zero_exact(unsigned n, const Rational& p);

// Bernoulli numbers B_0..B_max by the defining recurrence
// sum_{j=0}^{m} C(m+1, j) B_j = 0, with B_1 = -1/2.
class BernoulliTable {
      public:
	explicit BernoulliTable(unsigned max_index);
	const Rational& operator[](unsigned m) const;
	unsigned max_index() const { return static_cast<unsigned>(b_.size()) - 1; }
	// zeta(-k): -B_{k+1}/(k+1) for k >= 1; the k = 0 value is -1/2
	// (the identity needs the B_1 = +1/2 convention there).
	Rational zeta_neg(unsigned k) const;

      private:
	std::vector<Rational> b_;
};

}  // namespace farey
