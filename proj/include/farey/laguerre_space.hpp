#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "farey/rational.hpp"
#include "farey/special_functions.hpp"

namespace farey {

// Weighted space L² of the measure t^p e^{-t} dt on (0, inf), p = 2q - 1.
// q is kept exact so the integer-p fast paths engage reliably.
struct SpaceParams {
	Rational q;
	int K;

	SpaceParams(const Rational& q_, int K_ = 80) : q(q_), K(K_) {
		if (!(q > Rational(0)))
			throw std::invalid_argument("SpaceParams: q must be positive");
		if (K < 1)
			throw std::invalid_argument("SpaceParams: K must be at least 1");
	}
	double qd() const { return q.to_double(); }
	Rational p_exact() const { return Rational(2) * q - Rational(1); }
	double p() const { return p_exact().to_double(); }
	// true when 2q is a positive integer, i.e. Gamma arguments below are
	// integers and every inner product is an exact rational
	bool two_q_integer() const { return (Rational(2) * q).is_integer(); }
	long two_q_int() const;
	// true when p itself is a nonnegative integer (q in {1/2, 1, 3/2, ...})
	bool integer_p() const {
		return p_exact().is_integer() && p_exact() >= Rational(0);
	}
	long p_int() const;
};

enum class BasisKind { e, ehat, f };

struct CoefficientVector {
	SpaceParams params;
	BasisKind basis;
	std::vector<double> coeffs;
};

enum class InnerKind { ff, ee, fe };

// closed-form inner products: (f_n,f_m) = Gamma(n+m+2q)/(n! m!),
// (e_n,e_m) = delta Gamma(n+2q)/n!, (f_n,e_m) = (-1)^m C(n+p,n-m) |e_m|^2
double inner_product(const SpaceParams& params, InnerKind kind, int n, int m);
Rational inner_product_exact(const SpaceParams& params, InnerKind kind, int n,
			     int m);

double norm_e(const SpaceParams& params, int n);           // |e_n|
Rational norm_e_squared_exact(const SpaceParams& params, int n);

// Lower-triangular involution connecting the bases: f_n = sum_m a[n][m] e_m
// with a[n][m] = (-1)^m C(n+p, n-m); its square is the identity, and the
// leading (n+1)-block of the infinite matrix is self-contained.
struct TriangularChangeOfBasis {
	int n;
	std::vector<std::vector<Rational>> a;  // (n+1) x (n+1), zero above diagonal
	double entry(int i, int j) const { return a[i][j].to_double(); }
};

TriangularChangeOfBasis basis_change(const SpaceParams& params, int n);

// coefficient conversion between basis tags (same function, new coordinates)
CoefficientVector convert(const CoefficientVector& v, BasisKind target);
std::vector<Rational> convert_exact(const SpaceParams& params,
				    const std::vector<Rational>& coeffs,
				    BasisKind from, BasisKind to);

// orthogonal projection onto span{e_0..e_n} of a longer coefficient vector
CoefficientVector project(const CoefficientVector& v, int n);

double evaluate(const CoefficientVector& v, double t);

// function-side views of the families whose Borel images have closed forms
double h_pair_eval(const SpaceParams& params, int n, int sign, double t);
double phi_plain_eval(const SpaceParams& params, int n, double t);

enum class BorelFamily { e, f, h_plus, h_minus, phi };

// closed-form Borel images: e_n -> (n+1)_p (1-x)^n, f_n -> (n+1)_p x^n,
// h_n^± -> (n+1)_p (1 ± x^n)/(1+x)^{n+2q}, and the unnormalised phi family
// e^{-t} L_n^p(2t) -> (n+1)_p (1-x)^n/(1+x)^{n+2q}
double borel_closed_form(const SpaceParams& params, BorelFamily family, int n,
			 double x);

// substitution form of the transform: B[phi](x) = int phi(x s) s^p e^{-s} ds,
// valid for every x > 0, quadrature-exact when phi is a polynomial
double borel_numeric(const CoefficientVector& v, double x, int count = 0);
double borel_numeric_fn(const SpaceParams& params,
			const std::function<double(double)>& fn, double x,
			int count = 200);

// pre-substitution form x^{-2q} int phi(t) t^p e^{-t/x} dt; its integrand
// outgrows the quadrature weight as x approaches 2 (the real boundary of the
// transform's analyticity disk), so that region is rejected
double borel_numeric_direct(const SpaceParams& params,
			    const std::function<double(double)>& fn, double x,
			    int count = 200);

// the involution f(x) -> x^{-2q} f(1/x)
double jq_apply(const std::function<double(double)>& fn, double q, double x);

}  // namespace farey
