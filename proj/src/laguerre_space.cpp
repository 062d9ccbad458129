#include "farey/laguerre_space.hpp"

#include <cmath>

namespace farey {

long SpaceParams::two_q_int() const {
	if (!two_q_integer())
		throw std::domain_error("SpaceParams: 2q is not an integer");
	return (Rational(2) * q).numerator().get_si();
}

long SpaceParams::p_int() const {
	if (!integer_p())
		throw std::domain_error("SpaceParams: p is not a nonnegative integer");
	return p_exact().numerator().get_si();
}

namespace {

double gamma_ratio(double a, double b) {  // Gamma(a)/Gamma(b), both > 0
	return std::exp(std::lgamma(a) - std::lgamma(b));
}

Rational a_entry(const SpaceParams& params, int n, int m) {
	Rational c = binomial_rational(Rational(n) + params.p_exact(),
				       static_cast<unsigned long>(n - m));
	return (m % 2 == 0) ? c : -c;
}

}  // namespace

double inner_product(const SpaceParams& params, InnerKind kind, int n, int m) {
	double two_q = 2.0 * params.qd();
	switch (kind) {
	case InnerKind::ff:
		return std::exp(std::lgamma(n + m + two_q) - std::lgamma(n + 1.0) -
				std::lgamma(m + 1.0));
	case InnerKind::ee:
		if (n != m) return 0.0;
		return gamma_ratio(n + two_q, n + 1.0);
	case InnerKind::fe:
		if (m > n) return 0.0;
		return a_entry(params, n, m).to_double() *
		       gamma_ratio(m + two_q, m + 1.0);
	}
	return 0.0;
}

Rational inner_product_exact(const SpaceParams& params, InnerKind kind, int n,
			     int m) {
	long two_q = params.two_q_int();  // Gamma arguments are then integers
	switch (kind) {
	case InnerKind::ff:
		return Rational(factorial(n + m + two_q - 1),
				factorial(n) * factorial(m));
	case InnerKind::ee:
		if (n != m) return Rational(0);
		return norm_e_squared_exact(params, n);
	case InnerKind::fe:
		if (m > n) return Rational(0);
		return a_entry(params, n, m) * norm_e_squared_exact(params, m);
	}
	return Rational(0);
}

double norm_e(const SpaceParams& params, int n) {
	return std::exp(0.5 * (std::lgamma(n + 2.0 * params.qd()) -
			       std::lgamma(n + 1.0)));
}

Rational norm_e_squared_exact(const SpaceParams& params, int n) {
	long two_q = params.two_q_int();
	return Rational(factorial(n + two_q - 1), factorial(n));
}

TriangularChangeOfBasis basis_change(const SpaceParams& params, int n) {
	TriangularChangeOfBasis t;
	t.n = n;
	t.a.assign(n + 1, std::vector<Rational>(n + 1, Rational(0)));
	for (int i = 0; i <= n; ++i)
		for (int j = 0; j <= i; ++j)
			t.a[i][j] = a_entry(params, i, j);
	return t;
}

namespace {

// coefficient vectors transform contravariantly: if c are f-coordinates of a
// function, its e-coordinates are A^T c (and symmetrically back, A^2 = I)
std::vector<double> apply_a_transpose(const SpaceParams& params,
				      const std::vector<double>& c) {
	int n = static_cast<int>(c.size()) - 1;
	TriangularChangeOfBasis t = basis_change(params, n);
	std::vector<double> out(c.size(), 0.0);
	for (int m = 0; m <= n; ++m)
		for (int i = m; i <= n; ++i)
			out[m] += t.entry(i, m) * c[i];
	return out;
}

}  // namespace

CoefficientVector convert(const CoefficientVector& v, BasisKind target) {
	if (v.basis == target) return v;
	// route every conversion through e coordinates
	CoefficientVector mid = v;
	mid.basis = BasisKind::e;
	if (v.basis == BasisKind::f) {
		mid.coeffs = apply_a_transpose(v.params, v.coeffs);
	} else if (v.basis == BasisKind::ehat) {
		for (size_t n = 0; n < mid.coeffs.size(); ++n)
			mid.coeffs[n] /= norm_e(v.params, static_cast<int>(n));
	}
	if (target == BasisKind::e) return mid;
	CoefficientVector out = mid;
	out.basis = target;
	if (target == BasisKind::f) {
		out.coeffs = apply_a_transpose(v.params, mid.coeffs);
	} else {
		for (size_t n = 0; n < out.coeffs.size(); ++n)
			out.coeffs[n] *= norm_e(v.params, static_cast<int>(n));
	}
	return out;
}

std::vector<Rational> convert_exact(const SpaceParams& params,
				    const std::vector<Rational>& coeffs,
				    BasisKind from, BasisKind to) {
	if (from == BasisKind::ehat || to == BasisKind::ehat)
		throw std::domain_error(
		    "convert_exact: orthonormal coordinates involve square roots");
	if (from == to) return coeffs;
	int n = static_cast<int>(coeffs.size()) - 1;
	TriangularChangeOfBasis t = basis_change(params, n);
	std::vector<Rational> out(coeffs.size(), Rational(0));
	for (int m = 0; m <= n; ++m)
		for (int i = m; i <= n; ++i)
			out[m] += t.a[i][m] * coeffs[i];
	return out;
}

CoefficientVector project(const CoefficientVector& v, int n) {
	CoefficientVector out = v;
	if (static_cast<int>(out.coeffs.size()) > n + 1)
		out.coeffs.resize(n + 1);
	return out;
}

double evaluate(const CoefficientVector& v, double t) {
	double p = v.params.p();
	int n = static_cast<int>(v.coeffs.size()) - 1;
	if (n < 0) return 0.0;
	double acc = 0.0;
	if (v.basis == BasisKind::f) {
		double tn = 1.0;  // t^k / k!
		for (int k = 0; k <= n; ++k) {
			acc += v.coeffs[k] * tn;
			tn *= t / (k + 1);
		}
		return acc;
	}
	std::vector<double> lag;
	laguerre_all(n, p, t, lag);
	for (int k = 0; k <= n; ++k) {
		double c = v.coeffs[k];
		if (v.basis == BasisKind::ehat) c /= norm_e(v.params, k);
		acc += c * lag[k];
	}
	return acc;
}

double h_pair_eval(const SpaceParams& params, int n, int sign, double t) {
	double mono = 1.0;  // t^n / n!
	for (int k = 1; k <= n; ++k) mono *= t / k;
	double lag = laguerre(n, params.p(), t);
	return std::exp(-t) * (sign >= 0 ? lag + mono : lag - mono);
}

double phi_plain_eval(const SpaceParams& params, int n, double t) {
	return std::exp(-t) * laguerre(n, params.p(), 2.0 * t);
}

namespace {

double int_pow(double x, int n) {
	double r = 1.0;
	for (int i = 0; i < n; ++i) r *= x;
	return r;
}

}  // namespace

double borel_closed_form(const SpaceParams& params, BorelFamily family, int n,
			 double x) {
	if (x < 0.0)
		throw std::domain_error("borel_closed_form: x must be nonnegative");
	double p = params.p();
	double front = pochhammer(n + 1.0, p);  // (n+1)_p
	double two_q = 2.0 * params.qd();
	switch (family) {
	case BorelFamily::e:
		return front * int_pow(1.0 - x, n);
	case BorelFamily::f:
		return front * int_pow(x, n);
	case BorelFamily::h_plus:
		return front * (1.0 + int_pow(x, n)) /
		       std::pow(1.0 + x, n + two_q);
	case BorelFamily::h_minus:
		return front * (1.0 - int_pow(x, n)) /
		       std::pow(1.0 + x, n + two_q);
	case BorelFamily::phi:
		return front * int_pow(1.0 - x, n) /
		       std::pow(1.0 + x, n + two_q);
	}
	return 0.0;
}

double borel_numeric(const CoefficientVector& v, double x, int count) {
	if (count <= 0)
		count = static_cast<int>(v.coeffs.size()) + 40;
	return borel_numeric_fn(
	    v.params, [&v](double t) { return evaluate(v, t); }, x, count);
}

double borel_numeric_fn(const SpaceParams& params,
			const std::function<double(double)>& fn, double x,
			int count) {
	if (x <= 0.0)
		throw std::domain_error("borel_numeric: x must be positive");
	QuadratureRule rule = gauss_laguerre(params.p(), count);
	double acc = 0.0;
	for (size_t i = 0; i < rule.nodes.size(); ++i)
		acc += rule.weights[i] * fn(x * rule.nodes[i]);
	return acc;
}

double borel_numeric_direct(const SpaceParams& params,
			    const std::function<double(double)>& fn, double x,
			    int count) {
	if (x <= 0.0)
		throw std::domain_error("borel_numeric_direct: x must be positive");
	if (x >= 2.0)
		throw std::domain_error(
		    "borel_numeric_direct: no convergence for x >= 2; "
		    "use the substitution form");
	QuadratureRule rule = gauss_laguerre(params.p(), count);
	double acc = 0.0;
	double c = 1.0 - 1.0 / x;
	for (size_t i = 0; i < rule.nodes.size(); ++i)
		acc += rule.weights[i] * std::exp(c * rule.nodes[i]) *
		       fn(rule.nodes[i]);
	return acc * std::pow(x, -2.0 * params.qd());
}

double jq_apply(const std::function<double(double)>& fn, double q, double x) {
	if (x <= 0.0)
		throw std::domain_error("jq_apply: x must be positive");
	return std::pow(x, -2.0 * q) * fn(1.0 / x);
}

}  // namespace farey
