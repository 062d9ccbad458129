#include "farey/special_functions.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace farey {

namespace {

bool is_nonpositive_integer(double x) {
	return x <= 0.0 && x == std::round(x);
}

}  // namespace

double pochhammer(double a, double p) {
	double b = a + p;
	if (is_nonpositive_integer(a)) {
		// Integer displacement keeps the ratio finite: the product
		// a (a+1) ... (a+p-1) either hits zero or stays rational.
		if (p == std::round(p) && p >= 0.0) {
			double r = 1.0;
			for (long j = 0; j < static_cast<long>(p); ++j)
				r *= a + static_cast<double>(j);
			return r;
		}
		throw std::domain_error("pochhammer: gamma pole at base");
	}
	if (is_nonpositive_integer(b))
		throw std::domain_error("pochhammer: gamma pole at base+offset");
	if (a > 0.0 && b > 0.0)
		return std::exp(std::lgamma(b) - std::lgamma(a));
	return std::tgamma(b) / std::tgamma(a);
}

double laguerre(unsigned n, double p, double t) {
	double lm1 = 1.0;
	if (n == 0)
		return lm1;
	double l = 1.0 + p - t;
	for (unsigned k = 1; k < n; ++k) {
		double lp1 = ((2.0 * k + 1.0 + p - t) * l - (k + p) * lm1) / (k + 1.0);
		lm1 = l;
		l = lp1;
	}
	return l;
}

void laguerre_all(unsigned n, double p, double t, std::vector<double>& out) {
	out.resize(n + 1);
	out[0] = 1.0;
	if (n == 0)
		return;
	out[1] = 1.0 + p - t;
	for (unsigned k = 1; k < n; ++k)
		out[k + 1] = ((2.0 * k + 1.0 + p - t) * out[k] - (k + p) * out[k - 1]) / (k + 1.0);
}

std::vector<Rational> laguerre_coefficients(unsigned n, const Rational& p) {
	std::vector<Rational> c(n + 1);
	Rational fact(1);
	for (unsigned j = 0; j <= n; ++j) {
		if (j > 0)
			fact *= Rational(Integer(j));
		Rational v = binomial_rational(Rational(Integer(n)) + p, n - j) / fact;
		c[j] = (j % 2 == 0) ? v : -v;
	}
	return c;
}

Rational laguerre_exact(unsigned n, const Rational& p, const Rational& t) {
	std::vector<Rational> c = laguerre_coefficients(n, p);
	Rational v(0);
	for (unsigned j = n + 1; j-- > 0;)
		v = v * t + c[j];
	return v;
}

namespace {

double bessel_series_crossover(double p) {
	return std::max(18.0, p * p);
}

// sum_k (-1)^k y^k / (k! Gamma(p+k+1)) with y = (x/2)^2.
double bessel_scaled_series(double p, double x) {
	double y = 0.25 * x * x;
	double term = std::exp(-std::lgamma(p + 1.0));
	double sum = term;
	for (int k = 0; k < 500; ++k) {
		term *= -y / ((k + 1.0) * (p + k + 1.0));
		sum += term;
		if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300))
			break;
	}
	return sum;
}

// Hankel asymptotic expansion, truncated at the smallest term.
double bessel_asymptotic(double p, double x) {
	const double mu = 4.0 * p * p;
	double t = 1.0;
	double P = 1.0, Q = 0.0;
	double prev = std::numeric_limits<double>::max();
	for (int m = 1; m <= 40; ++m) {
		double f = 2.0 * m - 1.0;
		t *= (mu - f * f) / (8.0 * m * x);
		if (std::abs(t) >= prev)
			break;
		prev = std::abs(t);
		int mod = m % 4;
		if (mod == 1)
			Q += t;
		else if (mod == 2)
			P -= t;
		else if (mod == 3)
			Q -= t;
		else
			P += t;
		if (std::abs(t) < 1e-18)
			break;
	}
	double w = x - (0.5 * p + 0.25) * M_PI;
	return std::sqrt(2.0 / (M_PI * x)) * (std::cos(w) * P - std::sin(w) * Q);
}

}  // namespace

double bessel_j(double p, double x) {
	if (p <= -1.0)
		throw std::domain_error("bessel_j: order must exceed -1");
	if (x < 0.0)
		throw std::domain_error("bessel_j: negative argument");
	if (x == 0.0)
		return p == 0.0 ? 1.0 : 0.0;
	if (x <= bessel_series_crossover(p))
		return bessel_scaled_series(p, x) * std::pow(0.5 * x, p);
	return bessel_asymptotic(p, x);
}

double bessel_j_scaled(double p, double x) {
	if (p <= -1.0)
		throw std::domain_error("bessel_j_scaled: order must exceed -1");
	if (x < 0.0)
		throw std::domain_error("bessel_j_scaled: negative argument");
	if (x <= bessel_series_crossover(p))
		return bessel_scaled_series(p, x);
	return bessel_asymptotic(p, x) / std::pow(0.5 * x, p);
}

double QuadratureRule::total_mass() const {
	double s = 0.0;
	for (double w : weights)
		s += w;
	return s;
}

QuadratureRule gauss_laguerre(double alpha, int count) {
	if (alpha <= -1.0)
		throw std::invalid_argument("gauss_laguerre: alpha must exceed -1");
	if (count < 1)
		throw std::invalid_argument("gauss_laguerre: count must be positive");
	/*
	 * Nodes are eigenvalues of the symmetric Jacobi matrix of the weight
	 * t^alpha e^{-t} (diagonal 2i+alpha+1, off-diagonal sqrt(i(i+alpha))).
	 * The textbook weight formula squares the first eigenvector component,
	 * which bottoms out at the solver's 1e-16 noise floor while true
	 * weights fall below 1e-100 already near 80 nodes; quadrature of
	 * anything with polynomial growth then picks up garbage from the tail
	 * nodes.  Instead each weight comes from the Christoffel identity
	 * 1/w = sum_k p_k(node)^2 over the orthonormal polynomials, with the
	 * recurrence run on p_k(x) x^{alpha/2} e^{-x/2} so the iterates stay
	 * of order one, rescaled whenever they grow anyway.
	 */
	Eigen::MatrixXd T = Eigen::MatrixXd::Zero(count, count);
	for (int i = 0; i < count; ++i) {
		T(i, i) = 2.0 * i + alpha + 1.0;
		if (i > 0) {
			double b = std::sqrt(i * (i + alpha));
			T(i, i - 1) = b;
			T(i - 1, i) = b;
		}
	}
	Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T, Eigen::EigenvaluesOnly);
	const double lg = std::lgamma(alpha + 1.0);
	QuadratureRule rule;
	rule.alpha = alpha;
	rule.nodes.resize(count);
	rule.weights.resize(count);
	rule.scaled_weights.resize(count);
	for (int i = 0; i < count; ++i) {
		double x = es.eigenvalues()(i);
		// stored iterate times e^shift is p_k(x) x^{alpha/2} e^{-x/2}
		double shift = 0.5 * (alpha * std::log(x) - x - lg);
		double prev = 0.0, cur = 1.0, sum = 1.0;
		for (int k = 0; k + 1 < count; ++k) {
			double bk = std::sqrt(k * (k + alpha));
			double bk1 = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
			double next =
			    ((x - (2.0 * k + alpha + 1.0)) * cur - bk * prev) / bk1;
			prev = cur;
			cur = next;
			sum += cur * cur;
			if (sum > 1e120) {
				// early terms dropped by the rescale are negligible:
				// the sum is dominated by its latest entries
				prev *= 1e-60;
				cur *= 1e-60;
				sum *= 1e-120;
				shift += 60.0 * std::log(10.0);
			}
		}
		// sum of squared Laguerre functions is x^alpha e^{-x} / w
		double log_scaled = alpha * std::log(x) - std::log(sum) -
				    2.0 * shift;
		rule.nodes[i] = x;
		rule.weights[i] = std::exp(log_scaled - x);
		rule.scaled_weights[i] = std::exp(log_scaled);
	}
	return rule;
}

LegendreRule gauss_legendre(int count) {
	if (count < 1)
		throw std::invalid_argument("gauss_legendre: count must be positive");
	// Jacobi matrix of the Legendre weight: zero diagonal, off-diagonal
	// k / sqrt(4k^2 - 1).  Legendre weights stay of order 1/count, so the
	// first-eigenvector-component formula is safe here.
	Eigen::MatrixXd T = Eigen::MatrixXd::Zero(count, count);
	for (int k = 1; k < count; ++k) {
		double b = k / std::sqrt(4.0 * k * k - 1.0);
		T(k, k - 1) = b;
		T(k - 1, k) = b;
	}
	Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
	LegendreRule rule;
	rule.nodes.resize(count);
	rule.weights.resize(count);
	for (int i = 0; i < count; ++i) {
		rule.nodes[i] = es.eigenvalues()(i);
		double c = es.eigenvectors()(0, i);
		rule.weights[i] = 2.0 * c * c;
	}
	return rule;
}

LegendreRule gauss_legendre(int count, double a, double b) {
	if (!(a < b))
		throw std::invalid_argument("gauss_legendre: need a < b");
	LegendreRule rule = gauss_legendre(count);
	double mid = 0.5 * (a + b), half = 0.5 * (b - a);
	for (int i = 0; i < count; ++i) {
		rule.nodes[i] = mid + half * rule.nodes[i];
		rule.weights[i] *= half;
	}
	return rule;
}

Rational hyp2f1_terminating(unsigned n, const Rational& b, const Rational& c,
			    const Rational& z) {
	Rational sum(1), term(1);
	for (unsigned j = 0; j < n; ++j) {
		Rational top = Rational(-static_cast<long>(n)) + Rational(Integer(j));
		if (top == Rational(0))
			break;
		Rational cj = c + Rational(Integer(j));
		if (cj == Rational(0))
			throw std::domain_error("hyp2f1_terminating: (c)_j pole before termination");
		term *= top * (b + Rational(Integer(j))) * z /
			(cj * Rational(Integer(j + 1)));
		sum += term;
	}
	return sum;
}

double jacobi_p0_at_zero(unsigned n, double p) {
	double s = 0.0;
	for (unsigned k = 0; k <= n; ++k) {
		double t = std::exp(std::lgamma(n + p + 1.0) - std::lgamma(k + 1.0) -
				    std::lgamma(n + p - k + 1.0) +
				    std::lgamma(n + 1.0) - std::lgamma(n - k + 1.0) -
				    std::lgamma(k + 1.0));
		s += (k % 2 == 0) ? t : -t;
	}
	double scale = std::pow(2.0, -static_cast<double>(n));
	return (n % 2 == 0 ? scale : -scale) * s;
}

Rational jacobi_p0_at_zero_exact(unsigned n, const Rational& p) {
	Rational s(0);
	for (unsigned k = 0; k <= n; ++k) {
		Rational t = binomial_rational(Rational(Integer(n)) + p, k) *
			     Rational(binomial(Integer(n), k));
		s += (k % 2 == 0) ? t : -t;
	}
	Rational scale = pow(Rational(-2), -static_cast<long>(n));
	return scale * s;
}

BernoulliTable::BernoulliTable(unsigned max_index) : b_(max_index + 1) {
	b_[0] = Rational(1);
	for (unsigned m = 1; m <= max_index; ++m) {
		Rational s(0);
		for (unsigned j = 0; j < m; ++j)
			s += Rational(binomial(Integer(m + 1), j)) * b_[j];
		b_[m] = -s / Rational(Integer(m + 1));
	}
}

const Rational& BernoulliTable::operator[](unsigned m) const {
	if (m >= b_.size())
		throw std::out_of_range("BernoulliTable: index beyond table");
	return b_[m];
}

Rational BernoulliTable::zeta_neg(unsigned k) const {
	if (k == 0)
		return Rational(-1, 2);
	return -(*this)[k + 1] / Rational(Integer(k + 1));
}

}  // namespace farey
