#include "farey/polynomial_eigen.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "farey/special_functions.hpp"

namespace farey {

namespace {

std::string fmt15(double x) {
	char buf[40];
	std::snprintf(buf, sizeof buf, "%.15g", x);
	return buf;
}

Integer two_to(int e) {
	Integer r = 1;
	mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
	return r;
}

std::vector<double> reversed(const std::vector<double>& v) {
	return {v.rbegin(), v.rend()};
}

double vec_norm(const std::vector<double>& v) {
	double s = 0;
	for (double x : v) s += x * x;
	return std::sqrt(s);
}

// exact by construction for symmetrized vectors, tolerance only for raw ones
PalindromeClass classify(const std::vector<double>& b, double tol) {
	size_t k = b.size() - 1;
	double dplus = 0, dminus = 0;
	for (size_t i = 0; i < b.size(); ++i) {
		double r = b[k - i];
		dminus = std::max(dminus, std::abs(b[i] - r));
		dplus = std::max(dplus, std::abs(b[i] + r));
	}
	double scale = std::max(1.0, vec_norm(b));
	if (dminus <= tol * scale) return PalindromeClass::palindrome;
	if (dplus <= tol * scale) return PalindromeClass::skew;
	return PalindromeClass::mixed;
}

// unit norm, first component above noise made positive
void normalize_vec(std::vector<double>& v) {
	double n = vec_norm(v);
	if (n == 0) return;
	for (double& x : v) x /= n;
	for (double x : v) {
		if (std::abs(x) > 1e-12) {
			if (x < 0)
				for (double& y : v) y = -y;
			break;
		}
	}
}

// coefficients c_0..c_n of det(xI - M) = x^n + c_{n-1}x^{n-1} + ... + c_0,
// by the trace recurrence M_1 = M, M_{j+1} = M(M_j + c_{n-j}I),
// c_{n-j} = -tr(M_j)/j; everything stays rational
std::vector<Rational> char_poly(const MkMatrix& m) {
	int n = m.k + 1;
	std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) a[i][j] = Rational(m.entries[i][j]);
	std::vector<Rational> c(n + 1);
	c[n] = Rational(1);
	std::vector<std::vector<Rational>> mj = a;
	for (int j = 1; j <= n; ++j) {
		Rational tr(0);
		for (int i = 0; i < n; ++i) tr += mj[i][i];
		c[n - j] = -tr / Rational(j);
		if (j == n) break;
		for (int i = 0; i < n; ++i) mj[i][i] += c[n - j];
		std::vector<std::vector<Rational>> next(
		    n, std::vector<Rational>(n, Rational(0)));
		for (int r = 0; r < n; ++r)
			for (int t = 0; t < n; ++t) {
				if (a[r][t] == Rational(0)) continue;
				for (int s = 0; s < n; ++s)
					next[r][s] += a[r][t] * mj[t][s];
			}
		mj = std::move(next);
	}
	return c;
}

// remainder of c(x) mod x^2 - Tx + D; zero remainder means exact division
bool divides_quadratic(const std::vector<Rational>& c, const Rational& T,
		       const Rational& D) {
	// synthetic: r1 x + r0 running remainder, highest coefficient first
	Rational r1(0), r0(0);
	for (size_t idx = c.size(); idx-- > 0;) {
		Rational lead = r1;
		r1 = r0 + lead * T;
		r0 = c[idx] - lead * D;
	}
	// after absorbing the constant term the pair holds c mod (x^2-Tx+D)
	return r1 == Rational(0) && r0 == Rational(0);
}

template <typename Field>
std::vector<std::vector<Field>> shifted_matrix(const MkMatrix& m,
					       const Field& lambda) {
	int n = m.k + 1;
	std::vector<std::vector<Field>> a(n, std::vector<Field>(n));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			a[i][j] = Field(Rational(m.entries[i][j]));
			if (i == j) a[i][j] -= lambda;
		}
	return a;
}

std::vector<QuadExt> reversed_q(const std::vector<QuadExt>& v) {
	return {v.rbegin(), v.rend()};
}

bool all_zero_q(const std::vector<QuadExt>& v) {
	for (const auto& x : v)
		if (!x.is_zero()) return false;
	return true;
}

// does candidate match hint up to one common scale factor
bool matches_hint(const std::vector<QuadExt>& w,
		  const std::vector<double>& hint) {
	size_t h = 0;
	for (size_t i = 0; i < hint.size(); ++i)
		if (std::abs(hint[i]) > std::abs(hint[h])) h = i;
	if (std::abs(hint[h]) == 0 || w[h].is_zero()) return false;
	for (size_t i = 0; i < hint.size(); ++i) {
		double lhs = (w[i] / w[h]).to_double();
		double rhs = hint[i] / hint[h];
		if (std::abs(lhs - rhs) > 1e-6) return false;
	}
	return true;
}

CheckOutcome exact_row(std::string id, std::string description, bool pass,
		       std::string detail) {
	CheckOutcome c;
	c.id = std::move(id);
	c.description = std::move(description);
	c.pass = pass;
	c.residual = pass ? 0.0 : std::nan("");
	c.tolerance = 0.0;
	c.detail = std::move(detail);
	return c;
}

}  // namespace

Integer MkMatrix::row_sum(int i) const {
	Integer s = 0;
	for (const Integer& e : entries.at(static_cast<size_t>(i))) s += e;
	return s;
}

Integer MkMatrix::col_sum(int j) const {
	Integer s = 0;
	for (const auto& row : entries) s += row.at(static_cast<size_t>(j));
	return s;
}

MkMatrix build_mk(int k) {
	if (k < 0) throw std::invalid_argument("build_mk: k must be >= 0");
	MkMatrix m;
	m.k = k;
	m.entries.assign(static_cast<size_t>(k) + 1,
			 std::vector<Integer>(static_cast<size_t>(k) + 1));
	for (int i = 0; i <= k; ++i)
		for (int j = 0; j <= k; ++j) {
			Integer& e = m.entries[i][j];
			if (i < j)
				e = binomial(Integer(k - i),
					     static_cast<unsigned long>(j - i));
			else if (i == j)
				e = 2;
			else
				e = binomial(Integer(i),
					     static_cast<unsigned long>(j));
		}
	// the structural identities hold by construction; verifying them here
	// makes every constructed matrix a checked value
	for (int i = 0; i <= k; ++i) {
		for (int j = 0; j <= k; ++j)
			if (m.entries[i][j] != m.entries[k - i][k - j])
				throw std::logic_error(
				    "build_mk: central symmetry violated");
		if (m.row_sum(i) != two_to(i) + two_to(k - i))
			throw std::logic_error("build_mk: row sum violated");
	}
	for (int j = 0; j <= k; ++j)
		if (m.col_sum(j) !=
		    binomial(Integer(k + 2), static_cast<unsigned long>(j + 1)))
			throw std::logic_error("build_mk: column sum violated");
	return m;
}

std::vector<PolyEigenpair> mk_spectrum(int k) {
	MkMatrix m = build_mk(k);
	int n = k + 1;
	Eigen::MatrixXd a(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) a(i, j) = m.entries[i][j].get_d();
	Eigen::EigenSolver<Eigen::MatrixXd> es(a);
	if (es.info() != Eigen::Success)
		throw std::runtime_error("mk_spectrum: eigensolver failed");

	double scale = 1.0;
	for (int i = 0; i < n; ++i)
		scale = std::max(scale, std::abs(es.eigenvalues()(i).real()));
	for (int i = 0; i < n; ++i)
		if (std::abs(es.eigenvalues()(i).imag()) > 1e-10 * scale)
			throw std::runtime_error(
			    "mk_spectrum: eigenvalue off the real axis, "
			    "imag = " + fmt15(es.eigenvalues()(i).imag()));

	struct Raw {
		double lambda;
		std::vector<double> v;
	};
	std::vector<Raw> raw(static_cast<size_t>(n));
	for (int i = 0; i < n; ++i) {
		raw[i].lambda = es.eigenvalues()(i).real();
		raw[i].v.resize(static_cast<size_t>(n));
		// rotate any complex phase away before taking real parts
		std::complex<double> piv = 0;
		for (int r = 0; r < n; ++r)
			if (std::abs(es.eigenvectors()(r, i)) > std::abs(piv))
				piv = es.eigenvectors()(r, i);
		for (int r = 0; r < n; ++r)
			raw[i].v[r] = (es.eigenvectors()(r, i) / piv).real();
	}
	std::sort(raw.begin(), raw.end(),
		  [](const Raw& x, const Raw& y) { return x.lambda > y.lambda; });

	std::vector<PolyEigenpair> out;
	size_t pos = 0;
	while (pos < raw.size()) {
		size_t end = pos + 1;
		while (end < raw.size() &&
		       std::abs(raw[end].lambda - raw[pos].lambda) <=
			   1e-8 * std::max(1.0, std::abs(raw[pos].lambda)))
			++end;
		double lam = 0;
		for (size_t i = pos; i < end; ++i) lam += raw[i].lambda;
		lam /= static_cast<double>(end - pos);

		std::vector<PolyEigenpair> cluster;
		if (std::abs(lam) <= 1e-8) {
			// reversal symmetry may genuinely mix at eigenvalue zero
			for (size_t i = pos; i < end; ++i) {
				PolyEigenpair p;
				p.lambda = lam;
				p.b = raw[i].v;
				normalize_vec(p.b);
				p.cls = classify(p.b, 1e-10);
				cluster.push_back(std::move(p));
			}
		} else {
			// rebuild the eigenspace from v +/- reverse(v), which are
			// palindromic / skew exactly (entry permutation plus
			// commutative adds); pick an independent subset greedily
			struct Cand {
				std::vector<double> w;
				PalindromeClass cls;
				double norm;
			};
			std::vector<Cand> cands;
			for (size_t i = pos; i < end; ++i) {
				std::vector<double> rv = reversed(raw[i].v);
				std::vector<double> p(raw[i].v), s(raw[i].v);
				for (size_t r = 0; r < p.size(); ++r) {
					p[r] += rv[r];
					s[r] -= rv[r];
				}
				cands.push_back(
				    {p, PalindromeClass::palindrome, vec_norm(p)});
				cands.push_back({s, PalindromeClass::skew, vec_norm(s)});
			}
			std::sort(cands.begin(), cands.end(),
				  [](const Cand& x, const Cand& y) {
					  return x.norm > y.norm;
				  });
			std::vector<std::vector<double>> accepted;
			for (const Cand& c : cands) {
				if (accepted.size() == end - pos) break;
				std::vector<double> w = c.w;
				for (const auto& u : accepted) {
					double dot = 0;
					for (size_t r = 0; r < w.size(); ++r)
						dot += w[r] * u[r];
					for (size_t r = 0; r < w.size(); ++r)
						w[r] -= dot * u[r];
				}
				if (vec_norm(w) <= 1e-6) continue;
				PolyEigenpair p;
				p.lambda = lam;
				p.b = c.w;  // keep the exactly symmetric vector
				normalize_vec(p.b);
				p.cls = c.cls;
				cluster.push_back(std::move(p));
				normalize_vec(w);
				accepted.push_back(std::move(w));
			}
			if (cluster.size() != end - pos)
				throw std::logic_error(
				    "mk_spectrum: symmetrization lost rank");
			std::stable_sort(
			    cluster.begin(), cluster.end(),
			    [](const PolyEigenpair& x, const PolyEigenpair& y) {
				    return static_cast<int>(x.cls) <
					   static_cast<int>(y.cls);
			    });
		}
		for (auto& p : cluster) out.push_back(std::move(p));
		pos = end;
	}

	// top of the spectrum in the constant-term-one scaling
	if (!out.empty() && std::abs(out.front().b.front()) > 1e-12) {
		double b0 = out.front().b.front();
		for (double& x : out.front().b) x /= b0;
	}
	return out;
}

std::optional<ExactEigenpair> exact_eigenpair(const MkMatrix& m, double lambda,
					      const std::vector<double>& b_hint) {
	if (b_hint.size() != m.entries.size())
		throw std::invalid_argument("exact_eigenpair: hint length");

	auto pick = [&](const std::vector<std::vector<QuadExt>>& basis,
			const QuadExt& lam) -> std::optional<ExactEigenpair> {
		std::vector<std::vector<QuadExt>> cands;
		for (const auto& v : basis) {
			std::vector<QuadExt> rv = reversed_q(v);
			std::vector<QuadExt> p(v), s(v);
			for (size_t i = 0; i < v.size(); ++i) {
				p[i] += rv[i];
				s[i] -= rv[i];
			}
			if (!all_zero_q(p)) cands.push_back(std::move(p));
			if (!all_zero_q(s)) cands.push_back(std::move(s));
			cands.push_back(v);
		}
		for (const auto& w : cands) {
			if (!matches_hint(w, b_hint)) continue;
			// scale to constant term one when possible, else to
			// leading one at the hint's largest slot
			size_t h = 0;
			for (size_t i = 0; i < b_hint.size(); ++i)
				if (std::abs(b_hint[i]) > std::abs(b_hint[h]))
					h = i;
			QuadExt div = w[0].is_zero() ? w[h] : w[0];
			std::vector<QuadExt> b(w);
			for (auto& x : b) x = x / div;
			return ExactEigenpair{lam, std::move(b)};
		}
		return std::nullopt;
	};

	// integer matrix, monic integer characteristic polynomial: a rational
	// eigenvalue can only be an integer
	double r = std::round(lambda);
	if (std::abs(lambda - r) < 1e-6 * std::max(1.0, std::abs(lambda))) {
		QuadExt lam{Rational(Integer(static_cast<long>(r)))};
		auto basis = kernel_basis<QuadExt>(shifted_matrix(m, lam));
		if (!basis.empty())
			if (auto got = pick(basis, lam)) return got;
	}

	// quadratic attempt: pair with another numeric eigenvalue so the sum
	// and product land on integers, then certify against the exact
	// characteristic polynomial
	int n = m.k + 1;
	Eigen::MatrixXd a(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) a(i, j) = m.entries[i][j].get_d();
	Eigen::EigenSolver<Eigen::MatrixXd> es(a);
	std::vector<Rational> cp = char_poly(m);
	for (int i = 0; i < n; ++i) {
		double mu = es.eigenvalues()(i).real();
		double t0 = lambda + mu, d0 = lambda * mu;
		double tr = std::round(t0), dr = std::round(d0);
		if (std::abs(t0 - tr) > 1e-6 * std::max(1.0, std::abs(t0)))
			continue;
		if (std::abs(d0 - dr) > 1e-6 * std::max(1.0, std::abs(d0)))
			continue;
		Rational T(Integer(static_cast<long>(tr)));
		Rational D(Integer(static_cast<long>(dr)));
		Rational disc = T * T - Rational(4) * D;
		if (disc.sign() <= 0) continue;
		QuadExt root = sqrt_ext(disc.numerator());
		if (root.is_rational()) continue;  // perfect square, not new
		if (!divides_quadratic(cp, T, D)) continue;
		QuadExt lam = (QuadExt(T) + root) / QuadExt(Rational(2));
		QuadExt conj = (QuadExt(T) - root) / QuadExt(Rational(2));
		if (std::abs(conj.to_double() - lambda) <
		    std::abs(lam.to_double() - lambda))
			lam = conj;
		auto basis = kernel_basis<QuadExt>(shifted_matrix(m, lam));
		if (!basis.empty())
			if (auto got = pick(basis, lam)) return got;
	}
	return std::nullopt;
}

EigenfunctionResult eigenpair_to_eigenfunction(int k, const PolyEigenpair& pair) {
	if (pair.cls == PalindromeClass::mixed ||
	    std::abs(pair.lambda) <= 1e-8)
		throw std::invalid_argument(
		    "eigenpair_to_eigenfunction: needs a nonzero eigenvalue "
		    "with a definite reversal class");
	if (pair.b.size() != static_cast<size_t>(k) + 1)
		throw std::invalid_argument(
		    "eigenpair_to_eigenfunction: vector length mismatch");

	EigenfunctionResult out;
	out.sign = pair.cls == PalindromeClass::palindrome ? +1 : -1;
	out.checks.name = "polynomial eigenfunction, k=" + std::to_string(k);
	out.a.resize(static_cast<size_t>(k) + 1);

	MkMatrix m = build_mk(k);
	auto ex = exact_eigenpair(m, pair.lambda, pair.b);
	const std::vector<Rational> xs = {Rational(1, 2), Rational(1),
					  Rational(2), Rational(3)};

	if (ex) {
		out.exact = true;
		out.lambda_text = ex->lambda.str();
		std::vector<QuadExt> a(static_cast<size_t>(k) + 1);
		for (int i = 0; i <= k; ++i) {
			Rational c(binomial(Integer(k),
					    static_cast<unsigned long>(i)));
			a[i] = QuadExt(c) * ex->b[i];
			out.a[i] = a[i].to_double();
		}
		auto f = [&](const Rational& x) {
			QuadExt acc{Rational(0)};
			for (int i = k; i >= 0; --i)
				acc = acc * QuadExt(x) + a[i];
			return acc;
		};
		for (const Rational& x : xs) {
			QuadExt lhs = ex->lambda * f(x) - f(x + Rational(1));
			QuadExt rhs = QuadExt(pow(x, k)) *
				      f(Rational(1) + Rational(1) / x);
			if (out.sign < 0) rhs = -rhs;
			out.checks.add(exact_row(
			    "eq2.24-functional-x" + x.str(),
			    "three-term functional equation at x = " + x.str(),
			    lhs == rhs, "exact, lambda = " + out.lambda_text));
		}
		if (out.sign > 0 && !a[0].is_zero()) {
			QuadExt f0 = a[0];
			bool lin = ex->lambda ==
				   QuadExt(Rational(1)) + f(Rational(1)) / f0;
			bool quad = ex->lambda * (ex->lambda - QuadExt(Rational(1))) /
					QuadExt(Rational(2)) ==
				    f(Rational(2)) / f0;
			out.checks.add(exact_row("remark3.2-ratio-linear",
						 "lambda = 1 + f(1)/f(0)", lin,
						 "exact"));
			out.checks.add(exact_row(
			    "remark3.2-ratio-quadratic",
			    "lambda(lambda-1)/2 = f(2)/f(0)", quad, "exact"));
		}
		return out;
	}

	out.exact = false;
	out.lambda_text = fmt15(pair.lambda);
	for (int i = 0; i <= k; ++i)
		out.a[i] =
		    binomial(Integer(k), static_cast<unsigned long>(i)).get_d() *
		    pair.b[i];
	auto f = [&](double x) {
		double acc = 0;
		for (int i = k; i >= 0; --i) acc = acc * x + out.a[i];
		return acc;
	};
	for (const Rational& xr : xs) {
		double x = xr.to_double();
		double lhs = pair.lambda * f(x) - f(x + 1);
		double rhs = out.sign * std::pow(x, k) * f(1 + 1 / x);
		double scale = std::abs(pair.lambda * f(x)) + std::abs(f(x + 1)) +
			       std::abs(rhs) + 1.0;
		CheckOutcome c;
		c.id = "eq2.24-functional-x" + xr.str();
		c.description =
		    "three-term functional equation at x = " + xr.str();
		c.residual = std::abs(lhs - rhs) / scale;
		c.tolerance = 1e-10;
		c.pass = c.residual <= c.tolerance;
		c.detail = "numeric, lambda = " + out.lambda_text;
		out.checks.add(std::move(c));
	}
	double amax = 1.0;
	for (double ai : out.a) amax = std::max(amax, std::abs(ai));
	if (out.sign > 0 && std::abs(out.a[0]) > 1e-12 * amax) {
		double lin = 1 + f(1) / f(0);
		double quad = f(2) / f(0);
		double lam = pair.lambda;
		CheckOutcome c1;
		c1.id = "remark3.2-ratio-linear";
		c1.description = "lambda = 1 + f(1)/f(0)";
		c1.residual = std::abs(lam - lin) / std::max(1.0, std::abs(lam));
		c1.tolerance = 1e-10;
		c1.pass = c1.residual <= c1.tolerance;
		out.checks.add(std::move(c1));
		CheckOutcome c2;
		c2.id = "remark3.2-ratio-quadratic";
		c2.description = "lambda(lambda-1)/2 = f(2)/f(0)";
		c2.residual = std::abs(lam * (lam - 1) / 2 - quad) /
			      std::max(1.0, std::abs(quad));
		c2.tolerance = 1e-10;
		c2.pass = c2.residual <= c2.tolerance;
		out.checks.add(std::move(c2));
	}
	return out;
}

LeadingBounds leading_bounds(int k) {
	if (k < 1) throw std::invalid_argument("leading_bounds: k must be >= 1");
	double S = std::ldexp(1.0, k) + 1.0;
	double s = S;
	for (int i = 0; i <= k; ++i)
		s = std::min(s, std::ldexp(1.0, i) + std::ldexp(1.0, k - i));
	double h = (-s + 2 + std::sqrt(s * s + 4 * (S - s))) / 2;
	double g = (S - 2 + std::sqrt(S * S - 4 * (S - s))) / (2 * (s - 1));

	LeadingBounds lb;
	lb.lower = s - 1 + h;
	lb.upper = S - 1 + 1 / g;

	auto spectrum = mk_spectrum(k);
	lb.lambda = spectrum.front().lambda;
	if (spectrum.front().cls != PalindromeClass::palindrome)
		throw std::runtime_error(
		    "leading_bounds: top eigenvector is not palindromic at k=" +
		    std::to_string(k));
	double slack = 1e-9 * std::max(1.0, std::abs(lb.lambda));
	if (!(lb.lower - slack <= lb.lambda && lb.lambda <= lb.upper + slack))
		throw std::runtime_error(
		    "leading_bounds: eigenvalue " + fmt15(lb.lambda) +
		    " escapes [" + fmt15(lb.lower) + ", " + fmt15(lb.upper) +
		    "] at k=" + std::to_string(k));
	return lb;
}

Rational LaurentPolynomial::eval(const Rational& x) const {
	Rational acc(0);
	for (const auto& [e, c] : coeffs) acc += c * pow(x, e);
	return acc;
}

std::string LaurentPolynomial::str() const {
	if (coeffs.empty()) return "0";
	std::string s;
	for (const auto& [e, c] : coeffs) {
		bool neg = c.sign() < 0;
		Rational mag = neg ? -c : c;
		if (s.empty())
			s += neg ? "-" : "";
		else
			s += neg ? " - " : " + ";
		bool unit = mag == Rational(1);
		if (!unit || e == 0) s += mag.str();
		if (e != 0) {
			if (!unit) s += "*";
			s += "x";
			if (e != 1) s += "^" + std::to_string(e);
		}
	}
	return s;
}

LaurentPolynomial bernoulli_eigenfunction(int k) {
	if (k < 0)
		throw std::invalid_argument(
		    "bernoulli_eigenfunction: k must be >= 0");
	BernoulliTable bt(static_cast<unsigned>(k) + 2);
	LaurentPolynomial f;
	auto add = [&](int e, const Rational& c) {
		if (c == Rational(0)) return;
		Rational& slot = f.coeffs[e];
		slot += c;
		if (slot == Rational(0)) f.coeffs.erase(e);
	};
	Rational half_zeta = bt.zeta_neg(static_cast<unsigned>(k)) / Rational(2);
	add(0, half_zeta);
	add(k, half_zeta);
	Rational front(factorial(static_cast<unsigned long>(k)));
	if (k % 2 == 1) front = -front;
	for (int n = -1; n <= k + 1; ++n) {
		Rational num = bt[static_cast<unsigned>(n + 1)] *
			       bt[static_cast<unsigned>(k + 1 - n)];
		Integer dn = factorial(static_cast<unsigned long>(n + 1)) *
			     factorial(static_cast<unsigned long>(k + 1 - n));
		Rational den(dn);
		add(n, front * num / den);
	}
	return f;
}

CheckList bernoulli_fixed_point_check(int k) {
	CheckList cl;
	cl.name = "zeta/Bernoulli fixed function, k=" + std::to_string(k);
	LaurentPolynomial f = bernoulli_eigenfunction(k);
	if (k % 2 == 1) {
		cl.add(exact_row("prop4.7-vanishes-k" + std::to_string(k),
				 "odd-index function is identically zero",
				 f.is_zero(), f.str()));
		return cl;
	}
	const std::vector<Rational> xs = {Rational(1), Rational(2), Rational(3),
					  Rational(1, 2)};
	for (const Rational& x : xs) {
		// composition form of the plus operator at parameter -k/2
		Rational weight = pow(x + Rational(1), k);
		Rational lhs = weight * (f.eval(x / (x + Rational(1))) +
					 f.eval(Rational(1) / (x + Rational(1))));
		bool ok_p = lhs == f.eval(x);
		cl.add(exact_row("prop4.7-fixed-x" + x.str(),
				 "plus operator fixes the function at x = " +
				     x.str(),
				 ok_p, "exact; value " + f.eval(x).str()));
		// equivalent three-term form with unit eigenvalue
		Rational three = f.eval(x) - f.eval(x + Rational(1));
		Rational rhs =
		    pow(x, k) * f.eval(Rational(1) + Rational(1) / x);
		cl.add(exact_row("eq2.24-bernoulli-x" + x.str(),
				 "three-term form at x = " + x.str(),
				 three == rhs, "exact"));
	}
	return cl;
}

CheckList pseudo_scalar_checks(int k) {
	if (k < 1)
		throw std::invalid_argument(
		    "pseudo_scalar_checks: k must be >= 1");
	CheckList cl;
	cl.name = "indefinite pairing, k=" + std::to_string(k);
	MkMatrix m = build_mk(k);
	int n = k + 1;

	auto pairing = [&](const std::vector<Rational>& x,
			   const std::vector<Rational>& y) {
		Rational s(0);
		for (int i = 0; i < n; ++i) s += x[i] * y[n - 1 - i];
		return s;
	};
	auto apply = [&](const std::vector<Rational>& x, bool transpose) {
		std::vector<Rational> r(static_cast<size_t>(n), Rational(0));
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j) {
				const Integer& e = transpose ? m.entries[j][i]
							     : m.entries[i][j];
				r[i] += Rational(e) * x[j];
			}
		return r;
	};

	std::mt19937 rng(20240816u + static_cast<unsigned>(k));
	std::uniform_int_distribution<int> dist(-9, 9);
	for (int trial = 0; trial < 5; ++trial) {
		std::vector<Rational> phi(static_cast<size_t>(n)),
		    psi(static_cast<size_t>(n));
		for (int i = 0; i < n; ++i) {
			phi[i] = Rational(dist(rng));
			psi[i] = Rational(dist(rng));
		}
		bool ok = pairing(apply(phi, false), psi) ==
			  pairing(phi, apply(psi, true));
		cl.add(exact_row(
		    "remark4.2-adjointness-t" + std::to_string(trial),
		    "pairing moves the matrix to its transpose", ok,
		    "random integer vectors, exact"));
	}

	auto spectrum = mk_spectrum(k);
	for (size_t idx = 0; idx < spectrum.size(); ++idx) {
		const PolyEigenpair& p = spectrum[idx];
		if (std::abs(p.lambda) <= 1e-8) continue;
		double self = 0, nn = 0;
		for (int i = 0; i < n; ++i) {
			self += p.b[i] * p.b[n - 1 - i];
			nn += p.b[i] * p.b[i];
		}
		double want =
		    p.cls == PalindromeClass::palindrome ? nn : -nn;
		CheckOutcome c;
		c.id = "remark4.2-sign-i" + std::to_string(idx);
		c.description = "self-pairing is the signed square norm";
		c.residual = std::abs(self - want) / std::max(1.0, nn);
		c.tolerance = 1e-10;
		c.pass = c.residual <= c.tolerance;
		c.detail = "lambda = " + fmt15(p.lambda) +
			   (p.cls == PalindromeClass::palindrome
				? ", palindrome"
				: ", skew");
		cl.add(std::move(c));
	}
	return cl;
}

PeriodSearchRow period_search(int k) {
	if (k < 1) throw std::invalid_argument("period_search: k must be >= 1");
	MkMatrix m = build_mk(k);
	auto shifted = shifted_matrix<Rational>(m, Rational(1));
	auto basis = kernel_basis<Rational>(shifted);

	PeriodSearchRow row;
	row.k = k;
	row.dimension = static_cast<int>(basis.size());

	auto rank = [](std::vector<std::vector<Rational>> rows) {
		int r = 0;
		if (rows.empty()) return 0;
		size_t cols = rows[0].size();
		for (size_t c = 0; c < cols && r < static_cast<int>(rows.size());
		     ++c) {
			size_t sel = static_cast<size_t>(r);
			while (sel < rows.size() && rows[sel][c] == Rational(0))
				++sel;
			if (sel == rows.size()) continue;
			std::swap(rows[sel], rows[static_cast<size_t>(r)]);
			for (size_t i = static_cast<size_t>(r) + 1;
			     i < rows.size(); ++i) {
				if (rows[i][c] == Rational(0)) continue;
				Rational fct =
				    rows[i][c] / rows[static_cast<size_t>(r)][c];
				for (size_t j = c; j < cols; ++j)
					rows[i][j] -=
					    fct * rows[static_cast<size_t>(r)][j];
			}
			++r;
		}
		return r;
	};

	std::vector<std::vector<Rational>> pal, skw;
	for (const auto& v : basis) {
		std::vector<Rational> p(v), s(v);
		size_t nn = v.size();
		bool pz = true, sz = true;
		for (size_t i = 0; i < nn; ++i) {
			p[i] += v[nn - 1 - i];
			s[i] -= v[nn - 1 - i];
			if (p[i] != Rational(0)) pz = false;
			if (s[i] != Rational(0)) sz = false;
		}
		if (!pz) pal.push_back(std::move(p));
		if (!sz) skw.push_back(std::move(s));
	}
	row.palindromic = rank(pal);
	row.skew = rank(skw);
	return row;
}

}  // namespace farey
