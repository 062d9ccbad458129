#include "farey/transfer_operators.hpp"

#include <cmath>
#include <sstream>

#include "farey/special_functions.hpp"

namespace farey {

namespace {

std::vector<double> e_norms(const SpaceParams& params, int k) {
	std::vector<double> out(k);
	for (int n = 0; n < k; ++n) out[n] = norm_e(params, n);
	return out;
}

long require_integer_p(const SpaceParams& params, const char* who) {
	if (!params.integer_p())
		throw std::domain_error(std::string(who) +
					": exact route needs integer p");
	return params.p_int();
}

std::string num_str(double x) {
	std::ostringstream os;
	os.precision(15);
	os << x;
	return os.str();
}

}  // namespace

double golden_alpha() { return (std::sqrt(5.0) - 1.0) / 2.0; }

double n_trace_closed_form(const SpaceParams& params) {
	return std::pow(golden_alpha(), params.p()) / std::sqrt(5.0);
}

std::vector<std::vector<Rational>> m_bilinear_exact(const SpaceParams& params) {
	long p = require_integer_p(params, "m_bilinear_exact");
	int k = params.K;
	Rational pfact(factorial(static_cast<unsigned long>(p)));
	std::vector<std::vector<Rational>> t(k, std::vector<Rational>(k));
	for (int n = 0; n < k; ++n) {
		for (int m = n; m < k; ++m) {
			Integer prod =
			    binomial(Integer(n + m + p),
				     static_cast<unsigned long>(p)) *
			    binomial(Integer(n + m), static_cast<unsigned long>(n));
			Rational v = pfact * Rational(prod) /
				     pow(Rational(2), n + m + p + 1);
			t[n][m] = v;
			t[m][n] = v;
		}
	}
	return t;
}

std::vector<std::vector<Rational>> n_bilinear_exact(const SpaceParams& params) {
	require_integer_p(params, "n_bilinear_exact");
	int k = params.K;
	auto m_table = m_bilinear_exact(params);
	TriangularChangeOfBasis a = basis_change(params, k - 1);
	std::vector<std::vector<Rational>> t(k, std::vector<Rational>(k));
	for (int n = 0; n < k; ++n) {
		for (int m = 0; m < k; ++m) {
			Rational acc(0);
			for (int i = 0; i <= n; ++i)
				acc += a.a[n][i] * m_table[i][m];
			t[n][m] = acc;
		}
	}
	return t;
}

OperatorMatrix assemble_M(const SpaceParams& params) {
	int k = params.K;
	double p = params.p();
	// integrand in (M e_n, e_m) is polynomial x t^p e^{-2t}; halving the
	// variable turns it into the native weight, so k + 8 nodes integrate
	// every entry exactly
	QuadratureRule rule = gauss_laguerre(p, k + 8);
	std::vector<std::vector<double>> lag(rule.nodes.size());
	for (size_t i = 0; i < rule.nodes.size(); ++i)
		laguerre_all(k - 1, p, rule.nodes[i] / 2.0, lag[i]);
	std::vector<double> norms = e_norms(params, k);
	double front = std::pow(2.0, -p - 1.0);
	OperatorMatrix out{OperatorKind::M, params, BasisKind::ehat,
			   Eigen::MatrixXd::Zero(k, k)};
	for (int n = 0; n < k; ++n) {
		for (int m = n; m < k; ++m) {
			double acc = 0.0;
			for (size_t i = 0; i < rule.nodes.size(); ++i)
				acc += rule.weights[i] * lag[i][n] * lag[i][m];
			double v = front * acc / (norms[n] * norms[m]);
			out.entries(n, m) = v;
			out.entries(m, n) = v;
		}
	}
	// closed form for the diagonal guards the whole quadrature layer
	double two_q = 2.0 * params.qd();
	for (int n = 0; n < k; ++n) {
		double want = std::exp(std::lgamma(2 * n + p + 1.0) -
				       std::lgamma(n + p + 1.0) -
				       std::lgamma(n + 1.0) -
				       (2 * n + two_q) * std::log(2.0));
		if (std::abs(out.entries(n, n) - want) > 1e-10 * want)
			throw std::runtime_error(
			    "assemble_M: quadrature diagonal disagrees with "
			    "the closed form at n = " +
			    std::to_string(n));
	}
	return out;
}

namespace {

OperatorMatrix assemble_N_exact(const SpaceParams& params) {
	int k = params.K;
	auto table = n_bilinear_exact(params);
	std::vector<double> norms = e_norms(params, k);
	OperatorMatrix out{OperatorKind::N, params, BasisKind::ehat,
			   Eigen::MatrixXd::Zero(k, k)};
	for (int n = 0; n < k; ++n)
		for (int m = 0; m < k; ++m)
			out.entries(n, m) =
			    table[n][m].to_double() / (norms[n] * norms[m]);
	return out;
}

OperatorMatrix assemble_N_kernel(const SpaceParams& params) {
	int k = params.K;
	double p = params.p();
	int count = std::max(2 * k + 60, 160);
	QuadratureRule rule = gauss_laguerre(p, count);
	// scaled Laguerre values: row i holds w_i L_n(t_i)
	Eigen::MatrixXd lag(count, k);
	std::vector<double> buf;
	for (int i = 0; i < count; ++i) {
		laguerre_all(k - 1, p, rule.nodes[i], buf);
		for (int n = 0; n < k; ++n)
			lag(i, n) = rule.weights[i] * buf[n];
	}
	Eigen::MatrixXd kernel(count, count);
	for (int i = 0; i < count; ++i)
		for (int j = i; j < count; ++j) {
			double v = bessel_j_scaled(
			    p, 2.0 * std::sqrt(rule.nodes[i] * rule.nodes[j]));
			kernel(i, j) = v;
			kernel(j, i) = v;
		}
	Eigen::MatrixXd table = lag.transpose() * kernel * lag;
	std::vector<double> norms = e_norms(params, k);
	OperatorMatrix out{OperatorKind::N, params, BasisKind::ehat,
			   Eigen::MatrixXd::Zero(k, k)};
	for (int n = 0; n < k; ++n)
		for (int m = 0; m < k; ++m)
			out.entries(n, m) = table(n, m) / (norms[n] * norms[m]);
	return out;
}

}  // namespace

OperatorMatrix assemble_N(const SpaceParams& params, AssemblyMethod method) {
	return method == AssemblyMethod::exact ? assemble_N_exact(params)
					       : assemble_N_kernel(params);
}

OperatorMatrix assemble_P(const OperatorMatrix& m, const OperatorMatrix& n,
			  int sign) {
	if (m.kind != OperatorKind::M || n.kind != OperatorKind::N)
		throw std::invalid_argument("assemble_P: wants M and N");
	if (m.basis != BasisKind::ehat || n.basis != BasisKind::ehat)
		throw std::invalid_argument(
		    "assemble_P: wants orthonormal-basis matrices");
	if (m.entries.rows() != n.entries.rows())
		throw std::invalid_argument("assemble_P: size mismatch");
	OperatorMatrix out{sign >= 0 ? OperatorKind::Pplus : OperatorKind::Pminus,
			   m.params, BasisKind::ehat, m.entries};
	if (sign >= 0)
		out.entries += n.entries;
	else
		out.entries -= n.entries;
	return out;
}

OperatorMatrix assemble_Q(const SpaceParams& params, int sign) {
	int k = params.K;
	TriangularChangeOfBasis a = basis_change(params, k - 1);
	OperatorMatrix out{sign >= 0 ? OperatorKind::Qplus : OperatorKind::Qminus,
			   params, BasisKind::e, Eigen::MatrixXd::Zero(k, k)};
	double s = sign >= 0 ? 1.0 : -1.0;
	for (int m = 0; m < k; ++m)
		for (int n = 0; n < k; ++n) {
			double v = (m == n ? 1.0 : 0.0) + s * a.entry(n, m);
			out.entries(m, n) = v;
		}
	return out;
}

OperatorMatrix assemble_J(const OperatorMatrix& m, const OperatorMatrix& n) {
	if (m.kind != OperatorKind::M || n.kind != OperatorKind::N)
		throw std::invalid_argument("assemble_J: wants M and N");
	// N M^{-1} = (M^{-1} N)^T for symmetric M, N; one self-adjoint solve
	Eigen::MatrixXd x = m.entries.ldlt().solve(n.entries);
	OperatorMatrix out{OperatorKind::J, m.params, BasisKind::ehat,
			   x.transpose()};
	return out;
}

std::vector<Rational> ell_coefficients(const SpaceParams& params, int n,
				       int sign) {
	TriangularChangeOfBasis a = basis_change(params, n);
	std::vector<Rational> c(n + 1, Rational(0));
	for (int m = 0; m <= n; ++m)
		c[m] = sign >= 0 ? a.a[n][m] : -a.a[n][m];
	c[n] += Rational(1);
	return c;
}

std::vector<Rational> q_apply_exact(const SpaceParams& params, int q_sign,
				    const std::vector<Rational>& coeffs) {
	int top = static_cast<int>(coeffs.size()) - 1;
	TriangularChangeOfBasis a = basis_change(params, top);
	std::vector<Rational> out = coeffs;
	for (int m = 0; m <= top; ++m) {
		Rational acc(0);
		for (int i = m; i <= top; ++i)
			acc += a.a[i][m] * coeffs[i];
		if (q_sign >= 0)
			out[m] += acc;
		else
			out[m] -= acc;
	}
	return out;
}

double q_spectral_radius(const SpaceParams& params, int sign) {
	// triangular matrix: eigenvalues are the diagonal 1 ± (-1)^n
	double r = 0.0;
	for (int n = 0; n < params.K; ++n) {
		double d = 1.0 + (sign >= 0 ? 1.0 : -1.0) * (n % 2 == 0 ? 1.0 : -1.0);
		r = std::max(r, std::abs(d));
	}
	return r;
}

SpectrumResult spectrum(const OperatorMatrix& matrix) {
	switch (matrix.kind) {
	case OperatorKind::M:
	case OperatorKind::N:
	case OperatorKind::Pplus:
	case OperatorKind::Pminus:
		break;
	default:
		throw std::invalid_argument("spectrum: matrix is not symmetric");
	}
	if (matrix.basis != BasisKind::ehat)
		throw std::invalid_argument(
		    "spectrum: wants an orthonormal-basis matrix");
	const Eigen::MatrixXd& a = matrix.entries;
	Eigen::MatrixXd sym = 0.5 * (a + a.transpose());
	Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
	if (es.info() != Eigen::Success)
		throw std::runtime_error("spectrum: eigensolver failed");
	int k = static_cast<int>(a.rows());
	SpectrumResult out;
	out.eigenvalues.resize(k);
	out.residuals.resize(k);
	out.eigenvectors.resize(k, k);
	for (int j = 0; j < k; ++j) {
		int src = k - 1 - j;  // solver sorts ascending
		Eigen::VectorXd v = es.eigenvectors().col(src);
		double scale = v.cwiseAbs().maxCoeff();
		for (int i = 0; i < k; ++i) {
			if (std::abs(v(i)) > 1e-12 * scale) {
				if (v(i) < 0) v = -v;
				break;
			}
		}
		double lambda = es.eigenvalues()(src);
		out.eigenvalues[j] = lambda;
		out.eigenvectors.col(j) = v;
		out.residuals[j] = (a * v - lambda * v).norm() / v.norm();
	}
	return out;
}

double spectral_norm(const OperatorMatrix& matrix) {
	Eigen::JacobiSVD<Eigen::MatrixXd> svd(matrix.entries);
	return svd.singularValues()(0);
}

CheckList verify_structure(const SpaceParams& params, int n_max) {
	if (n_max >= params.K)
		throw std::invalid_argument("verify_structure: n_max must stay "
					    "below the truncation size");
	require_integer_p(params, "verify_structure");
	long p = params.p_int();
	long two_q = params.two_q_int();
	int k = params.K;
	auto m_table = m_bilinear_exact(params);
	auto n_table = n_bilinear_exact(params);
	TriangularChangeOfBasis a = basis_change(params, k - 1);
	CheckList list;
	list.name = "operator structure, q=" + params.q.str() +
		    ", n<=" + std::to_string(n_max);

	// swap relation: applying the involution to the N table restores the
	// M table, i.e. the image of f_n under N matches that of e_n under M
	{
		bool ok = true;
		std::string where;
		for (int n = 0; n <= n_max && ok; ++n)
			for (int m = 0; m <= n_max && ok; ++m) {
				Rational acc(0);
				for (int i = 0; i <= n; ++i)
					acc += a.a[n][i] * n_table[i][m];
				if (acc != m_table[n][m]) {
					ok = false;
					where = "(" + std::to_string(n) + "," +
						std::to_string(m) + ")";
				}
			}
		list.add({"eq2.17-swap",
			  "exact swap identity between the two assembled tables",
			  ok, std::nan(""), 0.0,
			  ok ? "all entries to n_max" : "first failure at " + where,
			  false});
	}

	// positivity forms and their closed sums, both signs
	for (int sign : {+1, -1}) {
		bool ok = true;
		std::string where;
		for (int n = 0; n <= n_max && ok; ++n) {
			Rational lhs =
			    (m_table[n][n] + Rational(sign) * n_table[n][n]) /
			    norm_e_squared_exact(params, n);
			Rational sum(0);
			for (long i = 0; i <= n; ++i) {
				long par = (n - i) % 2 == 0 ? 1 : -1;
				Rational c(1 + sign * par);
				if (c == Rational(0)) continue;
				Integer prod =
				    binomial(Integer(n + p),
					     static_cast<unsigned long>(i)) *
				    binomial(Integer(n),
					     static_cast<unsigned long>(i));
				sum += c * Rational(prod);
			}
			Rational rhs = sum / pow(Rational(2), 2 * n + two_q);
			// the minus form degenerates at n = 0: the zeroth
			// members of both bases coincide, so the difference
			// operator annihilates them and the form is zero
			bool zero_case = sign < 0 && n == 0;
			bool good = lhs == rhs &&
				    (zero_case ? lhs == Rational(0)
					       : lhs > Rational(0));
			if (!good) {
				ok = false;
				where = "n=" + std::to_string(n);
			}
		}
		list.add({sign > 0 ? "prop2.6-positivity-form-plus"
				   : "prop2.6-positivity-form-minus",
			  "quadratic form of the sum/difference operator matches "
			  "its binomial closed form and stays positive",
			  ok, std::nan(""), 0.0, ok ? "exact" : where, false});
	}

	// overlap of the h-family with its own index stays positive; the
	// n = 0 minus member is the zero function, so there the whole row
	// of overlaps must vanish instead
	{
		bool ok = true;
		std::string where;
		for (int n = 0; n <= n_max && ok; ++n)
			for (int sign : {+1, -1}) {
				Rational v = m_table[n][n] +
					     Rational(sign) * n_table[n][n];
				bool good;
				if (sign < 0 && n == 0) {
					good = true;
					for (int m = 0; m <= n_max; ++m)
						good = good &&
						       m_table[0][m] ==
							   n_table[0][m];
				} else {
					good = v > Rational(0);
				}
				if (!good) {
					ok = false;
					where = "n=" + std::to_string(n);
				}
			}
		list.add({"prop2.11-h-overlap-positive",
			  "self-overlap of both symmetric families is positive",
			  ok, std::nan(""), 0.0, ok ? "exact" : where, false});
	}

	// polynomial degree pattern of the dense families
	{
		bool ok = true;
		std::string where;
		for (int n = 0; n <= n_max && ok; ++n)
			for (int sign : {+1, -1}) {
				// f-basis coordinates: row n of the involution
				// plus or minus the unit vector
				std::vector<Rational> f(n + 1, Rational(0));
				for (int m = 0; m <= n; ++m) f[m] = a.a[n][m];
				f[n] += Rational(sign);
				int deg = -1;
				for (int m = n; m >= 0; --m)
					if (f[m] != Rational(0)) {
						deg = m;
						break;
					}
				int want;
				if (sign > 0)
					want = n % 2 == 0 ? n : n - 1;
				else
					want = n == 0 ? -1 : (n % 2 == 1 ? n : n - 1);
				if (deg != want) {
					ok = false;
					where = "n=" + std::to_string(n) +
						" sign=" + (sign > 0 ? "+" : "-");
				}
			}
		list.add({"ell-degree-pattern",
			  "degrees of the paired families step every second index, "
			  "and the first minus-family member vanishes",
			  ok, std::nan(""), 0.0, ok ? "exact" : where, false});
	}

	// parity of the overlaps with the matching basis element
	{
		bool ok = true;
		std::string where;
		for (int n = 0; n <= n_max && ok; ++n) {
			Rational nn = norm_e_squared_exact(params, n);
			Rational fe = inner_product_exact(params, InnerKind::fe, n, n);
			Rational plus = nn + fe, minus = nn - fe;
			long par = n % 2 == 0 ? 1 : -1;
			if (plus != Rational(1 + par) * nn ||
			    minus != Rational(1 - par) * nn) {
				ok = false;
				where = "n=" + std::to_string(n);
			}
		}
		list.add({"eq2.29-parity",
			  "overlap of each paired family member with its basis "
			  "element doubles or vanishes by parity",
			  ok, std::nan(""), 0.0, ok ? "exact" : where, false});
	}

	// doubling and annihilation under the projection-like operators
	{
		bool ok = true;
		std::string where;
		for (int n = 0; n <= n_max && ok; ++n)
			for (int sign : {+1, -1}) {
				auto same = ell_coefficients(params, n, sign);
				auto doubled = q_apply_exact(params, sign, same);
				auto killed = q_apply_exact(params, -sign, same);
				for (int m = 0; m <= n; ++m) {
					if (doubled[m] != Rational(2) * same[m] ||
					    killed[m] != Rational(0)) {
						ok = false;
						where = "n=" + std::to_string(n);
						break;
					}
				}
			}
		list.add({"prop2.12-q-eigenvectors",
			  "each paired family member is doubled by its own "
			  "projection operator and killed by the other",
			  ok, std::nan(""), 0.0, ok ? "exact" : where, false});
	}

	// double-precision assembly agrees with the exact diagonal forms
	{
		OperatorMatrix mm = assemble_M(params);
		OperatorMatrix nn = assemble_N(params, AssemblyMethod::exact);
		double worst = 0.0;
		for (int sign : {+1, -1}) {
			OperatorMatrix pp = assemble_P(mm, nn, sign);
			for (int n = 0; n <= n_max; ++n) {
				Rational exact =
				    (m_table[n][n] + Rational(sign) * n_table[n][n]) /
				    norm_e_squared_exact(params, n);
				worst = std::max(
				    worst, std::abs(pp.entries(n, n) -
						    exact.to_double()));
			}
		}
		list.add({"prop2.6-assembled-diagonal",
			  "assembled double-precision diagonals match the exact "
			  "quadratic forms",
			  worst <= 1e-12, worst, 1e-12,
			  "worst |difference| = " + num_str(worst), false});
	}

	return list;
}

CheckList n_eigensystem_check(const SpaceParams& params, int k_max) {
	if (k_max < 0 || k_max > 8)
		throw std::invalid_argument(
		    "n_eigensystem_check: k_max must be within 0..8");
	double p = params.p();
	double q = params.qd();
	double alpha = golden_alpha();
	OperatorMatrix nn = assemble_N(params, params.integer_p()
						   ? AssemblyMethod::exact
						   : AssemblyMethod::kernel);
	SpectrumResult sp = spectrum(nn);
	CheckList list;
	list.name = "explicit eigensystem, q=" + params.q.str() +
		    ", K=" + std::to_string(params.K);

	double top = sp.eigenvalues.front();
	double want_top = std::pow(alpha, 2.0 * q);
	list.add({"eq2.30-top-eig",
		  "largest eigenvalue sits at the square of the golden mean "
		  "raised to 2q",
		  std::abs(top - want_top) <= 1e-8, std::abs(top - want_top),
		  1e-8, "got " + num_str(top), false});

	double bottom = sp.eigenvalues.back();
	double want_bottom = -std::pow(alpha, 2.0 * q + 2.0);
	list.add({"eq2.30-second-eig",
		  "most negative eigenvalue is the next golden power with "
		  "alternating sign",
		  std::abs(bottom - want_bottom) <= 1e-8,
		  std::abs(bottom - want_bottom), 1e-8, "got " + num_str(bottom),
		  false});

	double norm_gap = std::abs(std::abs(top) - want_top);
	list.add({"cor2.16-opnorm", "operator norm of N", norm_gap <= 1e-8,
		  norm_gap, 1e-8, "got " + num_str(std::abs(top)), false});

	double tr = nn.entries.trace();
	double tr_want = n_trace_closed_form(params);
	list.add({"cor2.16-trace", "trace of N against its golden closed form",
		  std::abs(tr - tr_want) <= 1e-6, std::abs(tr - tr_want), 1e-6,
		  "got " + num_str(tr), false});

	// explicit eigenfunctions, expanded over the basis by quadrature
	QuadratureRule rule = gauss_laguerre(p, 200);
	int k = params.K;
	std::vector<double> norms = e_norms(params, k);
	double root5 = std::sqrt(5.0);
	for (int kk = 0; kk <= k_max; ++kk) {
		double front = std::exp(
		    0.5 * (q * std::log(5.0) + std::lgamma(kk + 1.0) -
			   std::lgamma(kk + 2.0 * q)));
		auto psi = [&](double t) {
			return front * laguerre(kk, p, root5 * t) *
			       std::exp(-alpha * t);
		};
		double mass = 0.0;
		Eigen::VectorXd c = Eigen::VectorXd::Zero(k);
		std::vector<double> lag;
		for (size_t i = 0; i < rule.nodes.size(); ++i) {
			double t = rule.nodes[i], w = rule.weights[i];
			double v = psi(t);
			mass += w * v * v;
			laguerre_all(k - 1, p, t, lag);
			for (int m = 0; m < k; ++m)
				c(m) += w * v * lag[m] / norms[m];
		}
		double unit = std::sqrt(mass);
		list.add({"eq2.31-psi-norm-k" + std::to_string(kk),
			  "explicit eigenfunction has unit norm",
			  std::abs(unit - 1.0) <= 1e-8, std::abs(unit - 1.0),
			  1e-8, "got " + num_str(unit), false});
		double lambda = (kk % 2 == 0 ? 1.0 : -1.0) *
				std::pow(alpha, 2.0 * (q + kk));
		double resid = (nn.entries * c - lambda * c).norm() / c.norm();
		list.add({"eq2.30-eig-residual-k" + std::to_string(kk),
			  "matrix action reproduces the golden eigenvalue on "
			  "the explicit eigenfunction",
			  resid <= 1e-8, resid, 1e-8,
			  "lambda = " + num_str(lambda), false});
	}
	return list;
}

std::vector<NuclearityRow> nuclearity_surrogate(const SpaceParams& params,
						int n_max) {
	double q = params.qd();
	std::vector<NuclearityRow> rows;
	double prev = 0.0;
	for (int n = 0; n <= n_max; ++n) {
		// ln of |e_n| |g_n| with |g_n| = sqrt(Gamma(2n+2q)) / (n! 3^{n+q})
		double lt = 0.5 * (std::lgamma(n + 2.0 * q) -
				   std::lgamma(n + 1.0)) +
			    0.5 * std::lgamma(2.0 * n + 2.0 * q) -
			    std::lgamma(n + 1.0) -
			    (n + q) * std::log(3.0);
		NuclearityRow r;
		r.n = n;
		r.log_term = lt;
		r.ratio = n == 0 ? std::nan("") : std::exp(lt - prev);
		prev = lt;
		rows.push_back(r);
	}
	return rows;
}

DriftReport continuous_spectrum_drift(const SpaceParams& params) {
	DriftReport rep;
	rep.k_small = params.K;
	rep.k_large = 2 * params.K;
	for (int which = 0; which < 2; ++which) {
		SpaceParams sp(params.q, which == 0 ? rep.k_small : rep.k_large);
		OperatorMatrix mm = assemble_M(sp);
		OperatorMatrix nn = assemble_N(
		    sp, sp.integer_p() ? AssemblyMethod::exact
				       : AssemblyMethod::kernel);
		SpectrumResult s = spectrum(assemble_P(mm, nn, +1));
		int best = 0;
		for (size_t j = 1; j < s.eigenvalues.size(); ++j)
			if (std::abs(s.eigenvalues[j] - 0.5) <
			    std::abs(s.eigenvalues[best] - 0.5))
				best = static_cast<int>(j);
		double eig = s.eigenvalues[best];
		rep.residual_scale =
		    std::max(rep.residual_scale, s.residuals[best]);
		if (which == 0)
			rep.eig_small_k = eig;
		else
			rep.eig_large_k = eig;
	}
	rep.drift = std::abs(rep.eig_large_k - rep.eig_small_k);
	return rep;
}

double j_diagnostic_norm(const SpaceParams& params, int k) {
	SpaceParams sp(params.q, k);
	OperatorMatrix mm = assemble_M(sp);
	OperatorMatrix nn = assemble_N(
	    sp, sp.integer_p() ? AssemblyMethod::exact : AssemblyMethod::kernel);
	return spectral_norm(assemble_J(mm, nn));
}

}  // namespace farey
