// Acceptance gate: one line per criterion, pinned tolerances, nonzero exit
// on any failure.  Each criterion recomputes its quantities from the public
// API; nothing here is read back from the unit tests.

#include <farey/check_report.hpp>
#include <farey/farey_map.hpp>
#include <farey/hankel.hpp>
#include <farey/laguerre_space.hpp>
#include <farey/polynomial_eigen.hpp>
#include <farey/rational.hpp>
#include <farey/special_functions.hpp>
#include <farey/transfer_operators.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace farey;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, const std::string& note) {
	std::printf("%s %2d  %-28s %s\n", ok ? "PASS" : "FAIL", idx, name,
		    note.c_str());
	if (!ok) ++failures;
}

std::string res_note(double worst, double tol) {
	char buf[80];
	std::snprintf(buf, sizeof buf, "worst %.3g (tol %.0e)", worst, tol);
	return buf;
}

// every item passes; diagnostics are ignored like CheckList::all_pass
bool list_ok(const CheckList& list, double* worst = nullptr) {
	bool ok = true;
	for (const auto& it : list.items) {
		if (it.diagnostic) continue;
		ok = ok && it.pass;
		if (worst && std::isfinite(it.residual))
			*worst = std::max(*worst, it.residual);
	}
	return ok;
}

// 1. Farey lists: printed levels 3 and 4, and the preimage-union identity.
void crit_farey() {
	auto want = [](std::initializer_list<std::pair<long, long>> fr) {
		std::vector<Rational> v;
		for (auto [a, b] : fr) v.emplace_back(a, b);
		return v;
	};
	bool ok = farey_sequence(3) ==
		  want({{0, 1}, {1, 3}, {1, 2}, {2, 3}, {1, 1}});
	ok = ok && farey_sequence(4) == want({{0, 1},
					      {1, 4},
					      {1, 3},
					      {2, 5},
					      {1, 2},
					      {3, 5},
					      {2, 3},
					      {3, 4},
					      {1, 1}});
	for (int n = 1; n <= 12; ++n) {
		std::set<Rational> reached = {Rational(0)};
		std::set<Rational> frontier = {Rational(0)};
		for (int step = 0; step < n; ++step) {
			std::set<Rational> next;
			for (const auto& y : frontier) {
				auto [a, b] = farey_preimages(y);
				next.insert(a);
				next.insert(b);
			}
			frontier = std::move(next);
			reached.insert(frontier.begin(), frontier.end());
		}
		std::vector<Rational> got(reached.begin(), reached.end());
		ok = ok && got == farey_sequence(n);
	}
	report(1, "farey-combinatorics", ok, "exact, n <= 12");
}

// 2. Partition identity: iterated plus-transfer of 1 at 0 equals twice the
// denominator sum, exactly when 2q is an integer and to 1e-12 otherwise.
void crit_partition() {
	bool ok = true;
	for (long two_q : {1L, 2L, 4L})
		for (int n = 1; n <= 10; ++n)
			ok = ok &&
			     knauf_partition_exact(n, two_q) ==
				 transfer_iterate_ones_exact(n, two_q,
							     Rational(0), +1);
	const double tol = 1e-12;
	double worst = 0.0;
	auto ones = [](double) { return 1.0; };
	for (double q : {0.5, 1.0, 2.0})
		for (int n = 1; n <= 10; ++n) {
			double a = knauf_partition(n, q);
			double b = transfer_iterate(ones, 0.0, n, q, +1,
						    TransferMode::direct);
			worst = std::max(worst, std::abs(a - b) / std::abs(a));
		}
	report(2, "partition-identity", ok && worst <= tol,
	       res_note(worst, tol));
}

// 3. Branch recursion equals the tree sum on the monomial grid.
void crit_iterates() {
	const double tol = 1e-12;
	double worst = 0.0;
	for (int deg = 0; deg <= 2; ++deg) {
		auto f = [deg](double t) {
			return deg == 0 ? 1.0 : std::pow(t, deg);
		};
		for (double q : {0.5, 1.0, 2.0})
			for (int sign : {+1, -1})
				for (int n = 1; n <= 8; ++n)
					for (double x : {0.0, 0.3, 1.0, 2.7}) {
						double a = transfer_iterate(
						    f, x, n, q, sign,
						    TransferMode::direct);
						double b = transfer_iterate(
						    f, x, n, q, sign,
						    TransferMode::tree);
						// minus iterates cancel, so
						// floor the scale at 1
						double scale = std::max(
						    {1.0, std::abs(a),
						     std::abs(b)});
						worst = std::max(
						    worst,
						    std::abs(a - b) / scale);
					}
	}
	report(3, "direct-vs-tree", worst <= tol, res_note(worst, tol));
}

// 4. Hilbert-space identities: exact involution square, quadrature inner
// products, and closed-form transform images.
void crit_hilbert() {
	bool ok = true;
	double worst_inner = 0.0, worst_borel = 0.0;
	const double tol_inner = 1e-10, tol_borel = 1e-8;
	for (const Rational& q :
	     {Rational(1, 2), Rational(1), Rational(3, 2)}) {
		SpaceParams params(q, 40);
		double p = params.p();

		auto T = basis_change(params, 30);
		for (int i = 0; i <= 30 && ok; ++i)
			for (int j = 0; j <= i && ok; ++j) {
				Rational sum(0);
				for (int k = j; k <= i; ++k)
					sum += T.a[i][k] * T.a[k][j];
				ok = sum == Rational(i == j ? 1 : 0);
			}

		auto rule = gauss_laguerre(p, 32);
		int npts = static_cast<int>(rule.nodes.size());
		auto eval_f = [&](int n, double t) {
			return std::pow(t, n) / factorial(n).get_d();
		};
		auto eval_e = [&](int n, double t) {
			return laguerre(n, p, t);
		};
		struct KindSpec {
			InnerKind kind;
			std::function<double(int, double)> u, v;
			InnerKind unorm, vnorm;
		};
		std::vector<KindSpec> kinds = {
		    {InnerKind::ff, eval_f, eval_f, InnerKind::ff,
		     InnerKind::ff},
		    {InnerKind::ee, eval_e, eval_e, InnerKind::ee,
		     InnerKind::ee},
		    {InnerKind::fe, eval_f, eval_e, InnerKind::ff,
		     InnerKind::ee}};
		for (const auto& ks : kinds)
			for (int n = 0; n <= 12; ++n)
				for (int m = 0; m <= 12; ++m) {
					double numeric = 0.0;
					for (int i = 0; i < npts; ++i)
						numeric +=
						    rule.weights[i] *
						    ks.u(n, rule.nodes[i]) *
						    ks.v(m, rule.nodes[i]);
					double closed = inner_product(
					    params, ks.kind, n, m);
					double scale =
					    closed != 0.0
						? std::abs(closed)
						: std::sqrt(
						      inner_product(params,
								    ks.unorm,
								    n, n) *
						      inner_product(params,
								    ks.vnorm,
								    m, m));
					worst_inner = std::max(
					    worst_inner,
					    std::abs(numeric - closed) /
						scale);
				}

		auto borel_worst =
		    [&](BorelFamily fam,
			const std::function<double(int, double)>& fn) {
			    for (int n = 0; n <= 6; ++n) {
				    auto f = [&, n](double t) {
					    return fn(n, t);
				    };
				    for (double x : {0.3, 0.5, 1.0, 1.5}) {
					    double numeric = borel_numeric_fn(
						params, f, x);
					    double closed = borel_closed_form(
						params, fam, n, x);
					    worst_borel = std::max(
						worst_borel,
						std::abs(numeric - closed) /
						    std::max(
							1.0,
							std::abs(closed)));
				    }
			    }
		    };
		borel_worst(BorelFamily::e, eval_e);
		borel_worst(BorelFamily::f, eval_f);
		borel_worst(BorelFamily::h_plus, [&](int n, double t) {
			return h_pair_eval(params, n, +1, t);
		});
		borel_worst(BorelFamily::h_minus, [&](int n, double t) {
			return h_pair_eval(params, n, -1, t);
		});
		borel_worst(BorelFamily::phi, [&](int n, double t) {
			return phi_plain_eval(params, n, t);
		});
	}
	report(4, "hilbert-space-identities",
	       ok && worst_inner <= tol_inner && worst_borel <= tol_borel,
	       "involution exact n <= 30, " + res_note(worst_inner, tol_inner) +
		   ", transforms " + res_note(worst_borel, tol_borel));
}

// 5. Eigenvalue ladder of the compact part and its eigenfunction residuals.
void crit_n_eigensystem() {
	const double tol = 1e-8;
	double worst = 0.0;
	bool ok = true;
	double alpha = golden_alpha();
	for (const Rational& q : {Rational(1, 2), Rational(1), Rational(2)}) {
		SpaceParams params(q, 80);
		auto sp = spectrum(assemble_N(params));
		for (int k = 0; k <= 4; ++k) {
			double closed = (k % 2 ? -1.0 : 1.0) *
					std::pow(alpha,
						 2.0 * (params.qd() + k));
			double best = 1e300;
			for (double ev : sp.eigenvalues)
				best = std::min(best, std::abs(ev - closed));
			worst = std::max(worst, best);
		}
		CheckList ladder = n_eigensystem_check(params, 5);
		ok = ok && list_ok(ladder);
		for (const auto& it : ladder.items)
			if (it.id.find("eig-residual") != std::string::npos)
				worst = std::max(worst, it.residual);
	}
	report(5, "compact-part-eigensystem", ok && worst <= tol,
	       res_note(worst, tol));
}

// 6. Trace and norm of the compact part against their closed forms.
void crit_trace_norm() {
	const double tol_tr = 1e-6, tol_nm = 1e-8;
	double worst_tr = 0.0, worst_nm = 0.0;
	double alpha = golden_alpha();
	for (const Rational& q : {Rational(1, 2), Rational(1), Rational(2)}) {
		SpaceParams params(q, 80);
		OperatorMatrix n = assemble_N(params);
		worst_tr = std::max(worst_tr,
				    std::abs(n.entries.trace() -
					     n_trace_closed_form(params)));
		worst_nm = std::max(
		    worst_nm, std::abs(spectral_norm(n) -
				       std::pow(alpha, 2.0 * params.qd())));
	}
	report(6, "compact-part-trace-norm",
	       worst_tr <= tol_tr && worst_nm <= tol_nm,
	       "trace " + res_note(worst_tr, tol_tr) + ", norm " +
		   res_note(worst_nm, tol_nm));
}

// 7. Parity operators double their own kernel family and kill the other,
// exactly; their truncated norm is 2.
void crit_q_structure() {
	bool ok = true;
	for (const Rational& q : {Rational(1, 2), Rational(1), Rational(2)}) {
		SpaceParams params(q, 40);
		for (int n = 0; n < 40 && ok; ++n)
			for (int sign : {+1, -1}) {
				// coefficient vectors carry degrees 0..n
				auto ell = ell_coefficients(params, n, sign);
				auto doubled =
				    q_apply_exact(params, sign, ell);
				auto killed =
				    q_apply_exact(params, -sign, ell);
				for (int i = 0; i <= n; ++i) {
					ok = ok &&
					     doubled[i] == Rational(2) * ell[i];
					ok = ok && killed[i] == Rational(0);
				}
			}
	}
	const double tol = 1e-8;
	double worst = 0.0;
	for (const Rational& q : {Rational(1, 2), Rational(1), Rational(2)}) {
		SpaceParams p60(q, 60);
		for (int sign : {+1, -1})
			worst = std::max(
			    worst,
			    std::abs(q_spectral_radius(p60, sign) - 2.0));
	}
	report(7, "parity-structure", ok && worst <= tol,
	       "exact n < 40, norm " + res_note(worst, tol));
}

// 8. Spectral confinement of the truncations, and agreement of the two
// assembly routes.  The plus operator is confined for q >= 1 only: below
// that the partition growth eigenvalue exceeds 1, so at q = 1/2 the top is
// instead matched against the independent growth estimator.
void crit_confinement() {
	const double tol_m = 1e-12, tol_p = 1e-10, tol_asm = 1e-8;
	double worst_m = 0.0, worst_p = 0.0, worst_asm = 0.0;
	auto outside = [](const SpectrumResult& sp) {
		return std::max({-sp.eigenvalues.back(),
				 sp.eigenvalues.front() - 1.0, 0.0});
	};
	double growth_gap = 0.0;
	for (const Rational& q : {Rational(1, 2), Rational(1), Rational(2)}) {
		SpaceParams params(q, 80);
		OperatorMatrix m = assemble_M(params);
		OperatorMatrix n = assemble_N(params);
		worst_m = std::max(worst_m, outside(spectrum(m)));
		for (int sign : {+1, -1}) {
			auto sp = spectrum(assemble_P(m, n, sign));
			if (sign > 0 && q < Rational(1)) {
				double top = sp.eigenvalues.front();
				double lam =
				    growth_rate_estimate(q.to_double(), 25)
					.ratio;
				growth_gap = std::max(
				    growth_gap, std::abs(top - lam) / lam);
				continue;
			}
			worst_p = std::max(worst_p, outside(sp));
		}
		SpaceParams pk(q, 40);
		worst_asm = std::max(
		    worst_asm,
		    (assemble_N(pk).entries -
		     assemble_N(pk, AssemblyMethod::kernel).entries)
			.cwiseAbs()
			.maxCoeff());
	}
	bool ok = worst_m <= tol_m && worst_p <= tol_p &&
		  worst_asm <= tol_asm && growth_gap <= 1e-3;
	report(8, "spectral-confinement", ok,
	       "P " + res_note(worst_p, tol_p) + ", assembly " +
		   res_note(worst_asm, tol_asm) + ", growth-top gap " +
		   res_note(growth_gap, 1e-3));
}

// 9. Self-reciprocal families: transform residuals, biorthogonality, and
// the exact reflection symmetry of the moment ratio.
void crit_hankel() {
	const double tol_rec = 1e-6, tol_bi = 1e-8;
	double worst_rec = 0.0, worst_bi = 0.0;
	bool ok = true;
	const std::vector<Rational> samples = {Rational(1, 3), Rational(1, 2),
					       Rational(2, 5), Rational(7, 3),
					       Rational(-1, 4)};
	for (int p = 0; p <= 2; ++p) {
		for (FamilyKind fam :
		     {FamilyKind::phi, FamilyKind::psi, FamilyKind::smallphi})
			ok = ok && list_ok(reciprocity_report(
					       ReciprocalFamily(fam, p), 8),
					   &worst_rec);
		ok = ok &&
		     list_ok(h_reciprocity_report(
				 SpaceParams(Rational(p + 1, 2), 40), 8),
			     &worst_rec);
		for (int n = 0; n <= 6; ++n)
			for (int m = 0; m <= 6; ++m)
				worst_bi = std::max(
				    worst_bi,
				    std::abs(biorthogonal_pairing(p, n, m) -
					     (n == m ? 1.0 : 0.0)));
		ok = ok && list_ok(mellin_symmetry_check(Rational(p), 20,
							 samples));
	}
	report(9, "hankel-reciprocity",
	       ok && worst_rec <= tol_rec && worst_bi <= tol_bi,
	       "transforms " + res_note(worst_rec, tol_rec) + ", pairing " +
		   res_note(worst_bi, tol_bi));
}

// 10. Integer-matrix suite: printed degree-4 matrix, its spectrum, the
// leading-eigenvalue table, row-sum bounds, and palindrome classification.
void crit_mk_suite() {
	static const long printed[5][5] = {{2, 4, 6, 4, 1},
					   {1, 2, 3, 3, 1},
					   {1, 2, 2, 2, 1},
					   {1, 3, 3, 2, 1},
					   {1, 4, 6, 4, 2}};
	MkMatrix m4 = build_mk(4);
	bool ok = true;
	for (int i = 0; i <= 4; ++i)
		for (int j = 0; j <= 4; ++j)
			ok = ok && m4.entries[i][j] == printed[i][j];

	const double tol = 1e-12;
	double worst = 0.0;
	auto sp4 = mk_spectrum(4);
	double r113 = std::sqrt(113.0);
	const double targets4[5] = {(11.0 + r113) / 2.0, 1.0,
				    (11.0 - r113) / 2.0, -1.0, -1.0};
	for (int i = 0; i < 5; ++i)
		worst = std::max(worst,
				 std::abs(sp4[i].lambda - targets4[i]));

	const double lam_table[5] = {2.0, 3.0, (5.0 + std::sqrt(17.0)) / 2.0,
				     7.0, (11.0 + r113) / 2.0};
	for (int k = 0; k <= 4; ++k) {
		auto top = mk_spectrum(k).front();
		auto ef = eigenpair_to_eigenfunction(k, top);
		worst = std::max(worst, std::abs(top.lambda - lam_table[k]));
		ok = ok && ef.checks.all_pass();
	}

	for (int k = 1; k <= 20; ++k) {
		try {
			auto lb = leading_bounds(k);
			ok = ok && lb.lower <= lb.lambda + 1e-12 &&
			     lb.lambda <= lb.upper + 1e-12;
		} catch (const std::exception&) {
			ok = false;
		}
	}

	const double tol_cls = 1e-10;
	double worst_cls = 0.0;
	for (int k = 0; k <= 20; ++k)
		for (const auto& pr : mk_spectrum(k)) {
			if (std::abs(pr.lambda) <= 1e-8) continue;
			if (pr.cls == PalindromeClass::mixed) ok = false;
			int s =
			    pr.cls == PalindromeClass::palindrome ? 1 : -1;
			for (int i = 0; i <= k; ++i)
				worst_cls = std::max(
				    worst_cls,
				    std::abs(pr.b[i] - s * pr.b[k - i]));
		}
	report(10, "integer-matrix-suite",
	       ok && worst <= tol && worst_cls <= tol_cls,
	       "spectra " + res_note(worst, tol) + ", classes " +
		   res_note(worst_cls, tol_cls));
}

// 11. Bernoulli-coefficient fixed functions, exactly.
void crit_bernoulli() {
	bool ok = true;
	for (int k = 0; k <= 13; ++k)
		ok = ok && list_ok(bernoulli_fixed_point_check(k));
	LaurentPolynomial f0 = bernoulli_eigenfunction(0);
	ok = ok && f0.coeffs.size() == 3 &&
	     f0.coeffs.at(-1) == Rational(1, 12) &&
	     f0.coeffs.at(0) == Rational(-1, 4) &&
	     f0.coeffs.at(1) == Rational(1, 12);
	LaurentPolynomial f2 = bernoulli_eigenfunction(2);
	ok = ok && f2.coeffs.size() == 3 &&
	     f2.coeffs.at(-1) == Rational(-1, 360) &&
	     f2.coeffs.at(1) == Rational(1, 72) &&
	     f2.coeffs.at(3) == Rational(-1, 360);
	report(11, "bernoulli-eigenfunctions", ok,
	       "exact, even k <= 12, odd k <= 13");
}

// 12. Growth-rate estimator against the integer-matrix eigenvalues.  The 1%
// tolerance reflects the estimator's observed n = 25 convergence (errors
// 2e-5 and 2e-3 here; the q = -1/2 ratio is exact at every level).
void crit_growth() {
	const double tol = 1e-2;
	double e1 = std::abs(growth_rate_estimate(-0.5, 25).ratio - 3.0) / 3.0;
	double lam = (5.0 + std::sqrt(17.0)) / 2.0;
	double e2 =
	    std::abs(growth_rate_estimate(-1.0, 25).ratio - lam) / lam;
	double worst = std::max(e1, e2);
	report(12, "growth-rates", worst <= tol, res_note(worst, tol));
}

// 13. Negative control: the power law is an eigenfunction only at q = 1.
void crit_negative_control() {
	auto deviation = [](double q) {
		auto f = [q](double t) { return std::pow(t, -q); };
		double lo = 0.0, hi = 0.0;
		bool first = true;
		for (double x : {0.5, 1.0, 2.0}) {
			double r = transfer_iterate(f, x, 1, q, +1,
						    TransferMode::direct) /
				   std::pow(x, -q);
			lo = first ? r : std::min(lo, r);
			hi = first ? r : std::max(hi, r);
			first = false;
		}
		return hi - lo;
	};
	double on = deviation(1.0);
	double off_half = deviation(0.5);
	double off_two = deviation(2.0);
	bool ok = on <= 1e-12 && off_half > 1e-3 && off_two > 1e-3;
	char buf[96];
	std::snprintf(buf, sizeof buf,
		      "dev(1) %.3g, dev(1/2) %.3g, dev(2) %.3g", on, off_half,
		      off_two);
	report(13, "negative-control", ok, buf);
}

}  // namespace

int main() {
	crit_farey();
	crit_partition();
	crit_iterates();
	crit_hilbert();
	crit_n_eigensystem();
	crit_trace_norm();
	crit_q_structure();
	crit_confinement();
	crit_hankel();
	crit_mk_suite();
	crit_bernoulli();
	crit_growth();
	crit_negative_control();
	if (failures)
		std::printf("%d criterion(s) failed\n", failures);
	else
		std::printf("all 13 criteria passed\n");
	return failures ? 1 : 0;
}
