#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "farey/hankel.hpp"
#include "farey/special_functions.hpp"

using namespace farey;

namespace {

SpaceParams params_for_p(int p, int K = 40) {
	// q = (p + 1) / 2
	return SpaceParams(Rational(p + 1, 2), K);
}

}  // namespace

TEST_CASE("family values at hand-checked points") {
	ReciprocalFamily phi1(FamilyKind::phi, 1.0);
	// sqrt(4 / Gamma(2)) e^{-1} L_0 = 2/e
	CHECK(std::abs(family_eval(phi1, 0, 1.0) - 2.0 / std::exp(1.0)) < 1e-14);

	// psi_0 = t^p phi_0
	ReciprocalFamily psi1(FamilyKind::psi, 1.0);
	CHECK(std::abs(family_eval(psi1, 0, 2.0) - 2.0 * family_eval(phi1, 0, 2.0)) <
	      1e-14);

	// smallphi_0 at p=1: sqrt(2) e^{-1/2} t^{3/2} at t=1
	ReciprocalFamily sm1(FamilyKind::smallphi, 1.0);
	CHECK(std::abs(family_eval(sm1, 0, 1.0) -
		       std::sqrt(2.0) * std::exp(-0.5)) < 1e-14);

	CHECK_THROWS_AS(family_eval(phi1, -1, 1.0), std::invalid_argument);
	CHECK_THROWS_AS(family_eval(phi1, 0, 0.0), std::domain_error);
	CHECK_THROWS_AS(ReciprocalFamily(FamilyKind::phi, -1.5),
			std::invalid_argument);
}

TEST_CASE("squared-variable member is the change of variables of the pair") {
	// smallphi_n(t) = 2^{-q+1/2} t^{p+1/2} phi_n(t^2/2)
	//               = 2^{q-1/2} t^{-p+1/2} psi_n(t^2/2)
	for (int p = 0; p <= 2; ++p) {
		double q = 0.5 * (p + 1.0);
		ReciprocalFamily phi(FamilyKind::phi, p);
		ReciprocalFamily psi(FamilyKind::psi, p);
		ReciprocalFamily sm(FamilyKind::smallphi, p);
		for (int n = 0; n <= 4; ++n)
			for (double t : {0.7, 1.3, 2.0}) {
				double u = 0.5 * t * t;
				double a = family_eval(sm, n, t);
				double b = std::pow(2.0, -q + 0.5) *
					   std::pow(t, p + 0.5) *
					   family_eval(phi, n, u);
				double c = std::pow(2.0, q - 0.5) *
					   std::pow(t, -p + 0.5) *
					   family_eval(psi, n, u);
				CHECK(std::abs(a - b) < 1e-10 * (1.0 + std::abs(a)));
				CHECK(std::abs(a - c) < 1e-10 * (1.0 + std::abs(a)));
			}
	}
}

TEST_CASE("exponential transform pairs") {
	for (int p = 0; p <= 2; ++p) {
		HankelTransform tr(HankelKind::plain, p);
		for (double t : {0.3, 1.0, 2.5}) {
			double got = hankel_apply(
			    tr, [](double s) { return std::exp(-s); }, t);
			CHECK(std::abs(got - std::exp(-t)) < 1e-7);
		}
	}

	// scaling law at a = 2: a^q e^{-as} maps to a^{-q} e^{-t/a}
	HankelTransform tr1(HankelKind::plain, 1.0);
	double got = hankel_apply(
	    tr1, [](double s) { return 2.0 * std::exp(-2.0 * s); }, 1.0);
	CHECK(std::abs(got - 0.5 * std::exp(-0.5)) < 1e-7);

	CHECK_THROWS_AS(HankelTransform(HankelKind::plain, -1.0),
			std::invalid_argument);
	CHECK_THROWS_AS(hankel_apply(tr1, [](double) { return 0.0; }, -1.0),
			std::domain_error);
}

TEST_CASE("symmetric transform fixes the squared-variable members") {
	ReciprocalFamily sm(FamilyKind::smallphi, 1.0);
	HankelTransform k(HankelKind::symmetric, 1.0);
	auto f0 = [&sm](double s) { return family_eval(sm, 0, s); };
	auto f1 = [&sm](double s) { return family_eval(sm, 1, s); };
	CHECK(std::abs(hankel_apply(k, f0, 1.0) - family_eval(sm, 0, 1.0)) < 1e-7);
	CHECK(std::abs(hankel_apply(k, f1, 1.0) + family_eval(sm, 1, 1.0)) < 1e-7);
}

TEST_CASE("decay warnings flag slowly decaying inputs") {
	HankelTransform tr(HankelKind::plain, 1.0);
	TransformValue ok = hankel_apply_checked(
	    tr, [](double s) { return std::exp(-s); }, 1.0);
	CHECK(!ok.decay_warning);

	// the classic non-L2 fixed point of the symmetric transform decays
	// like s^{-1/2}: documented, excluded from norm checks, flagged here
	TransformValue bad = hankel_apply_checked(
	    tr, [](double s) { return 1.0 / std::sqrt(s); }, 1.0);
	CHECK(bad.decay_warning);

	HankelTransform sym(HankelKind::symmetric, 1.0);
	TransformValue slow = hankel_apply_checked(
	    sym, [](double s) { return 1.0 / (1.0 + s); }, 1.0);
	CHECK(slow.decay_warning);
}

TEST_CASE("biorthogonality of the dense pair") {
	for (int p = 0; p <= 2; ++p)
		for (int n = 0; n <= 6; ++n)
			for (int m = 0; m <= 6; ++m) {
				double want = n == m ? 1.0 : 0.0;
				CHECK(std::abs(biorthogonal_pairing(p, n, m) -
					       want) < 1e-8);
			}
}

TEST_CASE("inner products within one family") {
	// phi_0 = 2 e^{-t} at p=1, squared integral 2; psi_0 likewise gives 1
	ReciprocalFamily phi(FamilyKind::phi, 1.0);
	ReciprocalFamily psi(FamilyKind::psi, 1.0);
	CHECK(std::abs(family_inner(phi, 0, 0) - 2.0) < 1e-12);
	CHECK(std::abs(family_inner(psi, 0, 0) - 1.0) < 1e-12);

	// the squared-variable family is orthonormal
	for (int p = 0; p <= 2; ++p) {
		ReciprocalFamily sm(FamilyKind::smallphi, p);
		for (int n = 0; n <= 5; ++n)
			for (int m = 0; m <= 5; ++m) {
				double want = n == m ? 1.0 : 0.0;
				CHECK(std::abs(family_inner(sm, n, m) - want) <
				      1e-9);
			}
	}
}

TEST_CASE("self-reciprocity residuals stay under tolerance") {
	CheckList phi_rep =
	    reciprocity_report(ReciprocalFamily(FamilyKind::phi, 1.0), 4);
	CHECK(phi_rep.all_pass());
	CHECK(phi_rep.items.size() == 5);

	CheckList psi_rep =
	    reciprocity_report(ReciprocalFamily(FamilyKind::psi, 0.0), 4);
	CHECK(psi_rep.all_pass());

	CheckList sm_rep =
	    reciprocity_report(ReciprocalFamily(FamilyKind::smallphi, 2.0), 4);
	CHECK(sm_rep.all_pass());

	const CheckOutcome* row = phi_rep.find("eq3.10-reciprocity-phi-n3");
	REQUIRE(row != nullptr);
	CHECK(row->residual <= 1e-6);
	CHECK(row->detail.find("sign=-1") != std::string::npos);

	CHECK_THROWS_AS(
	    reciprocity_report(ReciprocalFamily(FamilyKind::phi, 1.0), 9),
	    std::invalid_argument);
}

TEST_CASE("the even/odd pair family is fixed by the plain transform") {
	CheckList rep = h_reciprocity_report(params_for_p(1), 4);
	CHECK(rep.all_pass());
	CHECK(rep.items.size() == 10);

	const CheckOutcome* zero = rep.find("eq2.26-h-reciprocity-minus-m0");
	REQUIRE(zero != nullptr);
	CHECK(zero->pass);
	CHECK(zero->detail.find("norm=0") != std::string::npos);
}

TEST_CASE("weighted Mellin values and their reflection symmetry") {
	// n=1, p=1 collapses to 2(1-s)
	for (long num : {0L, 1L, 2L, 5L}) {
		Rational s(num, 2);
		Rational want = Rational(2) * (Rational(1) - s);
		CHECK(mellin_weighted_value(Rational(1), 1, s) == want);
	}

	std::vector<Rational> samples = {Rational(1, 3), Rational(1, 2),
					 Rational(2, 5), Rational(7, 3),
					 Rational(-1, 4)};
	for (long p : {0L, 1L, 2L}) {
		CheckList rep = mellin_symmetry_check(Rational(p), 20, samples);
		CHECK(rep.all_pass());
	}

	CHECK_THROWS_AS(mellin_weighted_value(Rational(-1, 2), 1, Rational(1)),
			std::domain_error);
	CHECK_THROWS_AS(mellin_symmetry_check(Rational(1), 21, samples),
			std::invalid_argument);
}

TEST_CASE("scaled exponential moments agree across transform pairs") {
	for (int p = 0; p <= 2; ++p)
		for (int n = 0; n <= 6; ++n)
			for (double a : {0.5, 1.0, 3.0})
				CHECK(laplace_pair_gap(p, n, a) < 1e-12);
	CHECK_THROWS_AS(laplace_pair_gap(1.0, 0, 0.0), std::domain_error);
}

TEST_CASE("oscillator equation holds under finite differences") {
	CheckList r0 = ode_residual_report(1.0, 0, {1.0});
	CHECK(r0.all_pass());
	CHECK(r0.items.at(0).detail.find("residual(h/2)") != std::string::npos);

	CheckList r2 = ode_residual_report(1.0, 2, {2.0, 1.1, 3.7});
	CHECK(r2.all_pass());

	// eigenvalue read-back at n=0 is p+1
	CHECK(std::abs(ode_eigen_readback(1.0, 0, 1.3) - 2.0) < 1e-4);
	CHECK(std::abs(ode_eigen_readback(2.0, 1, 1.7) - 5.0) < 2e-4);

	CHECK_THROWS_AS(ode_residual_report(0.5, 0, {1.0}), std::domain_error);
	CHECK_THROWS_AS(ode_residual_report(1.0, 0, {0.3}), std::domain_error);
}

TEST_CASE("dense members expand through the even/odd pairs") {
	for (int p = 0; p <= 2; ++p) {
		SpaceParams sp = params_for_p(p);
		ReciprocalFamily phi(FamilyKind::phi, p);
		for (int n = 0; n <= 4; ++n)
			for (double t : {0.4, 1.0, 2.2}) {
				double direct = family_eval(phi, n, t);
				double through = expansion_through_h(sp, n, t);
				CHECK(std::abs(direct - through) <
				      1e-8 * (1.0 + std::abs(direct)));
			}
	}
}

TEST_CASE("pair expansion holds exactly on coefficients") {
	// L_n^p(2t) = (-1)^n sum_m C(n+p, n-m) (-2)^m L_m^p(t) as polynomials
	for (long p : {0L, 1L, 2L}) {
		for (unsigned n = 0; n <= 8; ++n) {
			std::vector<Rational> want =
			    laguerre_coefficients(n, Rational(p));
			for (size_t j = 0; j < want.size(); ++j)
				want[j] *= pow(Rational(2), static_cast<int>(j));

			std::vector<Rational> acc(n + 1, Rational(0));
			Rational pw(1);  // (-2)^m
			for (unsigned m = 0; m <= n; ++m) {
				Rational binom(1);  // C(n+p, n-m)
				for (unsigned j = 0; j < n - m; ++j)
					binom *= Rational(Integer(n + p - j)) /
						 Rational(Integer(j + 1));
				std::vector<Rational> lm =
				    laguerre_coefficients(m, Rational(p));
				for (size_t j = 0; j < lm.size(); ++j)
					acc[j] += binom * pw * lm[j];
				pw *= Rational(-2);
			}
			Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
			for (size_t j = 0; j < want.size(); ++j)
				CHECK(want[j] == sign * acc[j]);
		}
	}
}
