#pragma once

// Hankel transforms on (0, inf) in three normalizations, the Laguerre-type
// families that are fixed by them up to sign, and the Mellin-side symmetry
// that characterizes joint self-reciprocity.  Everything is parameterized by
// the Bessel order p > -1; where the weighted space L^2(t^p e^{-t} dt) is
// involved, p = 2q - 1 as elsewhere.

#include <functional>
#include <vector>

#include "farey/check_report.hpp"
#include "farey/laguerre_space.hpp"
#include "farey/rational.hpp"

namespace farey {

// plain:     (T f)(t) = int J_p(2 sqrt(st)) (s/t)^{p/2} f(s) ds
// conjugate: (T f)(t) = int J_p(2 sqrt(st)) (t/s)^{p/2} f(s) ds, the
//            L^2(R_+) adjoint of plain; equals chi_p . plain . chi_p^{-1}
// symmetric: (T f)(t) = int J_p(st) sqrt(st) f(s) ds
enum class HankelKind { plain, conjugate, symmetric };

struct HankelTransform {
	HankelKind kind;
	double p;

	HankelTransform(HankelKind kind_, double p_) : kind(kind_), p(p_) {
		if (!(p > -1.0))
			throw std::invalid_argument(
			    "HankelTransform: order must exceed -1");
	}
};

struct TransformValue {
	double value = 0.0;
	// set when the input decays too slowly for the factored-exponential
	// quadrature to be trusted (the integral may not even converge)
	bool decay_warning = false;
};

// One transform value by generalized Gauss-Laguerre quadrature after
// factoring the integrand's s^p e^{-s} decay (the symmetric kind works in
// the squared variable, where the factored weight is again Laguerre).
// Accurate to ~1e-7 absolute for inputs decaying at least like e^{-s/3}.
TransformValue hankel_apply_checked(const HankelTransform& tr,
				    const std::function<double(double)>& fn,
				    double t, int count = 200);
double hankel_apply(const HankelTransform& tr,
		    const std::function<double(double)>& fn, double t,
		    int count = 200);

// phi_n      = sqrt(2^{p+1} n! / Gamma(n+p+1)) e^{-t} L_n^p(2t), fixed up to
//              the sign (-1)^n by the plain transform
// psi_n      = t^p phi_n, fixed likewise by the conjugate transform
// smallphi_n = sqrt(2 n! / Gamma(n+p+1)) e^{-t^2/2} t^{p+1/2} L_n^p(t^2),
//              fixed likewise by the symmetric transform; orthonormal
enum class FamilyKind { phi, psi, smallphi };

struct ReciprocalFamily {
	FamilyKind kind;
	double p;

	ReciprocalFamily(FamilyKind kind_, double p_) : kind(kind_), p(p_) {
		if (!(p > -1.0))
			throw std::invalid_argument(
			    "ReciprocalFamily: order must exceed -1");
	}
};

double family_eval(const ReciprocalFamily& fam, int n, double t);

// L^2(R_+) inner product of two members of the same family, reduced to an
// exact Laguerre rule by the substitution that makes the weight polynomial
double family_inner(const ReciprocalFamily& fam, int n, int m);

// <phi_n, psi_m>, which is delta_{nm}: the two dense families are a
// biorthogonal pair in L^2(R_+)
double biorthogonal_pairing(double p, int n, int m);

// L^2 residuals |T f_n - (-1)^n f_n| / |f_n| for the family's own transform
// on a Gauss-Legendre grid; rows named by index, tolerance 1e-6
CheckList reciprocity_report(const ReciprocalFamily& fam, int n_max);

// the even/odd pair family h_m^{+-} = e^{-t}(L_m^p(t) +- t^m/m!) satisfies
// (plain T) h_m^{+-} = +- h_m^{+-}; the m = 0 minus member vanishes
// identically and is checked for exactly that
CheckList h_reciprocity_report(const SpaceParams& params, int m_max);

// Gamma-weighted Mellin transform of phi_n along the critical strip:
// ((p+1)_n / n!) 2F1(-n, s; p+1; 2), a polynomial in s computed exactly
Rational mellin_weighted_value(const Rational& p, int n, const Rational& s);

// Exact reflection symmetry value(s) = (-1)^n value(1+p-s) at the sample
// points (the terminating-sum identity behind it is Pfaff's transformation),
// plus the numeric Laplace-transform pairing rows for the psi family at
// a in {1/2, 1, 3}, tolerance 1e-6.
CheckList mellin_symmetry_check(const Rational& p, int n_max,
				const std::vector<Rational>& s_samples);

// |int a^{-q} e^{-t/a} psi_n dt - (-1)^n int a^q e^{-at} psi_n dt| with
// q = (p+1)/2; zero exactly when psi_n and (-1)^n psi_n are a conjugate
// transform pair
double laplace_pair_gap(double p, int n, double a);

// The smallphi family solves a second-order oscillator equation with
// centrifugal term (p^2 - 1/4)/t^2 and eigenvalue 2(2n + p + 1); rows
// compare a central-difference second derivative (step 1e-4) against it
// and report step-halving sensitivity.  Requires p >= 1 (the centrifugal
// coefficient makes lower orders too singular for finite differences).
CheckList ode_residual_report(double p, int n,
			      const std::vector<double>& t_samples);

// ((-f'' + ((p^2-1/4)/t^2 + t^2) f) / 2f)(t) for f = smallphi_n: the
// oscillator eigenvalue read-back, -> 2n + p + 1
double ode_eigen_readback(double p, int n, double t);

// phi_n through the even/odd pair family: phi_n equals
// (-1)^n c_n sum_m C(n+p, n-m) (-2)^m (h_m^+ + h_m^-)/2 pointwise
double expansion_through_h(const SpaceParams& params, int n, double t);

}  // namespace farey
