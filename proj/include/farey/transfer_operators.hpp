#pragma once

#include <Eigen/Dense>
#include <vector>

#include "farey/check_report.hpp"
#include "farey/laguerre_space.hpp"
#include "farey/rational.hpp"

namespace farey {

enum class OperatorKind { M, N, Pplus, Pminus, Qplus, Qminus, J };
enum class AssemblyMethod { exact, kernel };

// Dense truncation of one operator.  The basis tag says which coordinates
// the entries act on: the orthonormal basis for the symmetric operators,
// the plain Laguerre basis for the triangular ones.
struct OperatorMatrix {
	OperatorKind kind;
	SpaceParams params;
	BasisKind basis;
	Eigen::MatrixXd entries;
};

struct SpectrumResult {
	std::vector<double> eigenvalues;  // descending
	Eigen::MatrixXd eigenvectors;     // column j pairs with eigenvalues[j]
	std::vector<double> residuals;    // |Av - lambda v| per unit vector
};

// Bilinear tables (M e_n, e_m) and (N e_n, e_m) as exact rationals, for
// integer p only.  The M table has the closed form
//   p! C(n+m+p, p) C(n+m, n) / 2^{n+m+p+1},
// and the N table is the change-of-basis matrix times the M table.  Both are
// truncation-exact: the involution is lower triangular, so row n of the N
// table needs only rows 0..n of the M table.  Assembling N from doubles
// instead is hopeless at working sizes: the alternating sum cancels ~20
// digits against entries of order one.
std::vector<std::vector<Rational>> m_bilinear_exact(const SpaceParams& params);
std::vector<std::vector<Rational>> n_bilinear_exact(const SpaceParams& params);

OperatorMatrix assemble_M(const SpaceParams& params);
OperatorMatrix assemble_N(const SpaceParams& params,
			  AssemblyMethod method = AssemblyMethod::exact);
OperatorMatrix assemble_P(const OperatorMatrix& m, const OperatorMatrix& n,
			  int sign);
// I ± A^T on plain-basis coordinates; exact structure, no inversion
OperatorMatrix assemble_Q(const SpaceParams& params, int sign);
// N M^{-1} via symmetric solve; numerically delicate, diagnostic use only
OperatorMatrix assemble_J(const OperatorMatrix& m, const OperatorMatrix& n);

// plain-basis coordinates of ell_n^± = e_n ± f_n (exact, finite)
std::vector<Rational> ell_coefficients(const SpaceParams& params, int n,
				       int sign);
// exact application of Q^± to plain-basis coordinates
std::vector<Rational> q_apply_exact(const SpaceParams& params, int q_sign,
				    const std::vector<Rational>& coeffs);
// the triangular truncation's eigenvalues are its diagonal 1 ± (-1)^n
double q_spectral_radius(const SpaceParams& params, int sign);

SpectrumResult spectrum(const OperatorMatrix& matrix);
double spectral_norm(const OperatorMatrix& matrix);  // largest singular value

double golden_alpha();                                // (sqrt 5 - 1)/2
double n_trace_closed_form(const SpaceParams& params);  // alpha^p / sqrt 5

// Exact structural identities of the operator family on the plain basis:
// the swap relation connecting M and N through the involution, positivity
// of the quadratic forms with their closed-form values, positivity of
// (h_n^±, e_n), the polynomial degree pattern of ell_n^±, the parity of
// (ell_n^±, e_n), and annihilation/doubling under Q^±.
CheckList verify_structure(const SpaceParams& params, int n_max);

// Spectral data of N against the closed forms: eigenvalue ladder, explicit
// eigenfunctions, unit norms, operator norm, trace.
CheckList n_eigensystem_check(const SpaceParams& params, int k_max);

struct NuclearityRow {
	int n;
	double log_term;  // ln(|e_n| |g_n|)
	double ratio;     // term(n)/term(n-1), NaN at n=0
};
// partial-sum terms of the nuclear-norm majorant; ratios tend to 2/3
std::vector<NuclearityRow> nuclearity_surrogate(const SpaceParams& params,
						int n_max);

struct DriftReport {
	int k_small = 0, k_large = 0;
	double eig_small_k = 0, eig_large_k = 0;  // eigenvalue nearest 1/2
	double drift = 0;
	double residual_scale = 0;
};
// Finite sections of P^+ have no stable interior eigenvalue: the one nearest
// 1/2 moves with the truncation size by far more than the solver residual,
// consistent with purely continuous spectrum.  Reported, never asserted.
DriftReport continuous_spectrum_drift(const SpaceParams& params);

// spectral norm of the solved truncation of N M^{-1}; diagnostic only, the
// truncated inverse is uncontrolled
double j_diagnostic_norm(const SpaceParams& params, int k);

}  // namespace farey
