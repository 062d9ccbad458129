#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "farey/check_report.hpp"
#include "farey/quadratic_field.hpp"
#include "farey/rational.hpp"

// Exact eigenproblem of the signed composition operators at the parameters
// where they preserve polynomials: for q = -k/2 the space of polynomials of
// degree <= k is invariant, and in the rescaled coordinates a_i = C(k,i) b_i
// the action is an integer (k+1)x(k+1) matrix.  This module builds those
// matrices, solves and classifies their spectra, certifies eigenvalues in
// quadratic number fields where possible, converts eigenvectors back into
// verified polynomial eigenfunctions, bounds the top eigenvalue through row
// sums, and constructs the exact Bernoulli-coefficient fixed functions.

namespace farey {

// Integer matrix acting on the rescaled coefficient vector: binomial
// C(k-i, j-i) above the diagonal, 2 on it, C(i,j) below.  Constructing one
// verifies the structural identities (central symmetry, the closed-form row
// and column sums), so a value of this type is already checked.
struct MkMatrix {
	int k = 0;
	std::vector<std::vector<Integer>> entries;

	Integer row_sum(int i) const;
	Integer col_sum(int j) const;
};

MkMatrix build_mk(int k);

// Reversal symmetry of an eigenvector: b_i = +b_{k-i} (palindrome),
// b_i = -b_{k-i} (skew), or neither (possible only at lambda = 0).
enum class PalindromeClass { palindrome, skew, mixed };

struct PolyEigenpair {
	double lambda = 0.0;
	std::vector<double> b;          // length k+1
	PalindromeClass cls = PalindromeClass::mixed;
};

// All eigenpairs, descending by eigenvalue.  Eigenvalues must come out real
// (imaginary part <= 1e-10 relative) or this throws.  Repeated nonzero
// eigenvalues are resymmetrized via v +/- reverse(v) so every returned
// vector is exactly a palindrome or a skew-palindrome; the top eigenvector
// is scaled to b_0 = 1, the rest to unit norm with positive leading entry.
std::vector<PolyEigenpair> mk_spectrum(int k);

// Eigenpair certified in exact arithmetic: lambda is rational or lives in a
// real quadratic field detected from the characteristic polynomial, and b
// spans the corresponding kernel.
struct ExactEigenpair {
	QuadExt lambda;
	std::vector<QuadExt> b;
};

// Attempts exact certification of a numerically found eigenvalue: first as
// a nearby rational with integer denominator <= 64, then as a root of an
// integer quadratic factor of the characteristic polynomial (paired with
// another numeric eigenvalue).  The returned vector is the kernel member
// matching `b_hint` up to scale.  Empty when lambda resists both forms.
std::optional<ExactEigenpair> exact_eigenpair(const MkMatrix& m,
					      double lambda,
					      const std::vector<double>& b_hint);

// Polynomial eigenfunction f(x) = sum_i C(k,i) b_i x^i together with the
// verification rows: the three-term functional equation
// lambda f(x) - f(x+1) = sign * x^k f(1 + 1/x) at x in {1/2, 1, 2, 3}, and
// the value ratios lambda = 1 + f(1)/f(0), lambda(lambda-1)/2 = f(2)/f(0)
// for the plus sign when f(0) != 0.  Checks run in the exact field when the
// eigenvalue certifies, else numerically at 1e-10.
struct EigenfunctionResult {
	std::vector<double> a;       // monomial coefficients, length k+1
	int sign = 0;                // +1 palindrome, -1 skew
	bool exact = false;          // verification ran in exact arithmetic
	std::string lambda_text;     // "7", "11/2+1/2*sqrt(113)", or "%.15g"
	CheckList checks;
};

EigenfunctionResult eigenpair_to_eigenfunction(int k, const PolyEigenpair& pair);

// Row-sum bounds on the top eigenvalue: with S = 2^k + 1 the largest row
// sum and s the smallest, h = (-s + 2 + sqrt(s^2 + 4(S-s)))/2 and
// g = (S - 2 + sqrt(S^2 - 4(S-s)))/(2(s-1)) give
// s - 1 + h <= lambda <= S - 1 + 1/g.  Throws if the solved eigenvalue
// escapes the bounds or its eigenvector is not palindromic.
struct LeadingBounds {
	double lower = 0.0;
	double upper = 0.0;
	double lambda = 0.0;
};

LeadingBounds leading_bounds(int k);

// Finitely supported exact power series with exponents in [-1, k+1].
struct LaurentPolynomial {
	std::map<int, Rational> coeffs;  // exponent -> nonzero coefficient

	Rational eval(const Rational& x) const;  // x != 0 if negative powers
	bool is_zero() const { return coeffs.empty(); }
	std::string str() const;
};

// The zeta/Bernoulli-coefficient function
//   f_k = zeta(-k)/2 (1 + x^k)
//       + (-1)^k k! sum_{n=-1}^{k+1} B_{n+1} B_{k+1-n} / ((n+1)!(k+1-n)!) x^n,
// a fixed function of the plus operator for even k and identically zero for
// odd k.
LaurentPolynomial bernoulli_eigenfunction(int k);

// Exact fixed-point rows for f_k: for even k the plus functional equation
// with lambda = 1 at x in {1, 2, 3, 1/2}; for odd k a single all-coefficients-
// vanish row.
CheckList bernoulli_fixed_point_check(int k);

// Indefinite pairing <Phi, Psi> = sum_i b_i c_{k-i}.  Verifies the exact
// adjointness <M Phi, Psi> = <Phi, M^T Psi> on seeded random integer
// vectors, and that <Phi, Phi> = +/- |Phi|^2 (sign by reversal class) for
// every nonzero-eigenvalue eigenvector.
CheckList pseudo_scalar_checks(int k);

// Exact dimension and reversal classification of the fixed space
// (eigenvalue one) of M_k.  Exploratory: reported, never asserted against.
struct PeriodSearchRow {
	int k = 0;
	int dimension = 0;
	int palindromic = 0;
	int skew = 0;
};

PeriodSearchRow period_search(int k);

}  // namespace farey
