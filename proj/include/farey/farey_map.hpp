#pragma once

// Exact combinatorics of the Farey map F(x) = x/(1-x) on [0,1/2] and
// (1-x)/x on [1/2,1]: the map itself and its continued-fraction shift,
// mediant-generated Farey sequences, Stern-Brocot levels carrying the
// linear forms needed to expand iterated signed transfer sums, Knauf-type
// partition sums over denominators, and the growth-rate (pressure)
// estimator.

#include <functional>
#include <utility>
#include <vector>

#include "farey/rational.hpp"

namespace farey {

// F(x) for x in [0, 1].
Rational farey_map(const Rational& x);

// The two inverse branches of F applied to y >= 0: y/(1+y) and 1/(1+y).
std::pair<Rational, Rational> farey_preimages(const Rational& y);

// Digit action of F on continued fractions: [a1, a2, ...] becomes
// [a1 - 1, a2, ...], with a leading zero digit dropped.
std::vector<Integer> farey_shift(const std::vector<Integer>& digits);

inline constexpr int kFareyDepthCap = 26;

// F_n by mediant insertion from F_1 = (0/1, 1/1); ascending, 2^{n-1}+1
// entries.  n beyond the cap throws (Fibonacci denominators and the 2^n
// element count both blow up).
std::vector<Rational> farey_sequence(int n, int cap = kFareyDepthCap);

/*
 * A node of the level-n Stern-Brocot tree slice.  Each node corresponds to
 * a length-(n-1) word over the inverse branches x -> x/(1+x) = [[1,0],[1,1]]
 * and x -> 1/(1+x) = [[0,1],[1,1]]; with W the word's matrix product,
 * the node fraction is a/b where (a, b) are the column sums of W, and the
 * two n-step branch arguments at x are n0/(ax+b), n1/(ax+b) with
 * n0 = mu x + nu (a row of W) and n1 = (a - mu) x + (b - nu).  The rows
 * are ordered so that the signed sum takes n0 with weight +1 and n1 with
 * the sign: when the word has an odd number of second-branch letters the
 * roles swap, which is absorbed into (mu, nu) here.
 */
struct TreeNode {
	Integer a, b;    // node fraction a/b, coprime, 0 <= mu <= a, 0 <= nu <= b
	Integer mu, nu;  // numerator linear form n0 = mu x + nu
	Rational value() const { return Rational(a, b); }
};

// Level n >= 1, sorted ascending by fraction; the values are
// (F_n \ F_{n-1}) followed by their reciprocals.
std::vector<TreeNode> stern_brocot_level(int n, int cap = kFareyDepthCap);

// 2 sum_{a/b in F_n \ {0/1}} b^{-2q}; equals the n-fold signed transfer
// sum applied to 1, evaluated at 0, with the plus sign.
double knauf_partition(int n, double q, int cap = kFareyDepthCap);

// Exact variant for 2q integer.  Positive two_q is capped earlier (n <= 16)
// because the lcm of the b^{2q} denominators grows to hundreds of digits.
Rational knauf_partition_exact(int n, long two_q);

enum class TransferMode { direct, tree };

// n-fold signed transfer sum at x >= 0:
//   one step maps f to (x+1)^{-2q} [ f(x/(x+1)) + sign * f(1/(x+1)) ].
// direct recurses over the 2^n branch compositions; tree sums over
// stern_brocot_level(n).  sign is +1 or -1.
double transfer_iterate(const std::function<double(double)>& f, double x,
			int n, double q, int sign, TransferMode mode);

// Same n-fold sum with f = 1 in exact rational arithmetic (2q integer).
Rational transfer_iterate_ones_exact(int n, long two_q, const Rational& x,
				     int sign);

struct GrowthEstimate {
	double q = 0.0;
	int n_max = 0;
	double ratio = 0.0;              // Z_{n_max} / Z_{n_max - 1}
	std::vector<double> ratio_seq;   // ratio at n = 1..n_max
	std::vector<double> log_seq;     // (1/n) log Z'_n for n = 1..n_max+1
};

// Ratio estimator for the leading growth rate of the partition sums;
// requires q < 1 (the sums diverge geometrically and the ratio converges,
// unlike the O(1/n) log estimator, which is reported for diagnostics).
GrowthEstimate growth_rate_estimate(double q, int n_max, int cap = kFareyDepthCap);

}  // namespace farey
