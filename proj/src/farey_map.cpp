#include "farey/farey_map.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace farey {

Rational farey_map(const Rational& x) {
	if (x < Rational(0) || x > Rational(1))
		throw std::domain_error("farey_map: argument outside [0,1]");
	if (x <= Rational(1, 2))
		return x / (Rational(1) - x);
	return (Rational(1) - x) / x;
}

std::pair<Rational, Rational> farey_preimages(const Rational& y) {
	if (y < Rational(0))
		throw std::domain_error("farey_preimages: negative argument");
	Rational d = Rational(1) + y;
	return {y / d, Rational(1) / d};
}

std::vector<Integer> farey_shift(const std::vector<Integer>& digits) {
	if (digits.empty())
		throw std::domain_error("farey_shift: empty digit list");
	std::vector<Integer> out = digits;
	out[0] -= 1;
	if (out[0] == 0)
		out.erase(out.begin());
	return out;
}

std::vector<Rational> farey_sequence(int n, int cap) {
	if (n < 1)
		throw std::invalid_argument("farey_sequence: level must be >= 1");
	if (n > cap)
		throw std::invalid_argument("farey_sequence: level exceeds cap");
	std::vector<Rational> f = {Rational(0), Rational(1)};
	for (int level = 2; level <= n; ++level) {
		std::vector<Rational> next;
		next.reserve(2 * f.size() - 1);
		for (size_t i = 0; i + 1 < f.size(); ++i) {
			next.push_back(f[i]);
			next.push_back(Rational(
			    f[i].numerator() + f[i + 1].numerator(),
			    f[i].denominator() + f[i + 1].denominator()));
		}
		next.push_back(f.back());
		f = std::move(next);
	}
	return f;
}

namespace {

struct Mat2 {
	Integer m00, m01, m10, m11;
};

void level_rec(const Mat2& w, int depth, int parity, std::vector<TreeNode>& out) {
	if (depth == 0) {
		TreeNode node;
		node.a = w.m00 + w.m10;
		node.b = w.m01 + w.m11;
		if (parity == 0) {
			node.mu = w.m00;
			node.nu = w.m01;
		} else {
			node.mu = w.m10;
			node.nu = w.m11;
		}
		out.push_back(std::move(node));
		return;
	}
	level_rec(Mat2{w.m00, w.m01, w.m00 + w.m10, w.m01 + w.m11}, depth - 1,
		  parity, out);
	level_rec(Mat2{w.m10, w.m11, w.m00 + w.m10, w.m01 + w.m11}, depth - 1,
		  parity ^ 1, out);
}

}  // namespace

std::vector<TreeNode> stern_brocot_level(int n, int cap) {
	if (n < 1)
		throw std::invalid_argument("stern_brocot_level: level must be >= 1");
	if (n > cap)
		throw std::invalid_argument("stern_brocot_level: level exceeds cap");
	std::vector<TreeNode> nodes;
	nodes.reserve(size_t(1) << (n - 1));
	level_rec(Mat2{1, 0, 0, 1}, n - 1, 0, nodes);
	std::sort(nodes.begin(), nodes.end(), [](const TreeNode& x, const TreeNode& y) {
		return x.value() < y.value();
	});
	return nodes;
}

namespace {

double pow_real(double base, double e) {
	long r = std::lround(e);
	if (e == static_cast<double>(r) && r >= -8 && r <= 8) {
		double v = 1.0;
		for (long i = 0; i < (r < 0 ? -r : r); ++i)
			v *= base;
		return r < 0 ? 1.0 / v : v;
	}
	return std::pow(base, e);
}

// Neighbor-denominator-pair walk over the Stern-Brocot tree: the pair
// (d1, d2) at one level spawns the mediant denominator d1+d2 and the pairs
// (d1, d1+d2), (d1+d2, d2).  Denominators stay below Fib(cap+1) < 2^64.
void knauf_rec(uint64_t d1, uint64_t d2, int level, int n, double e, double& acc) {
	uint64_t m = d1 + d2;
	acc += pow_real(static_cast<double>(m), e);
	if (level < n) {
		knauf_rec(d1, m, level + 1, n, e, acc);
		knauf_rec(m, d2, level + 1, n, e, acc);
	}
}

void knauf_rec_exact(uint64_t d1, uint64_t d2, int level, int n, long two_q,
		     Rational& acc) {
	uint64_t m = d1 + d2;
	Integer mz(static_cast<unsigned long>(m));
	acc += pow(Rational(mz), -two_q);
	if (level < n) {
		knauf_rec_exact(d1, m, level + 1, n, two_q, acc);
		knauf_rec_exact(m, d2, level + 1, n, two_q, acc);
	}
}

// sigma[k] = sum of b^{-2q} over the fractions newly created at level k.
void level_sums_rec(uint64_t d1, uint64_t d2, int level, int n, double e,
		    std::vector<double>& sigma) {
	uint64_t m = d1 + d2;
	sigma[level] += pow_real(static_cast<double>(m), e);
	if (level < n) {
		level_sums_rec(d1, m, level + 1, n, e, sigma);
		level_sums_rec(m, d2, level + 1, n, e, sigma);
	}
}

}  // namespace

double knauf_partition(int n, double q, int cap) {
	if (n < 1)
		throw std::invalid_argument("knauf_partition: level must be >= 1");
	if (n > cap)
		throw std::invalid_argument("knauf_partition: level exceeds cap");
	double acc = 1.0;  // the 1/1 term
	if (n >= 2)
		knauf_rec(1, 1, 2, n, -2.0 * q, acc);
	return 2.0 * acc;
}

Rational knauf_partition_exact(int n, long two_q) {
	if (n < 1)
		throw std::invalid_argument("knauf_partition_exact: level must be >= 1");
	int cap = two_q > 0 ? 16 : kFareyDepthCap;
	if (n > cap)
		throw std::invalid_argument("knauf_partition_exact: level exceeds cap");
	Rational acc(1);
	if (n >= 2)
		knauf_rec_exact(1, 1, 2, n, two_q, acc);
	return Rational(2) * acc;
}

namespace {

double transfer_direct(const std::function<double(double)>& f, double x, int n,
		       double minus2q, int sign) {
	if (n == 0)
		return f(x);
	double w = pow_real(x + 1.0, minus2q);
	double left = transfer_direct(f, x / (x + 1.0), n - 1, minus2q, sign);
	double right = transfer_direct(f, 1.0 / (x + 1.0), n - 1, minus2q, sign);
	return w * (left + sign * right);
}

}  // namespace

double transfer_iterate(const std::function<double(double)>& f, double x,
			int n, double q, int sign, TransferMode mode) {
	if (x < 0.0)
		throw std::domain_error("transfer_iterate: negative argument");
	if (n < 1)
		throw std::invalid_argument("transfer_iterate: need n >= 1");
	if (sign != 1 && sign != -1)
		throw std::invalid_argument("transfer_iterate: sign must be +-1");
	if (mode == TransferMode::direct)
		return transfer_direct(f, x, n, -2.0 * q, sign);
	double sum = 0.0;
	for (const TreeNode& node : stern_brocot_level(n)) {
		double a = node.a.get_d(), b = node.b.get_d();
		double mu = node.mu.get_d(), nu = node.nu.get_d();
		double den = a * x + b;
		double w = pow_real(den, -2.0 * q);
		sum += w * (f((mu * x + nu) / den) +
			    sign * f(((a - mu) * x + (b - nu)) / den));
	}
	return sum;
}

Rational transfer_iterate_ones_exact(int n, long two_q, const Rational& x,
				     int sign) {
	if (x < Rational(0))
		throw std::domain_error("transfer_iterate_ones_exact: negative argument");
	if (n == 0)
		return Rational(1);
	Rational w = pow(x + Rational(1), -two_q);
	Rational d = x + Rational(1);
	Rational left = transfer_iterate_ones_exact(n - 1, two_q, x / d, sign);
	Rational right = transfer_iterate_ones_exact(n - 1, two_q, Rational(1) / d, sign);
	return w * (left + Rational(sign) * right);
}

GrowthEstimate growth_rate_estimate(double q, int n_max, int cap) {
	if (!(q < 1.0))
		throw std::domain_error("growth_rate_estimate: requires q < 1");
	if (n_max < 2)
		throw std::invalid_argument("growth_rate_estimate: need n_max >= 2");
	if (n_max + 1 > cap)
		throw std::invalid_argument("growth_rate_estimate: n_max+1 exceeds cap");
	int top = n_max + 1;
	std::vector<double> sigma(top + 1, 0.0);
	sigma[1] = 1.0;
	level_sums_rec(1, 1, 2, top, -2.0 * q, sigma);
	std::vector<double> z(top + 1, 0.0);  // z[n] = partition value at level n
	double run = 0.0;
	for (int k = 1; k <= top; ++k) {
		run += sigma[k];
		z[k] = 2.0 * run;
	}
	GrowthEstimate est;
	est.q = q;
	est.n_max = n_max;
	est.ratio_seq.resize(n_max + 1, 0.0);
	est.log_seq.resize(top + 1, 0.0);
	for (int k = 1; k <= n_max; ++k)
		est.ratio_seq[k] = z[k + 1] / z[k];
	for (int k = 1; k <= top; ++k)
		est.log_seq[k] = std::log(z[k]) / k;
	est.ratio = est.ratio_seq[n_max];
	return est;
}

}  // namespace farey
