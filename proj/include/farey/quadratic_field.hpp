#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "farey/rational.hpp"

namespace farey {

// Element a + b*sqrt(d) of a real quadratic field.  d is carried per value;
// it is reduced to its square-free core on construction so that elements
// built from different discriminant expressions still compare.  A value with
// b = 0 stores d = 0 and mixes freely with any other d.
class QuadExt {
public:
	QuadExt() : a_(0), b_(0), d_(0) {}
	QuadExt(const Rational& a) : a_(a), b_(0), d_(0) {}
	QuadExt(long a) : a_(a), b_(0), d_(0) {}
	QuadExt(const Rational& a, const Rational& b, const Integer& d)
	    : a_(a), b_(b), d_(d) {
		if (d < 0)
			throw std::domain_error("QuadExt: negative radicand");
		normalize();
	}

	const Rational& rational_part() const { return a_; }
	const Rational& radical_part() const { return b_; }
	const Integer& radicand() const { return d_; }
	bool is_rational() const { return b_ == Rational(0); }
	bool is_zero() const { return a_ == Rational(0) && b_ == Rational(0); }

	QuadExt conjugate() const { return QuadExt(a_, -b_, d_, NoReduce{}); }
	// field norm a^2 - d b^2; rational, zero only for the zero element
	Rational field_norm() const {
		return a_ * a_ - Rational(d_) * b_ * b_;
	}

	QuadExt operator-() const { return QuadExt(-a_, -b_, d_, NoReduce{}); }

	friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
		Integer d = merge_d(x, y);
		return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d, NoReduce{});
	}
	friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
		return x + (-y);
	}
	friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
		Integer d = merge_d(x, y);
		return QuadExt(x.a_ * y.a_ + Rational(d) * x.b_ * y.b_,
			       x.a_ * y.b_ + x.b_ * y.a_, d, NoReduce{});
	}
	friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
		if (y.is_zero())
			throw std::domain_error("QuadExt: division by zero");
		QuadExt num = x * y.conjugate();
		Rational n = y.field_norm();
		return QuadExt(num.a_ / n, num.b_ / n, num.d_, NoReduce{});
	}

	QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
	QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
	QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
	QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

	friend bool operator==(const QuadExt& x, const QuadExt& y) {
		return (x - y).is_zero();
	}
	friend bool operator!=(const QuadExt& x, const QuadExt& y) {
		return !(x == y);
	}

	double to_double() const {
		double r = a_.to_double();
		if (b_ != Rational(0))
			r += b_.to_double() * std::sqrt(d_.get_d());
		return r;
	}

	std::string str() const {
		if (is_rational()) return a_.str();
		std::string s;
		if (a_ != Rational(0)) s = a_.str();
		if (b_.sign() > 0 && !s.empty()) s += "+";
		if (b_ == Rational(-1))
			s += "-";
		else if (b_ != Rational(1))
			s += b_.str() + "*";
		s += "sqrt(" + d_.get_str() + ")";
		return s;
	}

private:
	struct NoReduce {};
	QuadExt(const Rational& a, const Rational& b, const Integer& d, NoReduce)
	    : a_(a), b_(b), d_(d) {
		if (b_ == Rational(0)) d_ = 0;
	}

	static Integer merge_d(const QuadExt& x, const QuadExt& y) {
		if (x.d_ == 0) return y.d_;
		if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
		throw std::domain_error("QuadExt: mixed radicands " +
					x.d_.get_str() + " and " + y.d_.get_str());
	}

	// pull square factors out of d into b, so sqrt(12) becomes 2*sqrt(3),
	// and fold perfect squares into the rational part entirely
	void normalize() {
		if (b_ == Rational(0) || d_ == 0) {  // the radical term is 0
			b_ = Rational(0);
			d_ = 0;
			return;
		}
		Integer square_part(1);
		Integer rest = d_;
		for (Integer f(2); f * f <= rest;) {
			if (rest % (f * f) == 0) {
				square_part *= f;
				rest /= f * f;
			} else {
				f += 1;
			}
		}
		b_ *= Rational(square_part);
		d_ = rest;
		if (d_ == 1) {
			a_ += b_;
			b_ = Rational(0);
			d_ = 0;
		}
	}

	Rational a_, b_;
	Integer d_;
};

inline QuadExt sqrt_ext(const Integer& d) {
	return QuadExt(Rational(0), Rational(1), d);
}

// Basis of the right kernel {v : Mv = 0} by fraction-free-ish Gaussian
// elimination over an exact field (Rational or QuadExt).  Rows of the result
// are the basis vectors; empty result means the kernel is trivial.
template <typename Field>
std::vector<std::vector<Field>> kernel_basis(std::vector<std::vector<Field>> m) {
	if (m.empty()) return {};
	size_t rows = m.size(), cols = m[0].size();
	std::vector<long> pivot_col_of_row(rows, -1);
	std::vector<bool> col_is_pivot(cols, false);
	size_t r = 0;
	for (size_t c = 0; c < cols && r < rows; ++c) {
		size_t sel = r;
		while (sel < rows && m[sel][c] == Field(0)) ++sel;
		if (sel == rows) continue;
		std::swap(m[sel], m[r]);
		Field inv_pivot = Field(1) / m[r][c];
		for (size_t j = c; j < cols; ++j) m[r][j] *= inv_pivot;
		for (size_t i = 0; i < rows; ++i) {
			if (i == r || m[i][c] == Field(0)) continue;
			Field factor = m[i][c];
			for (size_t j = c; j < cols; ++j)
				m[i][j] -= factor * m[r][j];
		}
		pivot_col_of_row[r] = static_cast<long>(c);
		col_is_pivot[c] = true;
		++r;
	}
	std::vector<std::vector<Field>> basis;
	for (size_t c = 0; c < cols; ++c) {
		if (col_is_pivot[c]) continue;
		std::vector<Field> v(cols, Field(0));
		v[c] = Field(1);
		for (size_t i = 0; i < r; ++i) {
			long pc = pivot_col_of_row[i];
			v[pc] = -m[i][c];
		}
		basis.push_back(std::move(v));
	}
	return basis;
}

}  // namespace farey
