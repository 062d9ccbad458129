#pragma once

// Exact rational arithmetic and continued fractions on top of GMP.
// Rational keeps the canonical form invariant: denominator > 0 and
// gcd(numerator, denominator) = 1, so comparisons and serialization
// ("a/b" in lowest terms) never see an unreduced fraction.

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace farey {

using Integer = mpz_class;

Integer factorial(unsigned long n);

// C(n, k) for integer n >= 0; zero when k > n.
Integer binomial(const Integer& n, unsigned long k);

class Rational {
      public:
	Rational() : v_(0) {}
	Rational(int n) : v_(n) {}
	Rational(long n) : v_(static_cast<signed long>(n)) {}
	Rational(const Integer& n) : v_(n) {}
	Rational(const Integer& num, const Integer& den) : v_(num, den) {
		if (den == 0)
			throw std::domain_error("Rational: zero denominator");
		v_.canonicalize();
	}
	Rational(long num, long den)
	    : Rational(Integer(static_cast<signed long>(num)),
		       Integer(static_cast<signed long>(den))) {}

	// Accepts "a", "a/b", optional leading '-'.
	static Rational from_string(const std::string& s);

	Integer numerator() const { return v_.get_num(); }
	Integer denominator() const { return v_.get_den(); }
	double to_double() const { return v_.get_d(); }
	bool is_integer() const { return v_.get_den() == 1; }
	int sign() const { return sgn(v_); }

	// "a" when the denominator is 1, otherwise "a/b".
	std::string str() const;
	// Always "a/b", as in printed fraction lists ("0/1", "1/1").
	std::string frac_str() const;

	Rational operator-() const { return Rational(mpq_class(-v_)); }
	Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
	Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
	Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
	Rational& operator/=(const Rational& o) {
		if (o.v_ == 0)
			throw std::domain_error("Rational: division by zero");
		v_ /= o.v_;
		return *this;
	}

	friend Rational operator+(Rational a, const Rational& b) { return a += b; }
	friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

	friend bool operator==(const Rational& a, const Rational& b) {
		return a.v_ == b.v_;
	}
	friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
		int c = cmp(a.v_, b.v_);
		return c < 0 ? std::strong_ordering::less
		     : c > 0 ? std::strong_ordering::greater
			     : std::strong_ordering::equal;
	}

	explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
	const mpq_class& raw() const { return v_; }

      private:
	mpq_class v_;
};

Rational abs(const Rational& x);

// x^e with integer e; e < 0 requires x != 0.
Rational pow(const Rational& x, long e);

// C(top, k) = top (top-1) ... (top-k+1) / k! for rational top.
Rational binomial_rational(const Rational& top, unsigned long k);

// Continued fraction digits of x in (0, 1): x = 1/(a_1 + 1/(a_2 + ...)).
// The Euclidean algorithm yields the canonical form (final digit >= 2).
std::vector<Integer> to_continued_fraction(const Rational& x);

// Inverse of the above; digits must be >= 1 and nonempty. The value lands
// in (0, 1] ([1] maps to 1, which to_continued_fraction does not produce).
Rational from_continued_fraction(const std::vector<Integer>& digits);

}  // namespace farey
