#include "farey/rational.hpp"

namespace farey {

Integer factorial(unsigned long n) {
	Integer r;
	mpz_fac_ui(r.get_mpz_t(), n);
	return r;
}

Integer binomial(const Integer& n, unsigned long k) {
	if (n < 0)
		throw std::domain_error("binomial: negative upper index");
	Integer r;
	mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
	return r;
}

Rational Rational::from_string(const std::string& s) {
	mpq_class v;
	if (v.set_str(s, 10) != 0)
		throw std::invalid_argument("Rational: cannot parse '" + s + "'");
	if (v.get_den() == 0)
		throw std::domain_error("Rational: zero denominator in '" + s + "'");
	v.canonicalize();
	return Rational(v);
}

std::string Rational::str() const {
	return v_.get_str();
}

std::string Rational::frac_str() const {
	return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational abs(const Rational& x) {
	return x.sign() < 0 ? -x : x;
}

Rational pow(const Rational& x, long e) {
	if (e == 0)
		return Rational(1);
	if (x == Rational(0)) {
		if (e < 0)
			throw std::domain_error("pow: zero base, negative exponent");
		return Rational(0);
	}
	unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
	Integer num, den;
	mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), k);
	mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), k);
	return e > 0 ? Rational(num, den) : Rational(den, num);
}

Rational binomial_rational(const Rational& top, unsigned long k) {
	Rational r(1);
	for (unsigned long j = 0; j < k; ++j)
		r *= (top - Rational(Integer(j))) / Rational(Integer(j + 1));
	return r;
}

std::vector<Integer> to_continued_fraction(const Rational& x) {
	if (!(x > Rational(0) && x < Rational(1)))
		throw std::domain_error("to_continued_fraction: argument outside (0,1)");
	/*
	 * x = a/b with 0 < a < b.  The digits are the Euclidean quotients of
	 * (b, a): 1/x = b/a = a_1 + r/a with r = b mod a, then recurse on a/r.
	 * Remainders strictly decrease, so the quotient before the algorithm
	 * stops is >= 2, which is exactly the canonical-form condition.
	 */
	Integer r0 = x.denominator(), r1 = x.numerator();
	std::vector<Integer> digits;
	while (r1 != 0) {
		Integer q, r;
		mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
		digits.push_back(q);
		r0 = r1;
		r1 = r;
	}
	return digits;
}

Rational from_continued_fraction(const std::vector<Integer>& digits) {
	if (digits.empty())
		throw std::domain_error("from_continued_fraction: empty digit list");
	for (const Integer& d : digits)
		if (d < 1)
			throw std::domain_error("from_continued_fraction: digit < 1");
	Rational v(0);
	for (auto it = digits.rbegin(); it != digits.rend(); ++it)
		v = Rational(1) / (Rational(*it) + v);
	return v;
}

}  // namespace farey
