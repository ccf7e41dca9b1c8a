#include "tatelab/scalar.hpp"

#include <sstream>

namespace tatelab {

Scalar Scalar::rat(long n, long d) {
    if (d == 0) throw MathError("rational with zero denominator");
    Scalar s;
    s.q_ = mpq_class(n, d);
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::rat(mpq_class q) {
    Scalar s;
    q.canonicalize();
    s.q_ = std::move(q);
    return s;
}

Scalar Scalar::fp(long r, long p) {
    if (p <= 1) throw ConfigError("prime field modulus must exceed 1");
    Scalar s;
    s.prime_ = true;
    s.p_ = p;
    s.r_ = ((r % p) + p) % p;
    return s;
}

bool Scalar::is_zero() const { return prime_ ? r_ == 0 : q_ == 0; }
bool Scalar::is_one() const { return prime_ ? r_ == 1 : q_ == 1; }

void Scalar::check_mode(const Scalar& o) const {
    if (prime_ != o.prime_ || (prime_ && p_ != o.p_))
        throw MathError("scalar arithmetic across different fields");
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (prime_)
        s.r_ = (p_ - r_) % p_;
    else
        s.q_ = -q_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_mode(o);
    if (prime_)
        r_ = (r_ + o.r_) % p_;
    else
        q_ += o.q_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_mode(o);
    if (prime_)
        r_ = (r_ - o.r_ % p_ + p_) % p_;
    else
        q_ -= o.q_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_mode(o);
    if (prime_)
        r_ = static_cast<long>((static_cast<__int128>(r_) * o.r_) % p_);
    else
        q_ *= o.q_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_mode(o);
    if (o.is_zero()) throw MathError("division by zero");
    if (prime_)
        r_ = static_cast<long>((static_cast<__int128>(r_) * mod_inv(o.r_, p_)) % p_);
    else
        q_ /= o.q_;
    return *this;
}

bool Scalar::operator==(const Scalar& o) const {
    check_mode(o);
    return prime_ ? r_ == o.r_ : q_ == o.q_;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw MathError("inverse of zero");
    Scalar s(*this);
    if (prime_)
        s.r_ = mod_inv(r_, p_);
    else
        s.q_ = 1 / q_;
    return s;
}

std::string Scalar::str() const {
    if (prime_) return std::to_string(r_);
    std::ostringstream os;
    os << q_;
    return os.str();
}

long mod_pow(long base, long exp, long p) {
    base = ((base % p) + p) % p;
    long acc = 1;
    while (exp > 0) {
        if (exp & 1) acc = static_cast<long>((static_cast<__int128>(acc) * base) % p);
        base = static_cast<long>((static_cast<__int128>(base) * base) % p);
        exp >>= 1;
    }
    return acc;
}

long mod_inv(long a, long p) {
    a = ((a % p) + p) % p;
    if (a == 0) throw MathError("inverse of zero mod p");
    long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        long q = r / new_r;
        long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw MathError("modulus is not prime");
    return ((t % p) + p) % p;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void FieldConfig::validate() const {
    if (alpha_q == 0 || alpha_q == 1)
        throw ConfigError("alpha must differ from 0 and 1");
    if (mode == FieldMode::Rationals) {
        if (alpha_q == -1)
            throw ConfigError("alpha = -1 has finite multiplicative order");
        return;
    }
    if (!is_prime(p)) throw ConfigError("field modulus " + std::to_string(p) + " is not prime");
    Scalar a = alpha();
    if (a.is_zero()) throw ConfigError("alpha is zero mod p");
    long order = alpha_order();
    long needed = 2L * range_bound + 4;
    if (order <= needed)
        throw ConfigError("multiplicative order of alpha mod p is " + std::to_string(order) +
                          ", need more than " + std::to_string(needed) +
                          " for range bound " + std::to_string(range_bound));
}

Scalar FieldConfig::zero() const { return from_long(0); }
Scalar FieldConfig::one() const { return from_long(1); }

Scalar FieldConfig::from_long(long n) const {
    return mode == FieldMode::Prime ? Scalar::fp(n % p, p) : Scalar::rat(n);
}

Scalar FieldConfig::from_mpq(const mpq_class& q) const {
    if (mode == FieldMode::Rationals) return Scalar::rat(q);
    mpz_class num = q.get_num(), den = q.get_den();
    long n = mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(p));
    long d = mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p));
    if (d == 0) throw ConfigError("rational literal has denominator divisible by p");
    return Scalar::fp(static_cast<long>((static_cast<__int128>(n) * mod_inv(d, p)) % p), p);
}

Scalar FieldConfig::alpha() const { return from_mpq(alpha_q); }

Scalar FieldConfig::alpha_power(long i) const {
    long e = 1 - i;
    if (mode == FieldMode::Prime) {
        if (e > range_bound + 2 || e < -(range_bound + 2))
            throw ConfigError("alpha exponent " + std::to_string(e) +
                              " outside the validated range of this prime-field configuration");
        long a = alpha().residue();
        long r = mod_pow(a, e >= 0 ? e : -e, p);
        return e >= 0 ? Scalar::fp(r, p) : Scalar::fp(mod_inv(r, p), p);
    }
    Scalar a = alpha();
    Scalar acc = one();
    long n = e >= 0 ? e : -e;
    for (long j = 0; j < n; ++j) acc *= a;
    return e >= 0 ? acc : acc.inv();
}

long FieldConfig::alpha_order() const {
    if (mode != FieldMode::Prime) throw ConfigError("alpha_order is defined in prime mode only");
    long a = alpha().residue();
    if (a == 0) throw ConfigError("alpha is zero mod p");
    long acc = a, order = 1;
    while (acc != 1) {
        acc = static_cast<long>((static_cast<__int128>(acc) * a) % p);
        ++order;
    }
    return order;
}

std::string FieldConfig::describe() const {
    std::ostringstream os;
    if (mode == FieldMode::Rationals)
        os << "Q";
    else
        os << "F" << p;
    os << ", alpha = " << alpha_q;
    return os.str();
}

}  // namespace tatelab
