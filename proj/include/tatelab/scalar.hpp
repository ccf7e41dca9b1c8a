/* Exact field arithmetic: rationals (default) or a prime field fast path. */
#ifndef TATELAB_SCALAR_HPP
#define TATELAB_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tatelab {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct MathError : std::runtime_error {
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class FieldMode { Rationals, Prime };

/* Immutable exact field element.  In prime mode the residue and modulus
 * travel with the value; binary operations require matching modes. */
class Scalar {
public:
    Scalar() : prime_(false) {}

    static Scalar rat(long n, long d = 1);
    static Scalar rat(mpq_class q);
    static Scalar fp(long r, long p);

    FieldMode mode() const { return prime_ ? FieldMode::Prime : FieldMode::Rationals; }
    long modulus() const { return p_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inv() const;

    const mpq_class& q() const { return q_; }
    long residue() const { return r_; }
    std::string str() const;

private:
    bool prime_;
    mpq_class q_;
    long r_ = 0;
    long p_ = 0;

    void check_mode(const Scalar& o) const;
};

long mod_pow(long base, long exp, long p);
long mod_inv(long a, long p);
bool is_prime(long p);

/* Field choice plus the distinguished parameter alpha and the homological
 * range the configuration is guaranteed to be valid for. */
struct FieldConfig {
    FieldMode mode = FieldMode::Rationals;
    long p = 0;
    mpq_class alpha_q = 2;
    int range_bound = 16;

    void validate() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_long(long n) const;
    Scalar from_mpq(const mpq_class& q) const;
    Scalar alpha() const;

    /* Coefficient alpha^(1-i) appearing in the differential d_i. */
    Scalar alpha_power(long i) const;

    /* Multiplicative order of alpha mod p (prime mode only). */
    long alpha_order() const;

    std::string describe() const;
};

}  // namespace tatelab

#endif
