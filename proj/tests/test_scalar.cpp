#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tatelab/scalar.hpp"

using namespace tatelab;

namespace {

FieldConfig rat_cfg(long num = 2, long den = 1) {
    FieldConfig cfg;
    cfg.alpha_q = mpq_class(num, den);
    cfg.alpha_q.canonicalize();
    return cfg;
}

FieldConfig fp_cfg(long p, long alpha = 2) {
    FieldConfig cfg;
    cfg.mode = FieldMode::Prime;
    cfg.p = p;
    cfg.alpha_q = alpha;
    return cfg;
}

}  // namespace

TEST_CASE("rational arithmetic") {
    Scalar a = Scalar::rat(2, 3), b = Scalar::rat(-1, 6);
    CHECK((a + b) == Scalar::rat(1, 2));
    CHECK((a * b) == Scalar::rat(-1, 9));
    CHECK((a / b) == Scalar::rat(-4));
    CHECK(a.inv() == Scalar::rat(3, 2));
    CHECK((a - a).is_zero());
    CHECK((a * a.inv()).is_one());
    CHECK((-b) == Scalar::rat(1, 6));
}

TEST_CASE("prime arithmetic") {
    Scalar a = Scalar::fp(5, 7), b = Scalar::fp(4, 7);
    CHECK((a + b) == Scalar::fp(2, 7));
    CHECK((a * b) == Scalar::fp(6, 7));
    CHECK(a.inv() == Scalar::fp(3, 7));
    CHECK((a / b) == Scalar::fp(3, 7));
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(Scalar::fp(0, 7).inv(), MathError);
}

TEST_CASE("mixing modes is rejected") {
    Scalar a = Scalar::rat(1), b = Scalar::fp(1, 7);
    CHECK_THROWS_AS(a + b, MathError);
    CHECK_THROWS_AS(a * b, MathError);
}

TEST_CASE("modular helpers") {
    CHECK(mod_pow(3, 4, 7) == 4);
    CHECK(mod_inv(3, 7) == 5);
    CHECK(is_prime(2));
    CHECK(is_prime(32003));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(32001));
}

TEST_CASE("alpha powers: coefficient of the periodic differential") {
    FieldConfig cfg = rat_cfg();
    // alpha^(1-i): i=1 -> 1, i=0 -> alpha, i=-2 -> alpha^3
    CHECK(cfg.alpha_power(1).is_one());
    CHECK(cfg.alpha_power(0) == Scalar::rat(2));
    CHECK(cfg.alpha_power(-2) == Scalar::rat(8));
    CHECK(cfg.alpha_power(2) == Scalar::rat(1, 2));
    for (int i = -6; i <= 6; ++i)
        CHECK((cfg.alpha_power(i) * cfg.alpha_power(2 - i)).is_one());
}

TEST_CASE("alpha powers in prime mode") {
    FieldConfig cfg = fp_cfg(32003, 2);
    cfg.validate();
    CHECK(cfg.alpha_power(1).is_one());
    CHECK(cfg.alpha_power(0) == Scalar::fp(2, 32003));
    CHECK(cfg.alpha_power(-2) == Scalar::fp(8, 32003));
    for (int i = -6; i <= 6; ++i)
        CHECK((cfg.alpha_power(i) * cfg.alpha_power(2 - i)).is_one());
}

TEST_CASE("configuration validation") {
    CHECK_NOTHROW(rat_cfg().validate());
    CHECK_THROWS_AS(rat_cfg(0).validate(), ConfigError);   // alpha = 0
    CHECK_THROWS_AS(rat_cfg(1).validate(), ConfigError);   // alpha = 1
    CHECK_THROWS_AS(rat_cfg(-1).validate(), ConfigError);  // alpha^2 = 1
    CHECK_NOTHROW(rat_cfg(3, 7).validate());

    CHECK_THROWS_AS(fp_cfg(32001).validate(), ConfigError);  // composite modulus
    CHECK_THROWS_AS(fp_cfg(2).validate(), ConfigError);      // alpha degenerates
    CHECK_THROWS_AS(fp_cfg(7, 1).validate(), ConfigError);
    // order of 2 mod 7 is 3, far below the validated homological range
    CHECK_THROWS_AS(fp_cfg(7, 2).validate(), ConfigError);
    CHECK_NOTHROW(fp_cfg(32003, 2).validate());
}

TEST_CASE("field axioms hold on a sampled grid") {
    FieldConfig cfg = fp_cfg(101, 3);
    auto probe = [&](auto mk) {
        for (long x = -4; x <= 4; ++x)
            for (long y = -4; y <= 4; ++y)
                for (long z = -4; z <= 4; ++z) {
                    Scalar a = mk(x), b = mk(y), c = mk(z);
                    CHECK(a + b == b + a);
                    CHECK(a * b == b * a);
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
    };
    probe([](long v) { return Scalar::rat(v, 3); });
    probe([&](long v) { return Scalar::fp(((v % 101) + 101) % 101, 101); });
}

TEST_CASE("describe names the field") {
    CHECK(rat_cfg().describe().find("Q") != std::string::npos);
    CHECK(fp_cfg(32003).describe().find("32003") != std::string::npos);
}
