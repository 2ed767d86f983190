#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "lmsa/errors.hpp"
#include "lmsa/schedules.hpp"

using namespace lmsa;

TEST_CASE("stepsize decays multiplicatively in blocks") {
    StepSchedule s;  // 0.05 / 1000 / 0.999
    CHECK(step_at(s, 0) == 0.05);
    CHECK(step_at(s, 999) == 0.05);
    CHECK(step_at(s, 1000) == doctest::Approx(0.04995).epsilon(1e-15));
    CHECK(step_at(s, 2000) == doctest::Approx(0.04990005).epsilon(1e-15));
    CHECK(step_at(s, 1000000) == doctest::Approx(0.05 * std::pow(0.999, 1000)).epsilon(1e-15));

    CHECK_THROWS_AS(step_at(StepSchedule{-0.1, 1000, 0.999}, 0), config_error);
    CHECK_THROWS_AS(step_at(StepSchedule{0.05, 0, 0.999}, 0), config_error);
    CHECK_THROWS_AS(step_at(StepSchedule{0.05, 1000, 1.5}, 0), config_error);
}

TEST_CASE("cooling: fixed energy over log time") {
    CoolingSchedule c = CoolingSchedule::fixed(2.0);
    CHECK(epsilon_at(c, 0.05) == doctest::Approx(2.7861369891780252).epsilon(1e-15));
    CHECK(epsilon_at(c, std::exp(2.0) - 2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(epsilon_at(CoolingSchedule::fixed(0.5), 0.0) ==
          doctest::Approx(0.72134752044448169).epsilon(1e-15));

    // theta + offset must stay above 1 or the denominator dies.
    CHECK_THROWS_AS(epsilon_at(c, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(epsilon_at(CoolingSchedule::fixed(1.0, 0.0), 0.5), std::invalid_argument);
}

TEST_CASE("cooling: adaptive energy uses the per-call override") {
    CoolingSchedule c = CoolingSchedule::adaptive(0.5, 10);
    CHECK(epsilon_at(c, 0.0, 1.5) == doctest::Approx(1.5 / std::log(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(epsilon_at(c, 0.0), std::invalid_argument);       // override required
    CHECK_THROWS_AS(epsilon_at(c, 0.0, -1.0), std::invalid_argument); // and positive
}

TEST_CASE("cooling parse round-trip") {
    CoolingSchedule c = CoolingSchedule::parse("fixed:2");
    CHECK(c.E == 2.0);
    CHECK(c.offset == 2.0);
    CHECK(CoolingSchedule::parse("fixed:1.5:3").offset == 3.0);
    CoolingSchedule a = CoolingSchedule::parse("adaptive:0.5:10");
    CHECK(a.kind == CoolingSchedule::Kind::adaptive_energy);
    CHECK(a.delta2 == 0.5);
    CHECK(a.n == 10);
    CHECK(CoolingSchedule::parse(a.to_string()).n == 10);
    CHECK_THROWS_AS(CoolingSchedule::parse("fixed:-1"), config_error);
    CHECK_THROWS_AS(CoolingSchedule::parse("adaptive:0.5"), config_error);
    CHECK_THROWS_AS(CoolingSchedule::parse("warm"), config_error);
}

TEST_CASE("clipping level rules") {
    AdaptiveC ap = AdaptiveC::appendix();
    CHECK(c_next(ap, 3.0, 0.0) == 4.0);
    CHECK(c_next(ap, 3.0, 9.0) == doctest::Approx(3.1).epsilon(1e-15));
    CHECK(c_next(AdaptiveC::fixed(-1.5), 123.0, 7.0) == -1.5);

    CHECK(AdaptiveC::parse("appendix").kind == AdaptiveC::Kind::appendix);
    CHECK(AdaptiveC::parse("fixed:-1.5").c == -1.5);
    AdaptiveC mo = AdaptiveC::parse("mollified:10:0.1");
    CHECK(mo.n == 10);
    CHECK(mo.delta1 == 0.1);
    CHECK(AdaptiveC::parse(mo.to_string()).n == 10);
    CHECK_THROWS_AS(AdaptiveC::parse("mollified:0:0.1"), config_error);
    CHECK_THROWS_AS(AdaptiveC::parse("banana"), config_error);

    // The appendix rule always sits strictly above the running minimum.
    for (double th : {0.0, 0.5, 3.0, 100.0}) CHECK(c_next(ap, -2.0, th) > -2.0);
}

TEST_CASE("running-minimum history records only strict improvements") {
    RunMinHistory h;
    CHECK(h.empty());
    CHECK_THROWS_AS(h.current(), std::invalid_argument);
    h.record(0.1, 5.0);
    h.record(0.2, 5.0);   // no improvement: dropped
    h.record(0.3, 7.0);   // worse: dropped
    h.record(0.4, 2.0);
    REQUIRE(h.times.size() == 2);
    CHECK(h.mins[0] == 5.0);
    CHECK(h.mins[1] == 2.0);
    CHECK(h.current() == 2.0);

    // Right-continuous lookup with constant extension on both ends.
    CHECK(h.value_at(0.05) == 5.0);
    CHECK(h.value_at(0.1) == 5.0);
    CHECK(h.value_at(0.39) == 5.0);
    CHECK(h.value_at(0.4) == 2.0);
    CHECK(h.value_at(100.0) == 2.0);

    CHECK_THROWS_AS(h.record(0.4, 1.0), std::invalid_argument);  // time must increase
}

TEST_CASE("mollifier: bump shape, support, unit mass") {
    CHECK(mollifier_phi(1.5) == 0.0);
    CHECK(mollifier_phi(-1.0) == 0.0);
    CHECK(mollifier_phi(0.0) == doctest::Approx(0.82856883986910523).epsilon(1e-12));
    CHECK(mollifier_phi(0.5) == doctest::Approx(0.59369551673201404).epsilon(1e-12));
    CHECK(mollifier_phi(0.5) == mollifier_phi(-0.5));

    // Independent trapezoid integral at step 1e-5.
    const long n = 200000;
    const double h = 2.0 / n;
    double s = 0.0;
    for (long i = 1; i < n; ++i) s += mollifier_phi(-1.0 + i * h);
    s *= h;  // endpoint values are zero
    CHECK(s == doctest::Approx(1.0).epsilon(1e-6));
}

namespace {

// Midpoint-rule oracle for the smoothed lagged running minimum, with its own
// step-function lookup.
double conv_oracle(const std::vector<double>& times, const std::vector<double>& mins, int n,
                   int lag, double t) {
    auto step_val = [&](double s) {
        double v = mins.front();
        for (std::size_t i = 0; i < times.size(); ++i)
            if (times[i] <= s) v = mins[i];
        return v;
    };
    const long N = 100000;
    const double lo = t - 1.0 / n, hi = t + 1.0 / n;
    const double h = (hi - lo) / N;
    double s = 0.0;
    for (long i = 0; i < N; ++i) {
        double u = lo + (i + 0.5) * h;
        double x = n * (t - u);
        double phi = (x > -1.0 && x < 1.0) ? std::exp(1.0 / (x * x - 1.0)) / 0.44399381616807944 : 0.0;
        s += step_val(std::max(u - static_cast<double>(lag) / n, 0.0)) * n * phi * h;
    }
    return s;
}

}  // namespace

TEST_CASE("smoothed running minimum against a Riemann oracle") {
    RunMinHistory h;
    h.record(0.01, 5.0);
    h.record(1.0, 2.0);

    // Jump exactly at the right edge of the kernel window: the whole mass sees
    // the older minimum.
    CHECK(mollified_runmin(h, 10, 1, 1.0) == doctest::Approx(5.0).epsilon(1e-12));
    // Straddling positions agree with the oracle and sit strictly inside (2,5).
    for (double t : {1.05, 1.1, 1.15}) {
        double v = mollified_runmin(h, 10, 1, t);
        CHECK(v > 2.0);
        CHECK(v < 5.0);
        CHECK(v == doctest::Approx(conv_oracle(h.times, h.mins, 10, 1, t)).epsilon(1e-6));
    }
    CHECK(mollified_runmin(h, 10, 1, 1.05) == doctest::Approx(4.6310981502206845).epsilon(1e-9));
    CHECK(mollified_runmin(h, 10, 1, 1.1) == doctest::Approx(3.5).epsilon(1e-9));
    // The lag-3 window sees the same picture two steps later.
    CHECK(mollified_runmin(h, 10, 3, 1.25) ==
          doctest::Approx(mollified_runmin(h, 10, 1, 1.05)).epsilon(1e-12));

    // Constant history: kernel mass 1 reproduces the constant.
    RunMinHistory hc;
    hc.record(0.5, 3.25);
    for (double t : {0.0, 0.3, 2.0, 50.0})
        CHECK(mollified_runmin(hc, 7, 1, t) == doctest::Approx(3.25).epsilon(1e-12));

    RunMinHistory he;
    CHECK_THROWS_AS(mollified_runmin(he, 10, 1, 1.0), std::invalid_argument);
}

TEST_CASE("smoothed minimum stays inside the lagged sandwich") {
    RunMinHistory h;
    h.record(0.05, 4.0);
    h.record(0.4, 2.5);
    h.record(0.9, 1.0);
    h.record(1.7, 0.25);
    const int n = 8;
    for (int i = 0; i <= 60; ++i) {
        double t = 0.05 * i;
        double v = mollified_runmin(h, n, 1, t);
        double lower = h.value_at(t);
        double upper = h.value_at(std::max(t - 2.0 / n, 0.0));
        CHECK(v >= lower - 1e-12);
        CHECK(v <= upper + 1e-12);
    }
}

TEST_CASE("mollified clipping level via the history overload") {
    RunMinHistory h;
    h.record(0.01, 5.0);
    h.record(1.0, 2.0);
    AdaptiveC mo = AdaptiveC::mollified(10, 0.0);
    CHECK(c_next(mo, h, 1.05) == doctest::Approx(mollified_runmin(h, 10, 1, 1.05)).epsilon(1e-15));
    // delta1 is metadata for reporting; it is not folded into the level.
    AdaptiveC mo2 = AdaptiveC::mollified(10, 0.7);
    CHECK(c_next(mo2, h, 1.05) == c_next(mo, h, 1.05));

    CHECK(c_next(AdaptiveC::appendix(), h, 9.0) == doctest::Approx(2.1).epsilon(1e-15));
    CHECK_THROWS_AS(c_next(AdaptiveC::mollified(10, 0.0), 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("adaptive energy level") {
    RunMinHistory hc;
    hc.record(0.1, -1.0);
    // Constant history at u_min: the level is exactly delta2.
    CHECK(energy_level_at(hc, 10, 0.75, -1.0, 3.0) == doctest::Approx(0.75).epsilon(1e-12));
    // Constant history one above u_min, delta2 = 0.5 -> 1.5.
    RunMinHistory h1;
    h1.record(0.1, 0.0);
    CHECK(energy_level_at(h1, 10, 0.5, -1.0, 3.0) == doctest::Approx(1.5).epsilon(1e-12));

    // Step history: level = smoothed lag-3 minimum - u_min + delta2.
    RunMinHistory h;
    h.record(0.01, 5.0);
    h.record(1.0, 2.0);
    CHECK(energy_level_at(h, 10, 0.5, 0.0, 1.25) ==
          doctest::Approx(mollified_runmin(h, 10, 3, 1.25) + 0.5).epsilon(1e-12));

    // And it dominates the lagged running minimum gap.
    for (int i = 0; i <= 40; ++i) {
        double t = 0.1 * i;
        double e = energy_level_at(h, 10, 0.5, 0.0, t);
        CHECK(e >= h.value_at(std::max(t - 0.2, 0.0)) - 0.0 + 0.5 - 1e-12);
    }
    CHECK_THROWS_AS(energy_level_at(h, 10, -0.1, 0.0, 1.0), std::invalid_argument);
}
