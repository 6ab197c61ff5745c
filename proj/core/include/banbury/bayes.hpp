#pragma once
// Odds, factors and log-evidence units.
//
// A factor multiplies odds (posterior = prior x factor).  Evidence is
// accumulated additively in decibans, 10*log10(factor), or in integer
// half-decibans, round(20*log10(factor)), which is the unit every lookup
// table in this library is tabulated in.

#include <compare>
#include <span>

#include <boost/multiprecision/cpp_int.hpp>

#include "banbury/alphabet.hpp"

namespace banbury {

using Rational = boost::multiprecision::cpp_rational;

// Odds in favour of a theory, stored as the ratio P/(1-P).  Never negative,
// never infinite.
class Odds {
public:
    constexpr Odds() = default;
    explicit Odds(double ratio);

    // "a:b on" -> a/b.
    static Odds on(double a, double b);
    // "a:b against" -> b/a.
    static Odds against(double a, double b);

    double ratio() const { return ratio_; }
    double probability() const { return ratio_ / (1.0 + ratio_); }

    auto operator<=>(const Odds&) const = default;

private:
    double ratio_ = 1.0;
};

struct Decibans {
    double value = 0.0;

    double factor() const;

    Decibans& operator+=(Decibans o) { value += o.value; return *this; }
    friend Decibans operator+(Decibans a, Decibans b) { return Decibans{a.value + b.value}; }
    friend Decibans operator-(Decibans a, Decibans b) { return Decibans{a.value - b.value}; }
    friend Decibans operator*(double k, Decibans d) { return Decibans{k * d.value}; }
    auto operator<=>(const Decibans&) const = default;
};

struct HalfDecibans {
    int value = 0;

    double factor() const;
    Decibans decibans() const { return Decibans{value / 2.0}; }

    HalfDecibans& operator+=(HalfDecibans o) { value += o.value; return *this; }
    friend HalfDecibans operator+(HalfDecibans a, HalfDecibans b) { return HalfDecibans{a.value + b.value}; }
    friend HalfDecibans operator-(HalfDecibans a, HalfDecibans b) { return HalfDecibans{a.value - b.value}; }
    auto operator<=>(const HalfDecibans&) const = default;
};

// Nearest integer, ties away from zero.
int round_half_away(double x);

Odds odds_from_probability(double p);
Rational odds_from_probability(const Rational& p);
double probability_from_odds(Odds odds);

Odds apply_factor(Odds prior, double factor);
Odds apply_evidence(Odds prior, Decibans evidence);
Odds apply_evidence(Odds prior, HalfDecibans evidence);

Decibans decibans_from_factor(double factor);
// 20*log10(factor), unrounded.
double half_deciban_value(double factor);
HalfDecibans half_decibans_from_factor(double factor);

// prior x product of factors.  An empty list returns the prior.
Odds combine_independent(std::span<const double> factors, Odds prior);
Rational combine_independent(std::span<const Rational> factors, const Rational& prior);

// Sum of per-factor decibans.
Decibans total_decibans(std::span<const double> factors);

}  // namespace banbury
