#include "banbury/bayes.hpp"

#include <cmath>
#include <string>

namespace banbury {

namespace {

void require_factor(double f) {
    if (!(f >= 0.0) || std::isinf(f)) {
        throw DomainError("factor must be finite and non-negative, got " + std::to_string(f));
    }
}

void require_positive(double f) {
    if (!(f > 0.0) || std::isinf(f)) {
        throw DomainError("factor must be finite and positive, got " + std::to_string(f));
    }
}

}  // namespace

Odds::Odds(double ratio) : ratio_(ratio) {
    if (!(ratio >= 0.0) || std::isinf(ratio)) {
        throw DomainError("odds must be finite and non-negative, got " + std::to_string(ratio));
    }
}

Odds Odds::on(double a, double b) { return Odds(a / b); }

Odds Odds::against(double a, double b) { return Odds(b / a); }

double Decibans::factor() const { return std::pow(10.0, value / 10.0); }

double HalfDecibans::factor() const { return std::pow(10.0, value / 20.0); }

int round_half_away(double x) { return static_cast<int>(std::lround(x)); }

Odds odds_from_probability(double p) {
    if (!(p >= 0.0 && p < 1.0)) {
        throw DomainError("probability must lie in [0, 1), got " + std::to_string(p));
    }
    return Odds(p / (1.0 - p));
}

Rational odds_from_probability(const Rational& p) {
    if (p < 0 || p >= 1) {
        throw DomainError("probability must lie in [0, 1), got " + p.str());
    }
    return p / (1 - p);
}

double probability_from_odds(Odds odds) { return odds.probability(); }

Odds apply_factor(Odds prior, double factor) {
    require_factor(factor);
    return Odds(prior.ratio() * factor);
}

Odds apply_evidence(Odds prior, Decibans evidence) { return apply_factor(prior, evidence.factor()); }

Odds apply_evidence(Odds prior, HalfDecibans evidence) { return apply_factor(prior, evidence.factor()); }

Decibans decibans_from_factor(double factor) {
    require_positive(factor);
    return Decibans{10.0 * std::log10(factor)};
}

double half_deciban_value(double factor) {
    require_positive(factor);
    return 20.0 * std::log10(factor);
}

HalfDecibans half_decibans_from_factor(double factor) {
    return HalfDecibans{round_half_away(half_deciban_value(factor))};
}

Odds combine_independent(std::span<const double> factors, Odds prior) {
    double ratio = prior.ratio();
    for (double f : factors) {
        require_positive(f);
        ratio *= f;
    }
    return Odds(ratio);
}

Rational combine_independent(std::span<const Rational> factors, const Rational& prior) {
    if (prior < 0) throw DomainError("odds must be non-negative");
    Rational result = prior;
    for (const auto& f : factors) {
        if (f <= 0) throw DomainError("factor must be positive, got " + f.str());
        result *= f;
    }
    return result;
}

Decibans total_decibans(std::span<const double> factors) {
    Decibans total;
    for (double f : factors) total += decibans_from_factor(f);
    return total;
}

}  // namespace banbury
