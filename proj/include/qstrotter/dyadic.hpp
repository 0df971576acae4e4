#pragma once

#include <cstdint>
#include <string>

#include "qstrotter/errors.hpp"

namespace qst {

/// Exact dyadic rational num / 2^level, kept in lowest terms (num odd or
/// level zero). Grid membership and step-function orders are computed on
/// these, never on floating-point times.
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(std::int64_t num, int level);
    static Dyadic from_int(std::int64_t n) { return Dyadic(n, 0); }

    /// Parses "p", "p/q" with q a power of two, or "p/2^N".
    static Dyadic parse(const std::string& text);

    std::int64_t num() const { return num_; }
    int level() const { return level_; }

    double to_double() const;
    std::string to_string() const;

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    /// Numerator when written over denominator 2^n; requires level() <= n.
    std::int64_t numerator_at_level(int n) const;

    /// Largest multiple of 2^-n that is <= *this (the grid point t^n_0).
    Dyadic floor_to_level(int n) const;

    /// True iff *this is an integer multiple of 2^-n.
    bool on_grid(int n) const { return level_ <= n; }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend bool operator==(const Dyadic& a, const Dyadic& b);
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b);
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return a < b || a == b; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return b <= a; }

private:
    std::int64_t num_ = 0;
    int level_ = 0;

    void normalize();
};

/// 2^-n as a Dyadic.
Dyadic dyadic_step(int n);

} // namespace qst
