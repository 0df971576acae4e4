#include "qstrotter/dyadic.hpp"

#include <cmath>
#include <cstdlib>

namespace qst {

namespace {

constexpr int kMaxLevel = 62;

std::int64_t shift_left_checked(std::int64_t v, int bits) {
    if (bits < 0 || bits > kMaxLevel)
        throw ArgumentError("dyadic: refinement level out of range");
    std::int64_t r = v;
    for (int i = 0; i < bits; ++i) {
        if (r > (INT64_MAX >> 1) || r < (INT64_MIN >> 1))
            throw ArgumentError("dyadic: numerator overflow");
        r <<= 1;
    }
    return r;
}

} // namespace

Dyadic::Dyadic(std::int64_t num, int level) : num_(num), level_(level) {
    if (level < 0 || level > kMaxLevel)
        throw ArgumentError("dyadic: level must be in [0, 62]");
    normalize();
}

void Dyadic::normalize() {
    if (num_ == 0) {
        level_ = 0;
        return;
    }
    while (level_ > 0 && (num_ % 2) == 0) {
        num_ /= 2;
        --level_;
    }
}

Dyadic Dyadic::parse(const std::string& text) {
    if (text.empty()) throw ArgumentError("dyadic: empty string");
    const auto slash = text.find('/');
    auto parse_int = [](const std::string& s) -> std::int64_t {
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw ArgumentError("dyadic: cannot parse integer '" + s + "'");
        }
        if (pos != s.size()) throw ArgumentError("dyadic: trailing characters in '" + s + "'");
        return v;
    };
    if (slash == std::string::npos) return Dyadic(parse_int(text), 0);

    const std::string num_part = text.substr(0, slash);
    std::string den_part = text.substr(slash + 1);
    const std::int64_t p = parse_int(num_part);

    int level = 0;
    if (den_part.rfind("2^", 0) == 0) {
        const std::int64_t n = parse_int(den_part.substr(2));
        if (n < 0 || n > kMaxLevel) throw ArgumentError("dyadic: exponent out of range in '" + text + "'");
        level = static_cast<int>(n);
    } else {
        std::int64_t q = parse_int(den_part);
        if (q <= 0) throw ArgumentError("dyadic: denominator must be positive in '" + text + "'");
        while (q > 1) {
            if (q % 2 != 0)
                throw ArgumentError("dyadic: denominator must be a power of two in '" + text + "'");
            q /= 2;
            ++level;
        }
    }
    return Dyadic(p, level);
}

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(num_), -level_); }

std::string Dyadic::to_string() const {
    if (level_ == 0) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(std::int64_t(1) << level_);
}

std::int64_t Dyadic::numerator_at_level(int n) const {
    if (level_ > n) throw ArgumentError("dyadic: value " + to_string() + " is not on the 2^-" +
                                        std::to_string(n) + " grid");
    return shift_left_checked(num_, n - level_);
}

Dyadic Dyadic::floor_to_level(int n) const {
    if (level_ <= n) return Dyadic(shift_left_checked(num_, n - level_), n);
    // floor division by 2^(level-n), correct for negative numerators too
    const int shift = level_ - n;
    std::int64_t q = num_ >> shift;
    return Dyadic(q, n);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    const int lvl = std::max(a.level_, b.level_);
    return Dyadic(a.numerator_at_level(lvl) + b.numerator_at_level(lvl), lvl);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    const int lvl = std::max(a.level_, b.level_);
    return Dyadic(a.numerator_at_level(lvl) - b.numerator_at_level(lvl), lvl);
}

bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num_ == b.num_ && a.level_ == b.level_;
}

bool operator<(const Dyadic& a, const Dyadic& b) {
    const int lvl = std::max(a.level_, b.level_);
    return a.numerator_at_level(lvl) < b.numerator_at_level(lvl);
}

Dyadic dyadic_step(int n) { return Dyadic(1, n); }

} // namespace qst
