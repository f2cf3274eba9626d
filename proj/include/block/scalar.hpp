#pragma once

#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace block {

// Exact rational number, always in lowest terms with positive denominator.
class Scalar {
  public:
    Scalar() = default;
    Scalar(std::int64_t n); // NOLINT(google-explicit-constructor)
    Scalar(std::int64_t n, std::int64_t d);
    explicit Scalar(mpq_class q);
    Scalar(const mpz_class &n, const mpz_class &d);

    // Accepts "p" or "p/q"; throws std::invalid_argument on malformed input or q == 0.
    static Scalar parse(std::string_view text);

    [[nodiscard]] const mpq_class &value() const { return q_; }
    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(q_); }

    // "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string str() const { return q_.get_str(); }

    // Integer power; negative exponents require a nonzero base.
    [[nodiscard]] Scalar pow(std::int64_t e) const;
    [[nodiscard]] Scalar inverse() const;

    Scalar &operator+=(const Scalar &o) {
        q_ += o.q_;
        return *this;
    }
    Scalar &operator-=(const Scalar &o) {
        q_ -= o.q_;
        return *this;
    }
    Scalar &operator*=(const Scalar &o) {
        q_ *= o.q_;
        return *this;
    }
    Scalar &operator/=(const Scalar &o);

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
    friend Scalar operator-(const Scalar &a) { return Scalar(mpq_class(-a.q_)); }

    friend bool operator==(const Scalar &a, const Scalar &b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Scalar &a, const Scalar &b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

  private:
    mpq_class q_{0};
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

} // namespace block
