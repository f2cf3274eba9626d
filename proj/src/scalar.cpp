#include "block/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace block {

Scalar::Scalar(std::int64_t n) : q_(mpz_class(static_cast<long>(n))) {}

Scalar::Scalar(std::int64_t n, std::int64_t d)
    : Scalar(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d))) {}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Scalar::Scalar(const mpz_class &n, const mpz_class &d) {
    if (d == 0)
        throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
    auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n.front() == '+')
        n.erase(0, 1);
    const mpz_class d{std::string(den)};
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Scalar(mpz_class(n), d);
}

Scalar Scalar::pow(std::int64_t e) const {
    if (e < 0)
        return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Scalar(n, d);
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw std::domain_error("inverse of zero");
    return Scalar(q_.get_den(), q_.get_num());
}

Scalar &Scalar::operator/=(const Scalar &o) {
    if (o.is_zero())
        throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.str(); }

} // namespace block
