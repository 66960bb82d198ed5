#include "nilreg/scalar.hpp"

#include <stdexcept>

namespace nilreg {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (p > 65521 || !is_prime(p))
        throw std::invalid_argument("GF(p) needs a prime p <= 65521, got " + std::to_string(p));
    return Field(p);
}

Field Field::parse(std::string_view name) {
    if (name == "rational" || name == "rationals" || name == "q" || name == "Q")
        return rationals();
    if (name.size() > 2 && name.substr(0, 2) == "gf") {
        std::uint64_t p = 0;
        for (char c : name.substr(2)) {
            if (c < '0' || c > '9' || p > 100000)
                throw std::invalid_argument("unknown field '" + std::string(name) + "'");
            p = p * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return prime(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("unknown field '" + std::string(name) + "'");
}

std::string Field::name() const {
    return is_rational() ? "rational" : "gf" + std::to_string(characteristic_);
}

Scalar Field::zero() const { return Scalar(*this); }

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
    Scalar s(*this);
    if (is_rational()) {
        s.rational_ = value;
    } else {
        long p = static_cast<long>(characteristic_);
        long r = value % p;
        if (r < 0) r += p;
        s.residue_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Field::parse_scalar(std::string_view text) const {
    std::string t(text);
    bool negative = false;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        negative = t[0] == '-';
        t.erase(0, 1);
    }
    mpq_class q;
    if (t.empty() || q.set_str(t, 10) != 0)
        throw std::invalid_argument("bad scalar '" + std::string(text) + "'");
    if (q.get_den() == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    if (negative) q = -q;
    Scalar s(*this);
    if (is_rational()) {
        s.rational_ = q;
        return s;
    }
    std::uint64_t num = reduce_mpz(q.get_num(), characteristic_);
    std::uint64_t den = reduce_mpz(q.get_den(), characteristic_);
    if (den == 0)
        throw std::domain_error("denominator vanishes in " + name() + ": '" + std::string(text) + "'");
    s.residue_ = num * pow_mod(den, characteristic_ - 2, characteristic_) % characteristic_;
    return s;
}

bool Scalar::is_zero() const noexcept {
    return field_.is_rational() ? sgn(rational_) == 0 : residue_ == 0;
}

bool Scalar::is_one() const noexcept {
    return field_.is_rational() ? rational_ == 1 : residue_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw std::invalid_argument("scalars from different fields: " + field_.name() +
                                    " and " + o.field_.name());
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.is_rational())
        s.rational_ = -rational_;
    else if (residue_ != 0)
        s.residue_ = field_.characteristic() - residue_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s = *this;
    if (field_.is_rational())
        s.rational_ = 1 / rational_;
    else
        s.residue_ = pow_mod(residue_, field_.characteristic() - 2, field_.characteristic());
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_rational())
        rational_ += o.rational_;
    else
        residue_ = (residue_ + o.residue_) % field_.characteristic();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_rational())
        rational_ *= o.rational_;
    else
        residue_ = residue_ * o.residue_ % field_.characteristic();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same_field(o);
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rational() ? a.rational_ == b.rational_ : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const {
    return field_.is_rational() ? rational_.get_str() : std::to_string(residue_);
}

std::uint32_t Scalar::residue() const {
    if (field_.is_rational()) throw std::logic_error("residue() of a rational scalar");
    return static_cast<std::uint32_t>(residue_);
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational()) throw std::logic_error("rational() of a prime-field scalar");
    return rational_;
}

}  // namespace nilreg
