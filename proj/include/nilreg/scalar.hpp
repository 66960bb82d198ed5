#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace nilreg {

class Scalar;

/// The coefficient field: the rationals, or GF(p) for a prime p.
class Field {
  public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);
    // "rational" / "q", "gf2", "gf3", "gf<p>".
    static Field parse(std::string_view name);

    bool is_rational() const noexcept { return characteristic_ == 0; }
    std::uint32_t characteristic() const noexcept { return characteristic_; }
    std::string name() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long value) const;
    // Integer or fraction "p/q"; fractions in GF(p) use the inverse of q.
    Scalar parse_scalar(std::string_view text) const;

    friend bool operator==(const Field&, const Field&) = default;

  private:
    explicit Field(std::uint32_t characteristic) : characteristic_(characteristic) {}
    std::uint32_t characteristic_;
};

/// Exact field element. Prime-field values are kept as residues in [0, p).
class Scalar {
  public:
    Scalar() : Scalar(Field::rationals()) {}

    const Field& field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    Scalar operator-() const;
    Scalar inverse() const;  // throws std::domain_error on zero

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    // Canonical text: "-3/4" for rationals, the residue for GF(p).
    std::string to_string() const;
    // Prime-field residue; throws for rationals.
    std::uint32_t residue() const;
    const mpq_class& rational() const;

  private:
    friend class Field;
    explicit Scalar(Field f) : field_(f) {}
    void check_same_field(const Scalar& o) const;

    Field field_;
    std::uint64_t residue_ = 0;
    mpq_class rational_;
};

}  // namespace nilreg
