#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace suicp {

class FieldElement;

/// Prime field GF(q). Immutable and cheap to copy; two instances denote the
/// same field iff their moduli are equal.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t modulus) : q_(modulus) {
        if (!is_prime(modulus)) {
            throw std::invalid_argument("modulus " + std::to_string(modulus) +
                                        " is not prime");
        }
    }

    [[nodiscard]] std::uint32_t modulus() const noexcept { return q_; }

    bool operator==(const PrimeField&) const = default;

    [[nodiscard]] std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

    // Arithmetic on reduced residues in [0, q). These are the workhorses for
    // matrix code; FieldElement wraps them with field-mismatch checking.
    [[nodiscard]] std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        const std::uint64_t s = std::uint64_t(a) + b;
        return s >= q_ ? static_cast<std::uint32_t>(s - q_) : static_cast<std::uint32_t>(s);
    }

    [[nodiscard]] std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
        return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t(a) + q_ - b);
    }

    [[nodiscard]] std::uint32_t neg(std::uint32_t a) const noexcept {
        return a == 0 ? 0 : q_ - a;
    }

    [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(std::uint64_t(a) * b % q_);
    }

    [[nodiscard]] std::uint32_t reduce(std::uint64_t v) const noexcept {
        return static_cast<std::uint32_t>(v % q_);
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    [[nodiscard]] std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) {
            throw std::domain_error("no inverse: zero element of " + name());
        }
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = q_, new_r = a;
        while (new_r != 0) {
            const std::int64_t quot = r / new_r;
            t = std::exchange(new_t, t - quot * new_t);
            r = std::exchange(new_r, r - quot * new_r);
        }
        return static_cast<std::uint32_t>(t < 0 ? t + q_ : t);
    }

    [[nodiscard]] FieldElement element(std::uint64_t value) const;
    [[nodiscard]] FieldElement zero() const;
    [[nodiscard]] FieldElement one() const;

    static bool is_prime(std::uint32_t n) noexcept {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (std::uint32_t d = 3; std::uint64_t(d) * d <= n; d += 2) {
            if (n % d == 0) return false;
        }
        return true;
    }

private:
    std::uint32_t q_;
};

/// Element of a prime field: a residue in [0, q) tagged with its field.
/// Arithmetic between elements of different fields throws.
class FieldElement {
public:
    FieldElement(std::uint32_t value, PrimeField field) : value_(value), field_(field) {
        if (value_ >= field_.modulus()) {
            throw std::invalid_argument("value " + std::to_string(value) +
                                        " out of range for " + field_.name());
        }
    }

    [[nodiscard]] std::uint32_t value() const noexcept { return value_; }
    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] bool is_zero() const noexcept { return value_ == 0; }

    bool operator==(const FieldElement&) const = default;

    FieldElement operator+(const FieldElement& rhs) const {
        check_same_field(rhs);
        return unchecked(field_.add(value_, rhs.value_));
    }

    FieldElement operator-(const FieldElement& rhs) const {
        check_same_field(rhs);
        return unchecked(field_.sub(value_, rhs.value_));
    }

    FieldElement operator-() const { return unchecked(field_.neg(value_)); }

    FieldElement operator*(const FieldElement& rhs) const {
        check_same_field(rhs);
        return unchecked(field_.mul(value_, rhs.value_));
    }

    FieldElement operator/(const FieldElement& rhs) const {
        check_same_field(rhs);
        return unchecked(field_.mul(value_, field_.inv(rhs.value_)));
    }

    [[nodiscard]] FieldElement inverse() const { return unchecked(field_.inv(value_)); }

private:
    FieldElement unchecked(std::uint32_t v) const noexcept {
        FieldElement e = *this;
        e.value_ = v;
        return e;
    }

    void check_same_field(const FieldElement& rhs) const {
        if (field_ != rhs.field_) {
            throw std::invalid_argument("field mismatch: " + field_.name() + " vs " +
                                        rhs.field_.name());
        }
    }

    std::uint32_t value_;
    PrimeField field_;
};

inline FieldElement PrimeField::element(std::uint64_t value) const {
    return FieldElement(reduce(value), *this);
}

inline FieldElement PrimeField::zero() const { return FieldElement(0, *this); }

inline FieldElement PrimeField::one() const { return FieldElement(1, *this); }

}  // namespace suicp
