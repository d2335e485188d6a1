#pragma once

#include <cstdint>
#include <string>

namespace tribracket {

class RingElement;

// The ring Z_n of residues modulo n >= 2.
class ModulusRing {
public:
    explicit ModulusRing(std::int64_t modulus);

    std::int64_t modulus() const { return n_; }

    std::int64_t reduce(std::int64_t x) const;
    std::int64_t add(std::int64_t x, std::int64_t y) const;
    std::int64_t sub(std::int64_t x, std::int64_t y) const;
    std::int64_t mul(std::int64_t x, std::int64_t y) const;
    std::int64_t neg(std::int64_t x) const;
    bool is_unit(std::int64_t x) const;
    // Throws NonUnit.
    std::int64_t inv(std::int64_t x) const;
    // Negative exponents require a unit base.
    std::int64_t pow(std::int64_t x, std::int64_t k) const;

    RingElement element(std::int64_t x) const;

    bool operator==(const ModulusRing& o) const { return n_ == o.n_; }

private:
    std::int64_t n_;
};

class RingElement {
public:
    RingElement(const ModulusRing& ring, std::int64_t value);

    std::int64_t value() const { return value_; }
    std::int64_t modulus() const { return n_; }
    ModulusRing ring() const { return ModulusRing(n_); }

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;

    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(value_); }

private:
    void check(const RingElement& o) const;

    std::int64_t value_;
    std::int64_t n_;
};

RingElement inv(const RingElement& x);
RingElement pow(const RingElement& x, std::int64_t k);
bool is_unit(const RingElement& x);

}  // namespace tribracket
