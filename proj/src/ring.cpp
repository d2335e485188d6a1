#include "tribracket/ring.hpp"

#include <numeric>

#include "tribracket/errors.hpp"

namespace tribracket {

ModulusRing::ModulusRing(std::int64_t modulus) : n_(modulus) {
    if (modulus < 2) throw ParseError("modulus must be at least 2, got " + std::to_string(modulus));
}

std::int64_t ModulusRing::reduce(std::int64_t x) const {
    std::int64_t r = x % n_;
    return r < 0 ? r + n_ : r;
}

std::int64_t ModulusRing::add(std::int64_t x, std::int64_t y) const {
    return reduce(static_cast<std::int64_t>((static_cast<__int128>(x) + y) % n_));
}

std::int64_t ModulusRing::sub(std::int64_t x, std::int64_t y) const {
    return reduce(static_cast<std::int64_t>((static_cast<__int128>(x) - y) % n_));
}

std::int64_t ModulusRing::mul(std::int64_t x, std::int64_t y) const {
    return reduce(static_cast<std::int64_t>((static_cast<__int128>(x) * y) % n_));
}

std::int64_t ModulusRing::neg(std::int64_t x) const { return reduce(-reduce(x)); }

bool ModulusRing::is_unit(std::int64_t x) const { return std::gcd(reduce(x), n_) == 1; }

std::int64_t ModulusRing::inv(std::int64_t x) const {
    std::int64_t a = reduce(x);
    std::int64_t old_r = a, r = n_;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw NonUnit(std::to_string(a) + " is not a unit modulo " + std::to_string(n_));
    return reduce(old_s);
}

std::int64_t ModulusRing::pow(std::int64_t x, std::int64_t k) const {
    std::int64_t base = k < 0 ? inv(x) : reduce(x);
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    std::int64_t result = reduce(1);
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

RingElement ModulusRing::element(std::int64_t x) const { return RingElement(*this, x); }

RingElement::RingElement(const ModulusRing& ring, std::int64_t value)
    : value_(ring.reduce(value)), n_(ring.modulus()) {}

void RingElement::check(const RingElement& o) const {
    if (n_ != o.n_)
        throw ModulusMismatch("cannot combine elements of Z_" + std::to_string(n_) + " and Z_" +
                              std::to_string(o.n_));
}

RingElement RingElement::operator+(const RingElement& o) const {
    check(o);
    return RingElement(ring(), ring().add(value_, o.value_));
}

RingElement RingElement::operator-(const RingElement& o) const {
    check(o);
    return RingElement(ring(), ring().sub(value_, o.value_));
}

RingElement RingElement::operator*(const RingElement& o) const {
    check(o);
    return RingElement(ring(), ring().mul(value_, o.value_));
}

RingElement RingElement::operator-() const { return RingElement(ring(), ring().neg(value_)); }

bool RingElement::operator==(const RingElement& o) const {
    check(o);
    return value_ == o.value_;
}

RingElement inv(const RingElement& x) { return RingElement(x.ring(), x.ring().inv(x.value())); }

RingElement pow(const RingElement& x, std::int64_t k) {
    return RingElement(x.ring(), x.ring().pow(x.value(), k));
}

bool is_unit(const RingElement& x) { return x.ring().is_unit(x.value()); }

}  // namespace tribracket
