#include "hpd/rat.hpp"

#include <ostream>

namespace hpd {

Rat::Rat(const std::string& s) {
    if (mpq_set_str(v_.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("bad rational literal '" + s + "'", 0);
    if (sgn(mpq_class(v_.get_den())) == 0)
        throw ZeroDenominator("rational literal with zero denominator");
    v_.canonicalize();
}

Rat Rat::from_decimal_string(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac = s.size() - dot - 1;
    Rat base(digits);
    Rat scale(1);
    for (size_t i = 0; i < frac; ++i) scale *= Rat(10);
    return base / scale;
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    if (is_zero()) {
        if (e < 0) throw ZeroDenominator("0 raised to a negative power");
        return Rat(0);
    }
    Rat base = e > 0 ? *this : Rat(1) / *this;
    unsigned long n = e > 0 ? e : -e;
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::string Rat::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace hpd
