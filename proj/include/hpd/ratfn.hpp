#pragma once

#include <map>

#include "hpd/lpoly.hpp"

namespace hpd {

// Formal quotient of Laurent polynomials. Never reduced by polynomial gcd;
// equality is decided by cross-multiplication. The only normalization applied
// is exact and cheap: common monomial content is stripped, a monomial
// denominator is divided out entirely (exact in the Laurent ring), and the
// denominator's leading coefficient is scaled to 1.
class RatFn {
public:
    RatFn() : num_(0), den_(0, Rat(1)) {}
    explicit RatFn(const LPoly& num) : num_(num), den_(num.nvars(), Rat(1)) {}
    RatFn(const LPoly& num, const LPoly& den);
    RatFn(int nvars, const Rat& c) : num_(nvars, c), den_(nvars, Rat(1)) {}

    static RatFn variable(int nvars, int idx, int power = 1) {
        return RatFn(LPoly::variable(nvars, idx, power));
    }

    const LPoly& num() const { return num_; }
    const LPoly& den() const { return den_; }
    int nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool den_is_one() const;
    // The Laurent polynomial this quotient reduces to, if the denominator is 1
    // after normalization.
    std::optional<LPoly> as_lpoly() const;

    RatFn operator-() const;
    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b);
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b);
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
    RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

    RatFn operator*(const Rat& c) const { return RatFn(num_ * c, den_); }

    RatFn pow(long e) const;
    RatFn differentiate(int var) const;
    RatFn remap(int new_nvars, const std::vector<int>& where) const;

    // Equality as formal quotients: num1*den2 == num2*den1.
    friend bool operator==(const RatFn& a, const RatFn& b);
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& names) const;

private:
    void normalize();
    LPoly num_, den_;
};

// Replaces each variable of `p` by the assigned quotient. Every variable that
// actually occurs in `p` must be assigned; assignments must share one target
// ring. Negative powers invert the assigned value.
RatFn substitute(const LPoly& p, const std::map<int, RatFn>& assignment, int out_nvars);
RatFn substitute(const RatFn& p, const std::map<int, RatFn>& assignment, int out_nvars);

} // namespace hpd
