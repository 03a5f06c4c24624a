#include "hpd/ratfn.hpp"

namespace hpd {

RatFn::RatFn(const LPoly& num, const LPoly& den) : num_(num), den_(den) {
    if (num.nvars() != den.nvars()) throw InternalError("RatFn num/den variable mismatch");
    if (den.is_zero()) throw ZeroDenominator("RatFn with zero denominator");
    normalize();
}

void RatFn::normalize() {
    if (num_.is_zero()) {
        den_ = LPoly(num_.nvars(), Rat(1));
        return;
    }
    // Monomial denominator divides out exactly in the Laurent ring.
    if (auto m = den_.as_monomial()) {
        num_ = num_.div_monomial(m->first, m->second);
        den_ = LPoly(num_.nvars(), Rat(1));
        return;
    }
    // Strip the denominator's monomial content and scale its lead coeff to 1.
    const auto& lead = *den_.terms().begin();
    num_ = num_.div_monomial(lead.first, lead.second);
    den_ = den_.div_monomial(lead.first, lead.second);
}

bool RatFn::den_is_one() const {
    auto c = den_.as_constant();
    return c && c->is_one();
}

std::optional<LPoly> RatFn::as_lpoly() const {
    if (den_is_one()) return num_;
    return std::nullopt;
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.den_.terms() == b.den_.terms()) return RatFn(a.num_ + b.num_, a.den_);
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) {
    if (a.den_.terms() == b.den_.terms()) return RatFn(a.num_ - b.num_, a.den_);
    return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator*(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw ZeroDenominator("division by zero rational function");
    return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

RatFn RatFn::pow(long e) const {
    RatFn acc(nvars(), Rat(1));
    if (e == 0) return acc;
    RatFn base = *this;
    if (e < 0) {
        if (is_zero()) throw ZeroDenominator("zero raised to a negative power");
        base = acc / *this;
        e = -e;
    }
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

RatFn RatFn::differentiate(int var) const {
    // (n/d)' = (n'd - nd')/d^2
    if (den_is_one()) return RatFn(num_.differentiate(var));
    return RatFn(num_.differentiate(var) * den_ - num_ * den_.differentiate(var),
                 den_ * den_);
}

RatFn RatFn::remap(int new_nvars, const std::vector<int>& where) const {
    return RatFn(num_.remap(new_nvars, where), den_.remap(new_nvars, where));
}

bool operator==(const RatFn& a, const RatFn& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFn::str(const std::vector<std::string>& names) const {
    if (den_is_one()) return num_.str(names);
    return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

RatFn substitute(const LPoly& p, const std::map<int, RatFn>& assignment, int out_nvars) {
    RatFn acc(out_nvars, Rat(0));
    for (auto& [e, c] : p.terms()) {
        RatFn term(out_nvars, c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = assignment.find((int)i);
            if (it == assignment.end())
                throw UnboundVariable("variable #" + std::to_string(i) + " unassigned");
            if (it->second.nvars() != out_nvars)
                throw InternalError("substitution target ring mismatch");
            if (e[i] < 0 && it->second.is_zero())
                throw ZeroDenominator("negative power of a zero substitution value");
            term *= it->second.pow(e[i]);
        }
        acc += term;
    }
    return acc;
}

RatFn substitute(const RatFn& p, const std::map<int, RatFn>& assignment, int out_nvars) {
    RatFn n = substitute(p.num(), assignment, out_nvars);
    RatFn d = substitute(p.den(), assignment, out_nvars);
    if (d.is_zero()) throw ZeroDenominator("substitution sent denominator to zero");
    return n / d;
}

} // namespace hpd
