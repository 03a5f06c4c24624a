#include "hpd/lpoly.hpp"

#include <sstream>

namespace hpd {

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

long exp_total(const ExpVec& a) {
    long t = 0;
    for (int e : a) t += e;
    return t;
}

LPoly::LPoly(int nvars, const Rat& c) : nvars_(nvars) {
    if (!c.is_zero()) terms_[ExpVec(nvars, 0)] = c;
}

LPoly LPoly::monomial(int nvars, const ExpVec& e, const Rat& c) {
    LPoly p(nvars);
    if ((int)e.size() != nvars) throw InternalError("monomial exponent length mismatch");
    p.add_term(e, c);
    return p;
}

LPoly LPoly::variable(int nvars, int idx, int power) {
    ExpVec e(nvars, 0);
    e.at(idx) = power;
    return monomial(nvars, e, Rat(1));
}

bool LPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && exp_total(terms_.begin()->first) == 0 &&
           terms_.begin()->first == ExpVec(nvars_, 0);
}

std::optional<std::pair<ExpVec, Rat>> LPoly::as_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    return *terms_.begin();
}

std::optional<Rat> LPoly::as_constant() const {
    if (terms_.empty()) return Rat(0);
    if (is_constant()) return terms_.begin()->second;
    return std::nullopt;
}

void LPoly::add_term(const ExpVec& e, const Rat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LPoly LPoly::operator-() const {
    LPoly r(nvars_);
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LPoly& LPoly::operator+=(const LPoly& o) {
    if (nvars_ != o.nvars_) throw InternalError("LPoly variable-count mismatch in +");
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
    if (nvars_ != o.nvars_) throw InternalError("LPoly variable-count mismatch in -");
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
    if (a.nvars_ != b.nvars_) throw InternalError("LPoly variable-count mismatch in *");
    LPoly r(a.nvars_);
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
}

LPoly LPoly::operator*(const Rat& c) const {
    LPoly r(nvars_);
    if (c.is_zero()) return r;
    for (auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

LPoly LPoly::differentiate(int var) const {
    LPoly r(nvars_);
    for (auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec d = e;
        d[var] -= 1;
        r.add_term(d, c * Rat(e[var]));
    }
    return r;
}

LPoly LPoly::div_monomial(const ExpVec& e, const Rat& c) const {
    if (c.is_zero()) throw ZeroDenominator("division by zero monomial");
    LPoly r(nvars_);
    for (auto& [ea, ca] : terms_) {
        ExpVec d(ea.size());
        for (size_t i = 0; i < ea.size(); ++i) d[i] = ea[i] - e[i];
        r.terms_.emplace(d, ca / c);
    }
    return r;
}

bool LPoly::laurent_nonnegative() const {
    for (auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return false;
    return true;
}

LPoly LPoly::remap(int new_nvars, const std::vector<int>& where) const {
    LPoly r(new_nvars);
    for (auto& [e, c] : terms_) {
        ExpVec d(new_nvars, 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) d.at(where.at(i)) = e[i];
        }
        r.add_term(d, c);
    }
    return r;
}

std::optional<long> LPoly::homogeneous_degree() const {
    std::optional<long> deg;
    for (auto& [e, c] : terms_) {
        long d = exp_total(e);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg ? deg : std::optional<long>(0);
}

std::string LPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest-degree terms last to match map order.
    for (auto& [e, c] : terms_) {
        Rat a = c;
        if (!first) {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool have_vars = exp_total(ExpVec(e)) != 0 || e != ExpVec(e.size(), 0);
        bool printed = false;
        if (!a.is_one() || !have_vars) {
            os << a.str();
            printed = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << names.at(i);
            if (e[i] != 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

} // namespace hpd
