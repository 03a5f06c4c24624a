#include "hpd/pjet.hpp"

#include <sstream>

namespace hpd {

PJet::PJet(const RatFn& constant, int nparams, int order)
    : nvars_(constant.nvars()), nparams_(nparams), order_(order) {
    add_term(ExpVec(nparams, 0), constant);
}

PJet PJet::param(int nvars, int nparams, int order, int idx) {
    PJet j(nvars, nparams, order);
    ExpVec mu(nparams, 0);
    mu.at(idx) = 1;
    j.add_term(mu, RatFn(nvars, Rat(1)));
    return j;
}

void PJet::add_term(const ExpVec& mu, const RatFn& f) {
    if ((int)mu.size() != nparams_) throw InternalError("PJet parameter arity mismatch");
    if (exp_total(mu) > order_) return;
    if (f.is_zero()) return;
    auto it = terms_.find(mu);
    if (it == terms_.end()) {
        terms_.emplace(mu, f);
    } else {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RatFn PJet::coeff(const ExpVec& mu) const {
    auto it = terms_.find(mu);
    if (it == terms_.end()) return RatFn(LPoly(nvars_));
    return it->second;
}

PJet PJet::homogeneous_part(int v) const {
    PJet r(nvars_, nparams_, order_);
    for (auto& [mu, f] : terms_)
        if (exp_total(mu) == v) r.terms_.emplace(mu, f);
    return r;
}

PJet PJet::truncated(int new_order) const {
    PJet r(nvars_, nparams_, order_);
    for (auto& [mu, f] : terms_)
        if (exp_total(mu) <= new_order) r.terms_.emplace(mu, f);
    return r;
}

PJet PJet::with_order(int new_order) const {
    PJet r(nvars_, nparams_, new_order);
    for (auto& [mu, f] : terms_)
        if (exp_total(mu) <= new_order) r.terms_.emplace(mu, f);
    return r;
}

void PJet::check_compatible(const PJet& o, const char* op) const {
    if (nvars_ != o.nvars_ || nparams_ != o.nparams_)
        throw InternalError(std::string("PJet ring mismatch in ") + op);
    if (order_ != o.order_)
        throw OrderMismatch(std::string("PJet truncation orders differ in ") + op);
}

PJet PJet::operator-() const {
    PJet r(nvars_, nparams_, order_);
    for (auto& [mu, f] : terms_) r.terms_.emplace(mu, -f);
    return r;
}

PJet operator+(const PJet& a, const PJet& b) {
    a.check_compatible(b, "+");
    PJet r = a;
    for (auto& [mu, f] : b.terms_) r.add_term(mu, f);
    return r;
}

PJet operator-(const PJet& a, const PJet& b) {
    a.check_compatible(b, "-");
    PJet r = a;
    for (auto& [mu, f] : b.terms_) r.add_term(mu, -f);
    return r;
}

PJet operator*(const PJet& a, const PJet& b) {
    a.check_compatible(b, "*");
    PJet r(a.nvars_, a.nparams_, a.order_);
    for (auto& [ma, fa] : a.terms_)
        for (auto& [mb, fb] : b.terms_) {
            if (exp_total(ma) + exp_total(mb) > a.order_) continue;
            r.add_term(exp_add(ma, mb), fa * fb);
        }
    return r;
}

PJet PJet::operator*(const Rat& c) const { return *this * RatFn(nvars_, c); }

PJet PJet::operator*(const RatFn& c) const {
    PJet r(nvars_, nparams_, order_);
    if (c.is_zero()) return r;
    for (auto& [mu, f] : terms_) r.add_term(mu, f * c);
    return r;
}

PJet PJet::pow(long e) const {
    PJet acc(RatFn(nvars_, Rat(1)), nparams_, order_);
    if (e == 0) return acc;
    PJet base = e > 0 ? *this : inverse();
    unsigned long n = e > 0 ? e : -e;
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

PJet PJet::inverse() const {
    RatFn c0 = at_zero();
    if (c0.is_zero())
        throw ZeroDenominator("jet inverse of a series with zero constant term");
    // a = c0 (1 + n), n of parameter order >= 1: 1/a = (1/c0) sum (-n)^k.
    RatFn inv0 = RatFn(nvars_, Rat(1)) / c0;
    PJet n = (*this * inv0) - PJet(RatFn(nvars_, Rat(1)), nparams_, order_);
    PJet acc(RatFn(nvars_, Rat(1)), nparams_, order_);
    PJet power(RatFn(nvars_, Rat(1)), nparams_, order_);
    for (int k = 1; k <= order_; ++k) {
        power = power * (-n);
        if (power.is_zero()) break;
        acc += power;
    }
    return acc * inv0;
}

PJet PJet::differentiate_var(int var) const {
    PJet r(nvars_, nparams_, order_);
    for (auto& [mu, f] : terms_) r.add_term(mu, f.differentiate(var));
    return r;
}

PJet PJet::differentiate_param(int u) const {
    PJet r(nvars_, nparams_, order_);
    for (auto& [mu, f] : terms_) {
        if (mu[u] == 0) continue;
        ExpVec d = mu;
        d[u] -= 1;
        r.add_term(d, f * Rat(mu[u]));
    }
    return r;
}

bool PJet::equals(const PJet& o) const {
    if (nvars_ != o.nvars_ || nparams_ != o.nparams_) return false;
    PJet d = *this - o.with_order(order_);
    for (auto& [mu, f] : d.terms_)
        if (!f.is_zero()) return false;
    return true;
}

std::string PJet::str(const std::vector<std::string>& var_names,
                      const std::vector<std::string>& param_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [mu, f] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << f.str(var_names) << ")";
        for (size_t u = 0; u < mu.size(); ++u) {
            if (mu[u] == 0) continue;
            os << "*" << param_names.at(u);
            if (mu[u] != 1) os << "^" << mu[u];
        }
    }
    return os.str();
}

PJet compose(const LPoly& p, const std::vector<PJet>& var_assignment,
             const std::vector<PJet>& param_assignment, int out_nvars,
             int out_nparams, int order) {
    PJet acc(out_nvars, out_nparams, order);
    for (auto& [e, c] : p.terms()) {
        PJet term(RatFn(out_nvars, c), out_nparams, order);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (i >= var_assignment.size())
                throw UnboundVariable("variable #" + std::to_string(i) + " unassigned");
            term *= var_assignment[i].pow(e[i]);
        }
        acc += term;
    }
    (void)param_assignment;
    return acc;
}

PJet compose(const RatFn& p, const std::vector<PJet>& var_assignment,
             const std::vector<PJet>& param_assignment, int out_nvars,
             int out_nparams, int order) {
    PJet n = compose(p.num(), var_assignment, param_assignment, out_nvars,
                     out_nparams, order);
    if (p.den_is_one()) return n;
    PJet d = compose(p.den(), var_assignment, param_assignment, out_nvars,
                     out_nparams, order);
    return n * d.inverse();
}

PJet compose(const PJet& p, const std::vector<PJet>& var_assignment,
             const std::vector<PJet>& param_assignment, int out_nvars,
             int out_nparams, int order) {
    if ((int)param_assignment.size() != p.nparams())
        throw InternalError("compose: parameter assignment arity mismatch");
    PJet acc(out_nvars, out_nparams, order);
    for (auto& [mu, f] : p.terms()) {
        PJet term =
            compose(f, var_assignment, param_assignment, out_nvars, out_nparams, order);
        for (size_t u = 0; u < mu.size(); ++u)
            for (int k = 0; k < mu[u]; ++k) term *= param_assignment[u];
        acc += term;
    }
    return acc;
}

PJet jet_combine_add(const PJet& a, const PJet& b) { return a + b; }
PJet jet_combine_mul(const PJet& a, const PJet& b) { return a * b; }

} // namespace hpd
