#pragma once

#include <functional>

#include "hpd/ratfn.hpp"

namespace hpd {

// Truncated power series in deformation parameters (t_1..t_m or s_1..s_l)
// whose coefficients are rational functions of the chart variables. Terms of
// parameter degree > order are dropped by every operation.
class PJet {
public:
    using Terms = std::map<ExpVec, RatFn, GradedLex>;

    PJet() : nvars_(0), nparams_(0), order_(0) {}
    PJet(int nvars, int nparams, int order)
        : nvars_(nvars), nparams_(nparams), order_(order) {}
    PJet(const RatFn& constant, int nparams, int order);

    static PJet param(int nvars, int nparams, int order, int idx);
    static PJet variable(int nvars, int nparams, int order, int idx) {
        return PJet(RatFn::variable(nvars, idx), nparams, order);
    }

    int nvars() const { return nvars_; }
    int nparams() const { return nparams_; }
    int order() const { return order_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    void add_term(const ExpVec& mu, const RatFn& f);

    // Coefficient of the parameter monomial mu (zero quotient if absent).
    RatFn coeff(const ExpVec& mu) const;
    // Value at parameters = 0.
    RatFn at_zero() const { return coeff(ExpVec(nparams_, 0)); }
    // Sum of terms of parameter degree exactly v / at most v.
    PJet homogeneous_part(int v) const;
    PJet truncated(int new_order) const;
    // Same series viewed at a different truncation order (drops or keeps).
    PJet with_order(int new_order) const;

    PJet operator-() const;
    friend PJet operator+(const PJet& a, const PJet& b);
    friend PJet operator-(const PJet& a, const PJet& b);
    friend PJet operator*(const PJet& a, const PJet& b);
    PJet& operator+=(const PJet& o) { return *this = *this + o; }
    PJet& operator-=(const PJet& o) { return *this = *this - o; }
    PJet& operator*=(const PJet& o) { return *this = *this * o; }
    PJet operator*(const Rat& c) const;
    PJet operator*(const RatFn& c) const;

    PJet pow(long e) const;
    // Multiplicative inverse; requires the order-0 coefficient to be nonzero.
    PJet inverse() const;

    PJet differentiate_var(int var) const;
    PJet differentiate_param(int u) const;

    // Exact equality of formal quotient coefficients.
    bool equals(const PJet& o) const;

    std::string str(const std::vector<std::string>& var_names,
                    const std::vector<std::string>& param_names) const;

private:
    void check_compatible(const PJet& o, const char* op) const;
    int nvars_, nparams_, order_;
    Terms terms_;
};

// Substitutes chart variables and parameters simultaneously:
//   var_assignment : source chart variable -> jet over the target space
//   param_assignment : source parameter -> jet over the target space
// Negative chart powers expand through jet inversion, which is well defined
// whenever the assigned jet has a nonzero order-0 part.
PJet compose(const LPoly& p, const std::vector<PJet>& var_assignment,
             const std::vector<PJet>& param_assignment, int out_nvars,
             int out_nparams, int order);
PJet compose(const RatFn& p, const std::vector<PJet>& var_assignment,
             const std::vector<PJet>& param_assignment, int out_nvars,
             int out_nparams, int order);
PJet compose(const PJet& p, const std::vector<PJet>& var_assignment,
             const std::vector<PJet>& param_assignment, int out_nvars,
             int out_nparams, int order);

// Spec-facing order-checked arithmetic: throws OrderMismatch when the two
// jets carry different truncation orders.
PJet jet_combine_add(const PJet& a, const PJet& b);
PJet jet_combine_mul(const PJet& a, const PJet& b);

} // namespace hpd
