#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hpd/rat.hpp"

namespace hpd {

// Exponent vector of a Laurent monomial; length = number of ring variables,
// entries may be negative.
using ExpVec = std::vector<int>;

// Graded-lexicographic order: total degree first, then lexicographic.
// Used for every term map so iteration order (and printing) is canonical.
struct GradedLex {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

ExpVec exp_add(const ExpVec& a, const ExpVec& b);
long exp_total(const ExpVec& a);

// Multivariate Laurent polynomial over Q with a fixed variable count.
// No zero coefficients are stored.
class LPoly {
public:
    using Terms = std::map<ExpVec, Rat, GradedLex>;

    LPoly() : nvars_(0) {}
    explicit LPoly(int nvars) : nvars_(nvars) {}
    LPoly(int nvars, const Rat& c);

    static LPoly monomial(int nvars, const ExpVec& e, const Rat& c);
    static LPoly variable(int nvars, int idx, int power = 1);

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Nonzero only when the polynomial is a single term c*z^e.
    std::optional<std::pair<ExpVec, Rat>> as_monomial() const;
    std::optional<Rat> as_constant() const;

    void add_term(const ExpVec& e, const Rat& c);

    LPoly operator-() const;
    LPoly& operator+=(const LPoly& o);
    LPoly& operator-=(const LPoly& o);
    friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
    friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
    friend LPoly operator*(const LPoly& a, const LPoly& b);
    LPoly& operator*=(const LPoly& o) { return *this = *this * o; }
    LPoly operator*(const Rat& c) const;
    friend bool operator==(const LPoly& a, const LPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // Formal partial derivative; Laurent rule d(z^a)/dz = a z^{a-1}.
    LPoly differentiate(int var) const;

    // Exact division by a single monomial (always possible in the Laurent ring).
    LPoly div_monomial(const ExpVec& e, const Rat& c) const;

    // True if every exponent vector is componentwise >= 0.
    bool laurent_nonnegative() const;

    // Widen to a ring with more variables; existing variables keep indices
    // given by `where` (where[i] = new index of old variable i).
    LPoly remap(int new_nvars, const std::vector<int>& where) const;

    // All-variables total degree of each term must be equal: returns that
    // degree, or nullopt when inhomogeneous (zero counts as homogeneous).
    std::optional<long> homogeneous_degree() const;

    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_;
    Terms terms_;
};

} // namespace hpd
