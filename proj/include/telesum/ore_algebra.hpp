#ifndef TELESUM_ORE_ALGEBRA_HPP
#define TELESUM_ORE_ALGEBRA_HPP

#include "telesum/rational_function.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace telesum {

enum class VarAction { Shift, Diff };

struct VariableSpec {
    std::string name;
    VarAction action = VarAction::Shift;
    bool is_summation = false;
};

// The algebra A = K(n)<d_0,...,d_m>. Exponent vectors index the operator
// variables in declaration order; the summation variable's coefficient action
// is the shift in n, every other variable maps to a parameter slot of K.
class OreAlgebra {
public:
    OreAlgebra(std::vector<VariableSpec> vars, std::vector<std::string> free_params)
        : vars_(std::move(vars)), free_params_(std::move(free_params)) {
        std::set<std::string> seen;
        int summ = -1;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (!seen.insert(vars_[i].name).second)
                throw SemanticError("duplicate variable name: " + vars_[i].name);
            if (vars_[i].is_summation) {
                if (summ >= 0) throw SemanticError("more than one summation variable");
                if (vars_[i].action != VarAction::Shift)
                    throw SemanticError("the summation variable must carry the shift action");
                summ = (int)i;
            }
        }
        for (const auto& p : free_params_)
            if (!seen.insert(p).second)
                throw SemanticError("parameter name collides with a variable: " + p);
        if (summ < 0) throw SemanticError("exactly one summation variable is required");
        summation_ = summ;
        // parameter slots: free parameters first, then non-summation variables
        for (const auto& p : free_params_) param_names_.push_back(p);
        param_slot_.assign(vars_.size(), -1);
        for (size_t i = 0; i < vars_.size(); ++i) {
            if ((int)i == summation_) continue;
            param_slot_[i] = (int)param_names_.size();
            param_names_.push_back(vars_[i].name);
        }
    }

    int num_vars() const { return (int)vars_.size(); }
    int width() const { return (int)param_names_.size(); }
    int summation_index() const { return summation_; }
    const VariableSpec& var(int i) const { return vars_[i]; }
    const std::vector<VariableSpec>& vars() const { return vars_; }
    const std::vector<std::string>& param_names() const { return param_names_; }
    const std::vector<std::string>& free_params() const { return free_params_; }
    int param_slot(int var_index) const { return param_slot_[var_index]; }
    const std::string& summation_name() const { return vars_[summation_].name; }

    // sigma_i on coefficients
    RationalFunction sigma(int i, const RationalFunction& f) const {
        if (vars_[i].action == VarAction::Diff) return f;
        if (i == summation_) return f.shift_n(1);
        return f.param_shift(param_slot_[i], 1);
    }
    // delta_i on coefficients (zero for shifts)
    RationalFunction delta(int i, const RationalFunction& f) const {
        if (vars_[i].action == VarAction::Shift) return RationalFunction(width());
        return f.param_derivative(param_slot_[i]);
    }

    RationalFunction zero_rf() const { return RationalFunction(width()); }
    RationalFunction one_rf() const { return RationalFunction(width(), Rat(1)); }

private:
    std::vector<VariableSpec> vars_;
    std::vector<std::string> free_params_;
    std::vector<std::string> param_names_;
    std::vector<int> param_slot_;
    int summation_ = -1;
};

using AlgebraPtr = std::shared_ptr<const OreAlgebra>;

// An element of the Ore algebra: exponent vector -> coefficient in K(n).
class OreOperator {
public:
    OreOperator() = default;
    explicit OreOperator(AlgebraPtr alg) : alg_(std::move(alg)) {}
    OreOperator(AlgebraPtr alg, const RationalFunction& c) : alg_(std::move(alg)) {
        if (!c.is_zero()) terms_[ExpVec(alg_->num_vars(), 0)] = c;
    }

    static OreOperator monomial(AlgebraPtr alg, const ExpVec& e,
                                const RationalFunction& c) {
        OreOperator r(alg);
        if (!c.is_zero()) r.terms_[e] = c;
        return r;
    }
    static OreOperator generator(AlgebraPtr alg, int var) {
        ExpVec e(alg->num_vars(), 0);
        e[var] = 1;
        return monomial(alg, e, alg->one_rf());
    }

    const AlgebraPtr& algebra() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExpVec, RationalFunction, GrevlexLess>& terms() const { return terms_; }

    bool is_scalar() const {
        return terms_.empty() ||
               (terms_.size() == 1 && expvec_total_degree(terms_.begin()->first) == 0);
    }
    RationalFunction scalar_value() const {
        if (terms_.empty()) return alg_->zero_rf();
        assert(is_scalar());
        return terms_.begin()->second;
    }
    bool is_monomial_one() const {
        return terms_.size() == 1 && terms_.begin()->second.is_one();
    }

    const ExpVec& leading_monomial() const {
        assert(!terms_.empty());
        return terms_.rbegin()->first;
    }
    const RationalFunction& leading_coeff() const {
        assert(!terms_.empty());
        return terms_.rbegin()->second;
    }

    friend OreOperator operator+(const OreOperator& a, const OreOperator& b) {
        OreOperator r = a;
        for (const auto& [e, c] : b.terms_) {
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_[e] = c;
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        if (!r.alg_) r.alg_ = b.alg_;
        return r;
    }
    friend OreOperator operator-(const OreOperator& a) {
        OreOperator r = a;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend OreOperator operator-(const OreOperator& a, const OreOperator& b) { return a + (-b); }

    OreOperator scaled_left(const RationalFunction& c) const {
        OreOperator r(alg_);
        if (c.is_zero()) return r;
        for (const auto& [e, v] : terms_) r.terms_[e] = c * v;
        return r;
    }

    // d_i * (this), one commutation step
    OreOperator apply_generator(int i) const {
        OreOperator r(alg_);
        for (const auto& [e, c] : terms_) {
            RationalFunction sc = alg_->sigma(i, c);
            if (!sc.is_zero()) {
                ExpVec e2 = e;
                e2[i] += 1;
                r.add_term(e2, sc);
            }
            RationalFunction dc = alg_->delta(i, c);
            if (!dc.is_zero()) r.add_term(e, dc);
        }
        return r;
    }

    friend OreOperator operator*(const OreOperator& a, const OreOperator& b) {
        assert(a.alg_ == b.alg_ || !a.alg_ || !b.alg_);
        AlgebraPtr alg = a.alg_ ? a.alg_ : b.alg_;
        OreOperator r(alg);
        for (const auto& [e, c] : a.terms_) {
            OreOperator t = b;
            for (int i = 0; i < alg->num_vars(); ++i)
                for (int k = 0; k < e[i]; ++k) t = t.apply_generator(i);
            r = r + t.scaled_left(c);
        }
        return r;
    }

    OreOperator& operator+=(const OreOperator& b) { return *this = *this + b; }
    OreOperator& operator-=(const OreOperator& b) { return *this = *this - b; }
    OreOperator& operator*=(const OreOperator& b) { return *this = *this * b; }

    bool operator==(const OreOperator& o) const { return terms_ == o.terms_; }
    bool operator!=(const OreOperator& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void add_term(const ExpVec& e, const RationalFunction& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AlgebraPtr alg_;
    std::map<ExpVec, RationalFunction, GrevlexLess> terms_;
};

inline std::string monomial_to_string(const OreAlgebra& alg, const ExpVec& e) {
    std::string out;
    for (int i = 0; i < alg.num_vars(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += (alg.var(i).action == VarAction::Shift ? "S" : "D") + alg.var(i).name;
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

inline std::string OreOperator::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // grevlex descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string cs = it->second.to_string(alg_->summation_name(), alg_->param_names());
        std::string mono = monomial_to_string(*alg_, it->first);
        bool neg = !cs.empty() && cs[0] == '-';
        std::string body;
        bool coeff_is_one = it->second.is_one();
        bool coeff_is_minus_one = (-it->second).is_one();
        if (mono == "1") {
            body = cs;
            neg = false; // sign already embedded
        } else if (coeff_is_one) {
            body = mono;
            neg = false;
        } else if (coeff_is_minus_one) {
            body = "-" + mono;
            neg = false;
        } else {
            bool paren = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
            body = (paren ? "(" + cs + ")" : cs) + "*" + mono;
            neg = false;
        }
        if (out.empty()) {
            out = body;
        } else if (!body.empty() && body[0] == '-') {
            out += " - " + body.substr(1);
        } else {
            out += " + " + body;
        }
    }
    return out;
}

} // namespace telesum

#endif
