#include "sheetlab/multi_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sheetlab {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) {
        throw std::out_of_range("variable index out of range");
    }
    Exponents e(nvars, 0);
    e[index] = 1;
    MultiPoly p(nvars);
    p.add_term(e, Rational(1));
    return p;
}

MultiPoly MultiPoly::term(Exponents exponents, const Rational& c) {
    MultiPoly p(exponents.size());
    p.add_term(exponents, c);
    return p;
}

void MultiPoly::adopt_arity(const MultiPoly& other) {
    if (nvars_ == other.nvars_ || other.terms_.empty()) {
        if (terms_.empty() && nvars_ == 0) {
            nvars_ = other.nvars_;
        }
        return;
    }
    if (terms_.empty()) {
        nvars_ = other.nvars_;
        return;
    }
    throw std::invalid_argument("MultiPoly: mismatched variable counts");
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

std::size_t MultiPoly::degree_in(std::size_t var) const {
    std::size_t d = 0;
    for (const auto& [e, c] : terms_) {
        d = std::max<std::size_t>(d, e.at(var));
    }
    return d;
}

std::size_t MultiPoly::total_degree() const {
    std::size_t d = 0;
    for (const auto& [e, c] : terms_) {
        std::size_t s = 0;
        for (auto k : e) {
            s += k;
        }
        d = std::max(d, s);
    }
    return d;
}

std::vector<MultiPoly> MultiPoly::split_by(std::size_t var) const {
    if (var >= nvars_ && !terms_.empty()) {
        throw std::out_of_range("split variable out of range");
    }
    std::vector<MultiPoly> out((terms_.empty() ? 0 : degree_in(var)) + 1, MultiPoly(nvars_));
    for (const auto& [e, c] : terms_) {
        Exponents stripped = e;
        stripped[var] = 0;
        out[e[var]].add_term(stripped, c);
    }
    return out;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& values) const {
    if (values.size() != nvars_ && !terms_.empty()) {
        throw std::invalid_argument("evaluate: expected " + std::to_string(nvars_) + " values");
    }
    Rational acc;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] != 0) {
                term *= values[v].pow(e[v]);
            }
        }
        acc += term;
    }
    return acc;
}

std::string MultiPoly::to_string(const Namer& name) const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    // Graded lexicographic, largest first.
    std::vector<std::pair<const Exponents*, const Rational*>> order;
    for (const auto& [e, c] : terms_) {
        order.emplace_back(&e, &c);
    }
    auto total = [](const Exponents& e) {
        std::size_t s = 0;
        for (auto k : e) {
            s += k;
        }
        return s;
    };
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        const std::size_t da = total(*a.first);
        const std::size_t db = total(*b.first);
        return da != db ? da > db : *a.first > *b.first;
    });
    for (const auto& [ep, cp] : order) {
        const Exponents& e = *ep;
        const Rational& c = *cp;
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) {
                continue;
            }
            mono += (mono.empty() ? "" : "*") + name(v);
            if (e[v] > 1) {
                mono += "^" + std::to_string(e[v]);
            }
        }
        const Rational mag = c.abs();
        if (mono.empty()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += mono;
        } else {
            out += mag.to_string() + "*" + mono;
        }
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) {
        c = -c;
    }
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    adopt_arity(rhs);
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    adopt_arity(rhs);
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, -c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) {
        v *= c;
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return MultiPoly(std::max(a.nvars_, b.nvars_));
    }
    if (a.nvars_ != b.nvars_) {
        throw std::invalid_argument("MultiPoly: mismatched variable counts");
    }
    MultiPoly out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v) {
                e[v] = static_cast<std::uint16_t>(ea[v] + eb[v]);
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

}  // namespace sheetlab
