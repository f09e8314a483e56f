#include "hopfoid/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopfoid {

int VarTable::index(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

VarTablePtr make_vars(std::vector<std::pair<std::string, bool>> spec) {
    auto t = std::make_shared<VarTable>();
    for (auto& [name, inv] : spec) {
        t->names.push_back(name);
        t->invertible.push_back(inv);
    }
    return t;
}

MultiPoly::MultiPoly(VarTablePtr vars) : vars_(std::move(vars)) {
    if (!vars_) throw std::domain_error("MultiPoly: null variable table");
}

MultiPoly MultiPoly::constant(VarTablePtr vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_[Exps(p.vars_->size(), 0)] = c;
    return p;
}

MultiPoly MultiPoly::var(VarTablePtr vars, int index, int exp) {
    MultiPoly p(std::move(vars));
    if (index < 0 || index >= p.vars_->size()) throw std::domain_error("MultiPoly: bad variable index");
    if (exp < 0 && !p.vars_->invertible[index])
        throw std::domain_error("MultiPoly: negative exponent on non-invertible generator " +
                                p.vars_->names[index]);
    Exps e(p.vars_->size(), 0);
    e[index] = exp;
    p.terms_[std::move(e)] = Rational(1);
    return p;
}

MultiPoly MultiPoly::monomial(VarTablePtr vars, const Rational& c, Exps exps) {
    MultiPoly p(std::move(vars));
    if (static_cast<int>(exps.size()) != p.vars_->size())
        throw std::domain_error("MultiPoly: exponent vector size mismatch");
    for (int i = 0; i < p.vars_->size(); ++i)
        if (exps[i] < 0 && !p.vars_->invertible[i])
            throw std::domain_error("MultiPoly: negative exponent on non-invertible generator " +
                                    p.vars_->names[i]);
    if (!c.is_zero()) p.terms_[std::move(exps)] = c;
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Exps& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("MultiPoly: not a constant");
    return terms_.begin()->second;
}

bool MultiPoly::is_unit_monomial() const {
    if (terms_.size() != 1) return false;
    const Exps& e = terms_.begin()->first;
    for (int i = 0; i < vars_->size(); ++i)
        if (e[i] != 0 && !vars_->invertible[i]) return false;
    return true;
}

int MultiPoly::total_degree() const {
    int best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        if (first || d > best) best = d;
        first = false;
    }
    return best;
}

int MultiPoly::max_exponent(int var) const {
    int best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, e[var]);
    return best;
}

Rational MultiPoly::coeff(const Exps& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::check_same_table(const MultiPoly& o) const {
    if (vars_ != o.vars_ && !(*vars_ == *o.vars_))
        throw std::domain_error("MultiPoly: incompatible generator tables");
}

void MultiPoly::add_term(const Exps& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_table(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_table(o);
    MultiPoly r(vars_);
    Exps e(vars_->size());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < vars_->size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(vars_);
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& [e, k] : r.terms_) k *= c;
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_table(b);
    return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    MultiPoly acc = constant(vars_, Rational(1)), base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

MultiPoly MultiPoly::inverse() const {
    if (!is_unit_monomial())
        throw std::domain_error("MultiPoly: inverse of a non-unit");
    const auto& [e, c] = *terms_.begin();
    Exps inv = e;
    for (auto& k : inv) k = -k;
    return monomial(vars_, c.inverse(), std::move(inv));
}

MultiPoly MultiPoly::partial_derivative(int var) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exps d = e;
        d[var] -= 1;
        r.add_term(d, c * Rational(e[var]));
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != vars_->size())
        throw std::domain_error("MultiPoly: substitution image count mismatch");
    for (size_t i = 1; i < images.size(); ++i) images[0].check_same_table(images[i]);
    VarTablePtr target = images.empty() ? vars_ : images[0].vars();
    MultiPoly r(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(target, c);
        for (int i = 0; i < vars_->size(); ++i) {
            if (e[i] == 0) continue;
            term = term * images[i].pow(e[i]);
        }
        r = r + term;
    }
    return r;
}

std::map<int, MultiPoly> MultiPoly::decompose_by(int var) const {
    std::map<int, MultiPoly> parts;
    for (const auto& [e, c] : terms_) {
        int k = e[var];
        auto it = parts.find(k);
        if (it == parts.end()) it = parts.emplace(k, MultiPoly(vars_)).first;
        Exps rest = e;
        rest[var] = 0;
        it->second.add_term(rest, c);
    }
    return parts;
}

bool MultiPoly::exps_less(const Exps& a, const Exps& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    // Same total degree: the vector with the larger exponent at the first
    // differing generator sorts earlier.
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
    check_same_table(d);
    if (d.is_zero()) throw std::domain_error("MultiPoly: division by zero");
    auto leading = [](const MultiPoly& p) {
        auto best = p.terms_.begin();
        for (auto it = std::next(p.terms_.begin()); it != p.terms_.end(); ++it)
            if (exps_less(best->first, it->first)) best = it;
        return best;
    };
    for (const auto& [e, c] : terms_)
        for (int k : e)
            if (k < 0) throw std::domain_error("MultiPoly: divide_exact needs nonnegative exponents");
    for (const auto& [e, c] : d.terms_)
        for (int k : e)
            if (k < 0) throw std::domain_error("MultiPoly: divide_exact needs nonnegative exponents");
    MultiPoly rem = *this, quo(vars_);
    auto dl = leading(d);
    while (!rem.is_zero()) {
        auto rl = leading(rem);
        Exps q = rl->first;
        bool divides = true;
        for (int i = 0; i < vars_->size(); ++i) {
            q[i] -= dl->first[i];
            if (q[i] < 0) divides = false;
        }
        if (!divides) return std::nullopt;
        MultiPoly qt = monomial(vars_, rl->second / dl->second, std::move(q));
        quo = quo + qt;
        rem = rem - qt * d;
    }
    return quo;
}

UniPoly MultiPoly::to_unipoly() const {
    int active = -1;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < vars_->size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0) throw std::domain_error("MultiPoly: to_unipoly with negative exponent");
            if (active == -1) active = i;
            if (active != i) throw std::domain_error("MultiPoly: to_unipoly on multivariate value");
        }
    UniPoly r;
    for (const auto& [e, c] : terms_)
        r += UniPoly::monomial(c, active < 0 ? 0 : e[active]);
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> ordered;
    ordered.reserve(terms_.size());
    for (const auto& t : terms_) ordered.push_back(&t);
    std::sort(ordered.begin(), ordered.end(),
              [](auto* a, auto* b) { return exps_less(a->first, b->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ordered) {
        const auto& [e, c] = *t;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational a = c.abs();
        bool trivial_monomial = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
        std::ostringstream mono;
        bool firstvar = true;
        for (int i = 0; i < vars_->size(); ++i) {
            if (e[i] == 0) continue;
            if (!firstvar) mono << "*";
            mono << vars_->names[i];
            if (e[i] != 1) mono << "^" << e[i];
            firstvar = false;
        }
        if (trivial_monomial) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << mono.str();
        }
        first = false;
    }
    return os.str();
}

std::vector<MultiPoly> identity_images(const VarTablePtr& vars) {
    std::vector<MultiPoly> r;
    for (int i = 0; i < vars->size(); ++i) r.push_back(MultiPoly::var(vars, i));
    return r;
}

}  // namespace hopfoid
