#include "gforest/exact_ring.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace gforest {

namespace {

bool term_less(const Term& a, const Term& b) {
    return a.dq != b.dq ? a.dq < b.dq : a.dy < b.dy;
}

bool same_key(const Term& a, const Term& b) { return a.dq == b.dq && a.dy == b.dy; }

// a +/- b over sorted term lists
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && term_less(a[i], b[j]))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || term_less(b[j], a[i])) {
            out.push_back(b[j++]);
            if (subtract) out.back().coef = -out.back().coef;
        } else {
            Rational c = subtract ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
            if (sgn(c) != 0) out.push_back(Term{a[i].dy, a[i].dq, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

std::string monomial_text(int dy, int dq, bool latex) {
    std::string s;
    auto power = [&](char var, int e) {
        if (e == 0) return;
        s += var;
        if (e == 1) return;
        s += '^';
        if (latex && e >= 10) {
            s += '{' + std::to_string(e) + '}';
        } else {
            s += std::to_string(e);
        }
    };
    power('y', dy);
    power('q', dq);
    return s;
}

std::string render(const BivarPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& ts = p.terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        Rational c = it->coef;
        bool negative = sgn(c) < 0;
        if (negative) c = -c;
        if (it != ts.rbegin() || negative) out += negative ? '-' : '+';
        std::string mono = monomial_text(it->dy, it->dq, latex);
        if (mono.empty()) {
            out += c.get_str();
        } else {
            if (c != 1) {
                out += c.get_str();
                if (latex) out += ' ';
            }
            out += mono;
        }
    }
    return out;
}

} // namespace

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

BivarPoly::BivarPoly(long c) : BivarPoly(Rational(c)) {}

BivarPoly::BivarPoly(const Rational& c) {
    if (sgn(c) != 0) terms_.push_back(Term{0, 0, c});
}

BivarPoly BivarPoly::monomial(const Rational& c, int dy, int dq) {
    if (dy < 0 || dq < 0) throw std::invalid_argument("negative exponent in BivarPoly");
    BivarPoly p;
    if (sgn(c) != 0) p.terms_.push_back(Term{dy, dq, c});
    return p;
}

BivarPoly BivarPoly::from_terms(std::vector<Term> terms) {
    for (const auto& t : terms) {
        if (t.dy < 0 || t.dq < 0) throw std::invalid_argument("negative exponent in BivarPoly");
    }
    std::sort(terms.begin(), terms.end(), term_less);
    BivarPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && same_key(p.terms_.back(), t)) {
            p.terms_.back().coef += t.coef;
        } else {
            if (!p.terms_.empty() && sgn(p.terms_.back().coef) == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && sgn(p.terms_.back().coef) == 0) p.terms_.pop_back();
    return p;
}

bool BivarPoly::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return is_integer(t.coef); });
}

bool BivarPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].dy == 0 && terms_[0].dq == 0);
}

Rational BivarPoly::coefficient(int dy, int dq) const {
    Term key{dy, dq, Rational(0)};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key, term_less);
    if (it != terms_.end() && same_key(*it, key)) return it->coef;
    return 0;
}

int BivarPoly::max_dy() const {
    int m = 0;
    for (const auto& t : terms_) m = std::max(m, t.dy);
    return m;
}

int BivarPoly::max_dq() const { return terms_.empty() ? 0 : terms_.back().dq; }

BivarPoly BivarPoly::operator-() const {
    BivarPoly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    if (o.is_zero()) return *this;
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    if (o.is_zero()) return *this;
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& o) { return *this = *this * o; }

BivarPoly& BivarPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
    } else {
        for (auto& t : terms_) t.coef *= c;
    }
    return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const int ny = a.max_dy() + b.max_dy() + 1;
    const int nq = a.max_dq() + b.max_dq() + 1;
    const auto cell = [ny](int dy, int dq) { return static_cast<std::size_t>(dq) * ny + dy; };
    std::vector<Term> out;

    // Dense accumulation; the integral case stays in mpz with fused multiply-add.
    if (a.is_integral() && b.is_integral()) {
        std::vector<BigInt> acc(static_cast<std::size_t>(ny) * nq);
        for (const auto& ta : a.terms()) {
            for (const auto& tb : b.terms()) {
                mpz_addmul(acc[cell(ta.dy + tb.dy, ta.dq + tb.dq)].get_mpz_t(),
                           ta.coef.get_num_mpz_t(), tb.coef.get_num_mpz_t());
            }
        }
        for (int dq = 0; dq < nq; ++dq) {
            for (int dy = 0; dy < ny; ++dy) {
                auto& c = acc[cell(dy, dq)];
                if (sgn(c) != 0) out.push_back(Term{dy, dq, Rational(c)});
            }
        }
    } else {
        std::vector<Rational> acc(static_cast<std::size_t>(ny) * nq);
        Rational tmp;
        for (const auto& ta : a.terms()) {
            for (const auto& tb : b.terms()) {
                mpq_mul(tmp.get_mpq_t(), ta.coef.get_mpq_t(), tb.coef.get_mpq_t());
                auto& slot = acc[cell(ta.dy + tb.dy, ta.dq + tb.dq)];
                mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), tmp.get_mpq_t());
            }
        }
        for (int dq = 0; dq < nq; ++dq) {
            for (int dy = 0; dy < ny; ++dy) {
                auto& c = acc[cell(dy, dq)];
                if (sgn(c) != 0) out.push_back(Term{dy, dq, std::move(c)});
            }
        }
    }
    BivarPoly p;
    p.terms_ = std::move(out);
    return p;
}

bool operator==(const BivarPoly& a, const BivarPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (x.dy != y.dy || x.dq != y.dq || x.coef != y.coef) return false;
    }
    return true;
}

BivarPoly BivarPoly::eval_q(const Rational& v) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Rational c = t.coef;
        Rational f = 1;
        for (int i = 0; i < t.dq; ++i) f *= v;
        out.push_back(Term{t.dy, 0, c * f});
    }
    return from_terms(std::move(out));
}

BivarPoly BivarPoly::eval_y(const Rational& v) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Rational f = 1;
        for (int i = 0; i < t.dy; ++i) f *= v;
        out.push_back(Term{0, t.dq, t.coef * f});
    }
    return from_terms(std::move(out));
}

BivarPoly BivarPoly::y_slice(int dy) const {
    BivarPoly p;
    for (const auto& t : terms_) {
        if (t.dy == dy) p.terms_.push_back(Term{0, t.dq, t.coef});
    }
    return p;
}

BivarPoly pow(const BivarPoly& p, unsigned e) {
    BivarPoly result(1L);
    BivarPoly base = p;
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

std::string to_string(const BivarPoly& p) { return render(p, false); }

std::string to_latex(const BivarPoly& p) { return render(p, true); }

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_json(const BivarPoly& p) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& t : p.terms()) {
        j.push_back({{"dy", t.dy}, {"dq", t.dq}, {"num", t.coef.get_num().get_str()}, {"den", t.coef.get_den().get_str()}});
    }
    return j.dump();
}

} // namespace gforest
