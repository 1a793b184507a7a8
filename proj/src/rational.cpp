#include "curva/rational.hpp"

#include <sstream>

namespace curva {

UPoly::UPoly(Rat constant) {
    if (!curva::is_zero(constant)) c_.push_back(std::move(constant));
}

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::t(int power) {
    if (power < 0) throw std::invalid_argument("UPoly::t needs power >= 0");
    std::vector<Rat> c(power + 1, Rat(0));
    c[power] = 1;
    return UPoly(std::move(c));
}

void UPoly::trim() {
    while (!c_.empty() && curva::is_zero(c_.back())) c_.pop_back();
}

Rat UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[k];
}

Rat UPoly::lc() const { return c_.empty() ? Rat(0) : c_.back(); }

UPoly UPoly::operator-() const {
    UPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(c));
}

UPoly UPoly::scaled(const Rat& s) const {
    if (curva::is_zero(s)) return UPoly();
    UPoly r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / lc());
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UPoly division by zero");
    UPoly rem(*this);
    std::vector<Rat> q(std::max<int>(degree() - d.degree() + 1, 0), Rat(0));
    const Rat dlc = d.lc();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int shift = rem.degree() - d.degree();
        Rat f = rem.lc() / dlc;
        q[shift] = f;
        // rem -= f * t^shift * d
        for (int i = 0; i <= d.degree(); ++i)
            rem.c_[i + shift] -= f * d.c_[i];
        rem.trim();
    }
    return {UPoly(std::move(q)), rem};
}

UPoly UPoly::exact_div(const UPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("UPoly exact_div has a remainder");
    return q;
}

Rat UPoly::eval(const Rat& t0) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t0 + *it;
    return acc;
}

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& a = c_[k];
        if (curva::is_zero(a)) continue;
        Rat mag = abs(a);
        if (first) {
            if (sgn(a) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (k == 0) {
            os << mag.get_str();
        } else {
            if (!unit) os << mag.get_str() << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();  // monic remainders keep coefficient growth in check
    }
    return a.monic();
}

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc with zero denominator");
    norm();
}

RatFunc RatFunc::t(int power) {
    RatFunc r;
    if (power >= 0) {
        r.num_ = UPoly::t(power);
        r.den_ = UPoly(Rat(1));
    } else {
        r.num_ = UPoly(Rat(1));
        r.den_ = UPoly::t(-power);
    }
    return r;
}

void RatFunc::norm() {
    if (num_.is_zero()) {
        den_ = UPoly(Rat(1));
        return;
    }
    UPoly g = upoly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    Rat c = den_.lc();
    if (c != 1) {
        Rat ic = Rat(1) / c;
        num_ = num_.scaled(ic);
        den_ = den_.scaled(ic);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::domain_error("RatFunc inverse of zero");
    return RatFunc(den_, num_);
}

std::optional<Rat> RatFunc::eval(const Rat& t0) const {
    Rat d = den_.eval(t0);
    if (curva::is_zero(d)) return std::nullopt;
    return num_.eval(t0) / d;
}

std::string RatFunc::str() const {
    if (den_.degree() == 0) {
        // denominator is 1 after normalization
        return num_.str();
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace curva
