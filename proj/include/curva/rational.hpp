#pragma once

// Exact scalar arithmetic: arbitrary-precision rationals (GMP) and rational
// functions in a single parameter t over Q. Both are plain value types.
// RatFunc keeps num/den coprime with a monic denominator, so operator== is
// structural equality of normal forms.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace curva {

using Rat = mpq_class;

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }

inline Rat rat_from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (sgn(v.get_den()) == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
    v.canonicalize();
    return v;
}

inline std::string to_string(const Rat& a) { return a.get_str(); }

// Dense univariate polynomial in t over Q. c[k] is the coefficient of t^k;
// trailing zeros are trimmed and the zero polynomial is the empty vector.
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(Rat constant);
    explicit UPoly(std::vector<Rat> coeffs);

    static UPoly t(int power = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const;
    Rat lc() const;  // leading coefficient; 0 for the zero polynomial

    UPoly operator-() const;
    UPoly operator+(const UPoly&) const;
    UPoly operator-(const UPoly&) const;
    UPoly operator*(const UPoly&) const;
    UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
    bool operator==(const UPoly&) const = default;

    UPoly scaled(const Rat&) const;
    UPoly monic() const;
    // Quotient and remainder; requires a nonzero divisor.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    // Exact quotient; throws if the division leaves a remainder.
    UPoly exact_div(const UPoly& d) const;
    Rat eval(const Rat& t0) const;
    std::string str() const;

  private:
    void trim();
    std::vector<Rat> c_;
};

// Monic gcd via the Euclidean algorithm (gcd(0,0) = 0).
UPoly upoly_gcd(UPoly a, UPoly b);

// Element of Q(t) in lowest terms with a monic denominator.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(Rat constant) : num_(std::move(constant)), den_(Rat(1)) { norm(); }
    RatFunc(UPoly num) : num_(std::move(num)), den_(Rat(1)) { norm(); }
    RatFunc(UPoly num, UPoly den);

    static RatFunc t(int power = 1);  // negative powers land in the denominator
    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Rat(1)); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc&) const;
    RatFunc operator-(const RatFunc&) const;
    RatFunc operator*(const RatFunc&) const;
    RatFunc operator/(const RatFunc&) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    bool operator==(const RatFunc&) const = default;

    RatFunc inv() const;
    // Evaluation at t = t0; nullopt when t0 is a pole.
    std::optional<Rat> eval(const Rat& t0) const;
    std::string str() const;

  private:
    void norm();
    UPoly num_, den_;
};

// Uniform field interface used by the templated linear algebra and Groebner
// code. Specialized for Rat and RatFunc.
template <class K>
struct FieldOps;

template <>
struct FieldOps<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& a) { return sgn(a) == 0; }
    static Rat inv(const Rat& a) {
        if (is_zero(a)) throw std::domain_error("division by zero");
        return Rat(1) / a;
    }
    static Rat from_long(long v) { return Rat(v); }
    static std::string str(const Rat& a) { return a.get_str(); }
};

template <>
struct FieldOps<RatFunc> {
    static RatFunc zero() { return RatFunc::zero(); }
    static RatFunc one() { return RatFunc::one(); }
    static bool is_zero(const RatFunc& a) { return a.is_zero(); }
    static RatFunc inv(const RatFunc& a) { return a.inv(); }
    static RatFunc from_long(long v) { return RatFunc(Rat(v)); }
    static std::string str(const RatFunc& a) { return a.str(); }
};

}  // namespace curva
