#pragma once

#include <optional>
#include <utility>

#include "csl/errors.hpp"
#include "csl/numeric.hpp"

// Exact scalars r + s*sqrt(d) over a fixed square-free radicand d, or plain
// rationals when no radicand is set. One radicand per context; arithmetic
// between distinct quadratic fields is rejected, rationals coerce anywhere.

namespace csl {

class FieldContext {
public:
    // Rational-only context.
    FieldContext() = default;

    static FieldContext rationals() { return FieldContext(); }

    static FieldContext quadratic(long long d) {
        if (d < 2 || !is_square_free(d))
            throw invalid_radicand("radicand must be a square-free integer >= 2, got " +
                                   std::to_string(d));
        FieldContext c;
        c.d_ = d;
        return c;
    }

    bool is_quadratic() const { return d_ != 0; }
    long long radicand() const { return d_; }

    friend bool operator==(const FieldContext&, const FieldContext&) = default;

private:
    long long d_ = 0; // 0 marks rational-only
};

// Common context of two operands; rational-only coerces into quadratic.
inline FieldContext unify(const FieldContext& a, const FieldContext& b) {
    if (a == b) return a;
    if (!a.is_quadratic()) return b;
    if (!b.is_quadratic()) return a;
    throw field_mismatch("cannot mix sqrt(" + std::to_string(a.radicand()) + ") with sqrt(" +
                         std::to_string(b.radicand()) + ")");
}

class FieldElement {
public:
    FieldElement() = default; // rational zero

    // Rational value in a rational-only context.
    FieldElement(Rational r) : r_(std::move(r)) {}
    FieldElement(const Int& n) : r_(n) {}
    FieldElement(int n) : r_(n) {}
    FieldElement(long long n) : r_(n) {}

    FieldElement(Rational r, Rational s, const FieldContext& ctx)
        : ctx_(ctx), r_(std::move(r)), s_(std::move(s)) {
        if (!ctx_.is_quadratic() && s_ != 0)
            throw field_mismatch("surd component in a rational-only context");
    }

    // r + s*sqrt(d)
    static FieldElement quadratic(Rational r, Rational s, long long d) {
        return FieldElement(std::move(r), std::move(s), FieldContext::quadratic(d));
    }

    static FieldElement sqrt_of_radicand(const FieldContext& ctx) {
        if (!ctx.is_quadratic()) throw field_mismatch("rational-only context has no radicand");
        return FieldElement(Rational(0), Rational(1), ctx);
    }

    const FieldContext& context() const { return ctx_; }
    const Rational& rational_part() const { return r_; }
    const Rational& surd_part() const { return s_; }

    bool is_zero() const { return r_ == 0 && s_ == 0; }
    bool is_rational() const { return s_ == 0; }

    // Value as a rational; caller must ensure is_rational().
    const Rational& as_rational() const {
        if (!is_rational()) throw irrational_entries("value has a surd component");
        return r_;
    }

    FieldElement coerced(const FieldContext& target) const {
        return FieldElement(r_, s_, unify(ctx_, target));
    }

    // Exact sign of the real value r + s*sqrt(d).
    int sign() const {
        int sr = sign_of(r_);
        int ss = sign_of(s_);
        if (ss == 0) return sr;
        if (sr == 0) return ss;
        if (sr == ss) return sr;
        // Opposite signs: compare r^2 against s^2 * d.
        Rational r2 = r_ * r_;
        Rational s2d = s_ * s_ * Rational(ctx_.radicand());
        if (r2 == s2d) return 0; // unreachable for square-free d >= 2, kept for safety
        bool r_dominates = r2 > s2d;
        return r_dominates ? sr : ss;
    }

    FieldElement operator-() const { return FieldElement(-r_, -s_, ctx_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        return FieldElement(a.r_ + b.r_, a.s_ + b.s_, unify(a.ctx_, b.ctx_));
    }

    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        return FieldElement(a.r_ - b.r_, a.s_ - b.s_, unify(a.ctx_, b.ctx_));
    }

    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        FieldContext ctx = unify(a.ctx_, b.ctx_);
        Rational d(ctx.is_quadratic() ? ctx.radicand() : 0);
        return FieldElement(a.r_ * b.r_ + a.s_ * b.s_ * d, a.r_ * b.s_ + a.s_ * b.r_, ctx);
    }

    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        FieldContext ctx = unify(a.ctx_, b.ctx_);
        if (b.is_zero()) throw division_by_zero("division by zero");
        Rational d(ctx.is_quadratic() ? ctx.radicand() : 0);
        // Multiply by the conjugate; the norm r^2 - s^2 d vanishes only at 0.
        Rational norm = b.r_ * b.r_ - b.s_ * b.s_ * d;
        return FieldElement((a.r_ * b.r_ - a.s_ * b.s_ * d) / norm,
                            (a.s_ * b.r_ - a.r_ * b.s_) / norm, ctx);
    }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    // Value equality. Elements of distinct quadratic fields are equal only
    // when both are rational (Q(sqrt(d)) and Q(sqrt(d')) meet in Q).
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        if (a.s_ == 0 && b.s_ == 0) return a.r_ == b.r_;
        return a.ctx_ == b.ctx_ && a.r_ == b.r_ && a.s_ == b.s_;
    }

    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    FieldContext ctx_;
    Rational r_;
    Rational s_;
};

inline FieldElement abs_of(const FieldElement& x) { return x.sign() < 0 ? -x : x; }

// Exact square root within the element's own field, when one exists.
// Handles: rational squares, d * (rational square), and genuine quadratic
// elements (x + y*sqrt(d))^2 = r + s*sqrt(d).
inline std::optional<FieldElement> field_sqrt(const FieldElement& v) {
    if (v.sign() < 0) return std::nullopt;
    const FieldContext& ctx = v.context();
    const Rational& r = v.rational_part();
    const Rational& s = v.surd_part();
    if (s == 0) {
        if (auto root = exact_sqrt(r))
            return FieldElement(*root, Rational(0), ctx);
        if (ctx.is_quadratic()) {
            // r = d * k^2 gives sqrt(r) = k * sqrt(d).
            if (auto k = exact_sqrt(r / Rational(ctx.radicand())))
                return FieldElement(Rational(0), *k, ctx);
        }
        return std::nullopt;
    }
    // (x + y sqrt(d))^2 = x^2 + y^2 d + 2xy sqrt(d): need the norm
    // r^2 - s^2 d to be a rational square t^2, then x^2 = (r +- t)/2.
    Rational d(ctx.radicand());
    auto t = exact_sqrt(r * r - s * s * d);
    if (!t) return std::nullopt;
    for (const Rational& half : {Rational((r + *t) / 2), Rational((r - *t) / 2)}) {
        auto x = exact_sqrt(half);
        if (!x || *x == 0) continue;
        Rational y = s / (2 * *x);
        FieldElement cand(*x, y, ctx);
        if (cand * cand == v) return cand.sign() >= 0 ? cand : -cand;
    }
    return std::nullopt;
}

} // namespace csl
