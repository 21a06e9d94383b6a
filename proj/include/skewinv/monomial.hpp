#pragma once

#include <cstdint>
#include <cstring>
#include <functional>

#include "skewinv/errors.hpp"

namespace skewinv {

// Exponent vector with inline storage.  Slot 0 holds the exponent of the
// largest variable, so byte-lexicographic comparison of equal-degree
// monomials realizes the paper's order and hterm = maximum term.
class Monomial {
public:
    static constexpr int kMaxVars = 45;

    Monomial() = default;

    explicit Monomial(int nvars) : nv_(static_cast<uint8_t>(nvars)) {
        if (nvars < 0 || nvars > kMaxVars) fail(ErrorKind::Usage, "variable count out of range");
        std::memset(e_, 0, sizeof(e_));
    }

    int nvars() const { return nv_; }
    int deg() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    uint8_t operator[](int idx) const { return e_[idx]; }

    void bump(int idx, int by = 1) {
        int v = e_[idx] + by;
        if (v < 0 || v > 255) fail(ErrorKind::DegreeBoundExceeded, "exponent out of range");
        e_[idx] = static_cast<uint8_t>(v);
        deg_ += by;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(nv_);
        for (int t = 0; t < nv_; ++t) {
            int v = e_[t] + o.e_[t];
            if (v > 255) fail(ErrorKind::DegreeBoundExceeded, "exponent out of range");
            r.e_[t] = static_cast<uint8_t>(v);
        }
        r.deg_ = deg_ + o.deg_;
        return r;
    }

    // Graded order: higher total degree first, then exponent-vector
    // lexicographic with the larger variable dominating.
    friend int cmp(const Monomial& a, const Monomial& b) {
        if (a.deg_ != b.deg_) return a.deg_ < b.deg_ ? -1 : 1;
        return std::memcmp(a.e_, b.e_, a.nv_);
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.deg_ == b.deg_ && std::memcmp(a.e_, b.e_, a.nv_) == 0;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Monomial& a, const Monomial& b) { return cmp(a, b) > 0; }

    size_t hash() const {
        uint64_t h = 1469598103934665603ull ^ static_cast<uint64_t>(nv_);
        for (int t = 0; t < nv_; ++t) {
            h ^= e_[t];
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }

private:
    int16_t deg_ = 0;
    uint8_t nv_ = 0;
    uint8_t e_[kMaxVars] = {};
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace skewinv
