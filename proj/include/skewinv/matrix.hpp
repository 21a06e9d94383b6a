#pragma once

#include <vector>

#include "skewinv/errors.hpp"

namespace skewinv {

// Dense square matrix over an arbitrary ring type T.
// The additive identity is supplied at construction because some entry
// types (polynomials) carry runtime shape that a default T() cannot know.
template <typename T>
class Mat {
public:
    Mat() : n_(0), zero_() {}
    Mat(int n, const T& zero) : n_(n), zero_(zero), e_(static_cast<size_t>(n) * n, zero) {}

    int n() const { return n_; }
    const T& zero() const { return zero_; }
    T& at(int r, int c) { return e_[static_cast<size_t>(r) * n_ + c]; }
    const T& at(int r, int c) const { return e_[static_cast<size_t>(r) * n_ + c]; }

    bool operator==(const Mat& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        if (n_ != o.n_) fail(ErrorKind::SizeMismatch, "matrix add size mismatch");
        Mat r = *this;
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = r.e_[k] + o.e_[k];
        return r;
    }

    Mat operator-(const Mat& o) const {
        if (n_ != o.n_) fail(ErrorKind::SizeMismatch, "matrix subtract size mismatch");
        Mat r = *this;
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = r.e_[k] - o.e_[k];
        return r;
    }

    Mat operator*(const Mat& o) const {
        if (n_ != o.n_) fail(ErrorKind::SizeMismatch, "matrix multiply size mismatch");
        Mat r(n_, zero_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const T& a = at(i, k);
                if (a == zero_) continue;
                for (int j = 0; j < n_; ++j) r.at(i, j) = r.at(i, j) + a * o.at(k, j);
            }
        return r;
    }

    Mat transposed() const {
        Mat r(n_, zero_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Mat scaled(const T& s) const {
        Mat r = *this;
        for (auto& v : r.e_) v = v * s;
        return r;
    }

    T trace() const {
        T t = zero_;
        for (int i = 0; i < n_; ++i) t = t + at(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& v : e_)
            if (!(v == zero_)) return false;
        return true;
    }

private:
    int n_;
    T zero_;
    std::vector<T> e_;
};

} // namespace skewinv
