#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "dvbp/scalar.hpp"

namespace dvbp {

// A d-dimensional vector of Scalars. Used both for item sizes (components in
// [0, capacity]) and for bin loads (sums of sizes).
class SizeVec {
public:
    SizeVec() = default;
    explicit SizeVec(size_t dim) : c_(dim) {}
    SizeVec(size_t dim, const Scalar& fill) : c_(dim, fill) {}
    SizeVec(std::initializer_list<Scalar> init) : c_(init) {}
    explicit SizeVec(std::vector<Scalar> comps) : c_(std::move(comps)) {}

    static SizeVec ones(size_t dim) { return SizeVec(dim, Scalar(1)); }

    size_t dim() const noexcept { return c_.size(); }
    bool empty() const noexcept { return c_.empty(); }

    const Scalar& operator[](size_t i) const { return c_[i]; }
    Scalar& operator[](size_t i) { return c_[i]; }

    auto begin() const noexcept { return c_.begin(); }
    auto end() const noexcept { return c_.end(); }
    std::span<const Scalar> components() const noexcept { return c_; }

    SizeVec& operator+=(const SizeVec& o);
    SizeVec& operator-=(const SizeVec& o);
    friend SizeVec operator+(SizeVec a, const SizeVec& b) { return a += b; }
    friend SizeVec operator-(SizeVec a, const SizeVec& b) { return a -= b; }
    friend SizeVec operator*(const Scalar& k, SizeVec v);

    friend bool operator==(const SizeVec&, const SizeVec&) = default;

    // "[a, b, c]" with canonical Scalars.
    std::string str() const;

private:
    std::vector<Scalar> c_;
};

// Largest component. Throws Usage on an empty vector.
Scalar linf_norm(const SizeVec& v);

// Plain component sum (the L1 norm for nonnegative vectors).
Scalar component_sum(const SizeVec& v);

// Componentwise sum of vectors that all have dimension `dim`.
SizeVec vec_sum(std::span<const SizeVec> vs, size_t dim);

// True iff load_j + size_j <= capacity_j in every dimension. Exact fill fits.
bool fits(const SizeVec& load, const SizeVec& item_size, const SizeVec& capacity);

}  // namespace dvbp
