#include "dvbp/vec.hpp"

#include "dvbp/error.hpp"

namespace dvbp {

namespace {

void require_same_dim(const SizeVec& a, const SizeVec& b) {
    if (a.dim() != b.dim()) {
        fail(ErrorCode::Usage, "dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
}

}  // namespace

SizeVec& SizeVec::operator+=(const SizeVec& o) {
    require_same_dim(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

SizeVec& SizeVec::operator-=(const SizeVec& o) {
    require_same_dim(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

SizeVec operator*(const Scalar& k, SizeVec v) {
    for (auto& c : v.c_) c *= k;
    return v;
}

std::string SizeVec::str() const {
    std::string out = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ", ";
        out += c_[i].str();
    }
    return out + "]";
}

Scalar linf_norm(const SizeVec& v) {
    if (v.empty()) fail(ErrorCode::Usage, "linf_norm of an empty vector");
    Scalar best = v[0];
    for (const auto& c : v) best = max(best, c);
    return best;
}

Scalar component_sum(const SizeVec& v) {
    Scalar total;
    for (const auto& c : v) total += c;
    return total;
}

SizeVec vec_sum(std::span<const SizeVec> vs, size_t dim) {
    SizeVec total(dim);
    for (const auto& v : vs) {
        if (v.dim() != dim) {
            fail(ErrorCode::Usage, "vec_sum: vector of dimension " + std::to_string(v.dim()) + " in a sum over dimension " +
                                       std::to_string(dim));
        }
        total += v;
    }
    return total;
}

bool fits(const SizeVec& load, const SizeVec& item_size, const SizeVec& capacity) {
    require_same_dim(load, item_size);
    require_same_dim(load, capacity);
    for (size_t j = 0; j < load.dim(); ++j) {
        if (load[j] + item_size[j] > capacity[j]) return false;
    }
    return true;
}

}  // namespace dvbp
