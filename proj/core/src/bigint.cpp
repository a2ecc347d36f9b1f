#include "oitm/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace oitm {

BigInt::BigInt(std::int64_t v) {
    negative_ = v < 0;
    std::uint64_t mag = negative_ ? -static_cast<std::uint64_t>(v)
                                  : static_cast<std::uint64_t>(v);
    while (mag) {
        limbs_.push_back(static_cast<std::uint32_t>(mag));
        mag >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    return 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
    BigInt out;
    out.limbs_.resize(std::max(a.limbs_.size(), b.limbs_.size()) + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < out.limbs_.size(); ++i) {
        std::uint64_t s = carry;
        if (i < a.limbs_.size()) s += a.limbs_[i];
        if (i < b.limbs_.size()) s += b.limbs_[i];
        out.limbs_[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    out.trim();
    return out;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
    BigInt out;
    out.limbs_.resize(a.limbs_.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                         (i < b.limbs_.size() ? b.limbs_[i] : 0);
        borrow = 0;
        if (d < 0) {
            d += std::int64_t{1} << 32;
            borrow = 1;
        }
        out.limbs_[i] = static_cast<std::uint32_t>(d);
    }
    out.trim();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.is_zero()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (negative_ == o.negative_) {
        BigInt out = add_mag(*this, o);
        out.negative_ = negative_;
        out.trim();
        return out;
    }
    int c = cmp_mag(*this, o);
    if (c == 0) return BigInt();
    BigInt out = c > 0 ? sub_mag(*this, o) : sub_mag(o, *this);
    out.negative_ = c > 0 ? negative_ : o.negative_;
    out.trim();
    return out;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt out;
    out.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] + carry +
                                static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j];
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + o.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    out.negative_ = negative_ != o.negative_;
    out.trim();
    return out;
}

bool BigInt::operator==(const BigInt& o) const {
    return negative_ == o.negative_ && limbs_ == o.limbs_;
}

bool BigInt::operator<(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_;
    int c = cmp_mag(*this, o);
    return negative_ ? c > 0 : c < 0;
}

std::uint32_t BigInt::divmod_small(std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

BigInt BigInt::shift_down_pow10(int e) const {
    BigInt out = *this;
    bool neg = out.negative_;
    out.negative_ = false;
    while (e >= 9) {
        out.divmod_small(1000000000u);
        e -= 9;
    }
    if (e > 0) {
        std::uint32_t d = 1;
        for (int i = 0; i < e; ++i) d *= 10;
        out.divmod_small(d);
    }
    out.negative_ = neg && !out.is_zero();
    return out;
}

BigInt BigInt::floor_div_pow10(int e) const {
    BigInt out = *this;
    bool neg = out.negative_;
    out.negative_ = false;
    bool any_rem = false;
    while (e >= 9) {
        any_rem |= out.divmod_small(1000000000u) != 0;
        e -= 9;
    }
    if (e > 0) {
        std::uint32_t d = 1;
        for (int i = 0; i < e; ++i) d *= 10;
        any_rem |= out.divmod_small(d) != 0;
    }
    if (neg) {
        out.negative_ = !out.is_zero();
        if (any_rem) out = out - BigInt(1);  // toward minus infinity
        return out;
    }
    return out;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2) return false;
    std::uint64_t mag = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
    if (negative_) return mag <= (std::uint64_t{1} << 63);
    return mag < (std::uint64_t{1} << 63);
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt does not fit int64");
    std::uint64_t mag = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
    return negative_ ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt tmp = *this;
    tmp.negative_ = false;
    std::string digits;
    while (!tmp.is_zero()) {
        std::uint32_t r = tmp.divmod_small(1000000000u);
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + r % 10));
            r /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace oitm
