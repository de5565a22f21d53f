#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace adjmin {

// Exponent vector with cached total degree. Stored densely (indexed by
// variable) so order comparisons need no lookups; accessors expose only the
// nonzero entries.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }

    static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t exp = 1) {
        Monomial m(nvars);
        m.e_[i] = exp;
        m.deg_ = exp;
        return m;
    }

    static Monomial from_pairs(std::size_t nvars,
                               const std::vector<std::pair<std::size_t, std::uint32_t>>& ps) {
        Monomial m(nvars);
        for (auto [i, e] : ps) {
            m.e_[i] += e;
            m.deg_ += e;
        }
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t exp(std::size_t i) const { return e_[i]; }
    std::uint64_t degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    std::vector<std::pair<std::size_t, std::uint32_t>> exponents() const {
        std::vector<std::pair<std::size_t, std::uint32_t>> out;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i]) out.emplace_back(i, e_[i]);
        return out;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        assert(a.nvars() == b.nvars());
        Monomial m = a;
        for (std::size_t i = 0; i < b.e_.size(); ++i) m.e_[i] += b.e_[i];
        m.deg_ += b.deg_;
        return m;
    }

    friend bool divides(const Monomial& a, const Monomial& b) {
        assert(a.nvars() == b.nvars());
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] > b.e_[i]) return false;
        return true;
    }

    // b / a, requires divides(a, b).
    friend Monomial quotient(const Monomial& b, const Monomial& a) {
        assert(divides(a, b));
        Monomial m = b;
        for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] -= a.e_[i];
        m.deg_ -= a.deg_;
        return m;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        assert(a.nvars() == b.nvars());
        Monomial m(a.nvars());
        for (std::size_t i = 0; i < a.e_.size(); ++i) {
            m.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
            m.deg_ += m.e_[i];
        }
        return m;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        assert(a.nvars() == b.nvars());
        Monomial m(a.nvars());
        for (std::size_t i = 0; i < a.e_.size(); ++i) {
            m.e_[i] = a.e_[i] < b.e_[i] ? a.e_[i] : b.e_[i];
            m.deg_ += m.e_[i];
        }
        return m;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        assert(a.nvars() == b.nvars());
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] && b.e_[i]) return false;
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    // container ordering only; term orders live in MonomialOrder
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

  private:
    std::vector<std::uint32_t> e_;
    std::uint64_t deg_ = 0;
};

}  // namespace adjmin
