#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "asymspace/rational.hpp"

namespace asymspace {

/// Vector with exact rational coordinates.
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t dim) : coords_(dim) {}
    Vec(std::initializer_list<Rat> init) : coords_(init) {}
    explicit Vec(std::vector<Rat> coords) : coords_(std::move(coords)) {}

    static Vec zero(std::size_t dim) { return Vec(dim); }
    static Vec unit(std::size_t dim, std::size_t axis) {
        Vec v(dim);
        v[axis] = 1;
        return v;
    }

    std::size_t dim() const { return coords_.size(); }
    Rat& operator[](std::size_t i) { return coords_[i]; }
    const Rat& operator[](std::size_t i) const { return coords_[i]; }

    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }

    Vec& operator+=(const Vec& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    Vec& operator*=(const Rat& s) {
        for (auto& c : coords_) c *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const Rat& s, Vec v) { return v *= s; }
    friend Vec operator*(Vec v, const Rat& s) { return v *= s; }
    Vec operator-() const {
        Vec r(*this);
        for (auto& c : r.coords_) c = -c;
        return r;
    }

    friend bool operator==(const Vec& a, const Vec& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

    friend Rat dot(const Vec& a, const Vec& b) {
        a.require_same_dim(b);
        Rat acc;
        for (std::size_t i = 0; i < a.coords_.size(); ++i) acc += a.coords_[i] * b.coords_[i];
        return acc;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ", ";
            s += coords_[i].str();
        }
        s += ")";
        return s;
    }

private:
    void require_same_dim(const Vec& o) const {
        if (coords_.size() != o.coords_.size())
            throw InputError("Vec: dimension mismatch (" + std::to_string(coords_.size()) + " vs " +
                             std::to_string(o.coords_.size()) + ")");
    }

    std::vector<Rat> coords_;
};

}  // namespace asymspace
