#pragma once

#include <optional>
#include <vector>

#include "asymspace/norms.hpp"

namespace asymspace {

/// Linear subspace of R^n given by an independent basis. The zero subspace
/// (empty basis) is allowed.
class Subspace {
public:
    Subspace(std::size_t ambient_dim, std::vector<Vec> basis) : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
        for (const auto& v : basis_)
            if (v.dim() != ambient_dim_) throw InputError("Subspace: basis vector dimension mismatch");
        if (rank_of_rows(basis_) != basis_.size())
            throw InputError("Subspace: basis vectors are linearly dependent");
    }

    static Subspace full(std::size_t n) {
        std::vector<Vec> basis;
        for (std::size_t i = 0; i < n; ++i) basis.push_back(Vec::unit(n, i));
        return Subspace(n, std::move(basis));
    }
    static Subspace zero(std::size_t n) { return Subspace(n, {}); }

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    /// Ambient-by-dimension matrix whose columns are the basis vectors.
    Mat basis_matrix() const { return Mat::from_columns(basis_); }

    /// Coordinates of x in this basis, or nullopt if x lies outside.
    std::optional<Vec> coords(const Vec& x) const {
        if (x.dim() != ambient_dim_) throw InputError("Subspace::coords: dimension mismatch");
        if (basis_.empty()) return x.is_zero() ? std::optional<Vec>(Vec()) : std::nullopt;
        auto t = solve_linear(basis_matrix(), x);
        if (!t) return std::nullopt;
        Vec check(ambient_dim_);
        for (std::size_t k = 0; k < basis_.size(); ++k) check += (*t)[k] * basis_[k];
        if (check != x) return std::nullopt;
        return t;
    }

    bool contains(const Vec& x) const { return coords(x).has_value(); }

    Vec from_coords(const Vec& t) const {
        if (t.dim() != basis_.size()) throw InputError("Subspace::from_coords: dimension mismatch");
        Vec x(ambient_dim_);
        for (std::size_t k = 0; k < basis_.size(); ++k) x += t[k] * basis_[k];
        return x;
    }

private:
    std::size_t ambient_dim_;
    std::vector<Vec> basis_;
};

/// Linear operator defined on a subspace of a source space, with asymmetric
/// norms on both sides. The action is stored as the images of the domain
/// basis vectors.
class PartialOperator {
public:
    PartialOperator(Subspace domain, std::vector<Vec> images, PolyAsymNorm source_norm, PolyAsymNorm target_norm)
        : domain_(std::move(domain)),
          images_(std::move(images)),
          source_norm_(std::move(source_norm)),
          target_norm_(std::move(target_norm)) {
        if (source_norm_.dim() != domain_.ambient_dim())
            throw InputError("PartialOperator: source norm dimension mismatch");
        if (images_.size() != domain_.dimension())
            throw InputError("PartialOperator: one image per domain basis vector required");
        for (const auto& img : images_)
            if (img.dim() != target_norm_.dim()) throw InputError("PartialOperator: image dimension mismatch");
    }

    const Subspace& domain() const { return domain_; }
    const std::vector<Vec>& images() const { return images_; }
    const PolyAsymNorm& source_norm() const { return source_norm_; }
    const PolyAsymNorm& target_norm() const { return target_norm_; }
    std::size_t target_dim() const { return target_norm_.dim(); }

    Vec apply_coords(const Vec& t) const {
        if (t.dim() != images_.size()) throw InputError("PartialOperator: coordinate dimension mismatch");
        Vec y(target_dim());
        for (std::size_t k = 0; k < images_.size(); ++k) y += t[k] * images_[k];
        return y;
    }

    Vec apply(const Vec& x) const {
        auto t = domain_.coords(x);
        if (!t) throw InputError("PartialOperator: argument outside the domain subspace");
        return apply_coords(*t);
    }

    bool defined_on(const Vec& x) const { return domain_.contains(x); }

private:
    Subspace domain_;
    std::vector<Vec> images_;
    PolyAsymNorm source_norm_;
    PolyAsymNorm target_norm_;
};

/// Operator norm data: the value, or a domain direction witnessing
/// unboundedness (x with p(x) <= 0 kept feasible along the ray while q(T x)
/// grows, i.e. T is not (p,q)-continuous).
struct OperatorNormResult {
    std::optional<Rat> value;
    std::optional<Vec> unbounded_direction;  // ambient coordinates
};

/// sup{q(T x) : x in the domain, p(x) <= 1}, one exact LP per target
/// generator over the domain coordinates. The sublevel set {p <= 1} may be
/// an unbounded polyhedron, so an unbounded supremum is a first-class
/// outcome, not an error.
inline OperatorNormResult operator_norm_detailed(const PartialOperator& t) {
    const std::size_t d = t.domain().dimension();
    if (d == 0) return {Rat(0), std::nullopt};
    const auto& basis = t.domain().basis();

    Rat best(0);  // x = 0 is always admissible
    for (const auto& b_j : t.target_norm().generators()) {
        Vec obj(d);
        for (std::size_t k = 0; k < d; ++k) obj[k] = dot(b_j, t.images()[k]);
        auto lp = LinearProgram::maximize(std::move(obj));
        for (const auto& a_i : t.source_norm().generators()) {
            Vec row(d);
            for (std::size_t k = 0; k < d; ++k) row[k] = dot(a_i, basis[k]);
            lp.add_le(std::move(row), Rat(1));
        }
        auto out = solve(lp);
        if (out.status == LPOutcome::Status::unbounded) return {std::nullopt, t.domain().from_coords(*out.point)};
        if (out.status != LPOutcome::Status::optimal) throw Error("operator_norm: unit-ball program infeasible");
        best = max(best, *out.value);
    }
    return {std::move(best), std::nullopt};
}

inline std::optional<Rat> operator_norm(const PartialOperator& t) { return operator_norm_detailed(t).value; }

/// Canonical isometric embedding of (R^n, p) into (R^m, q̃): x maps to the
/// vector of generator evaluations (a_1·x, ..., a_m·x). Since p(x) >= 0 the
/// positive-part clipping in q̃ never loses the maximum, so q̃(E x) = p(x)
/// exactly.
inline PartialOperator embed_into_ellinfty(const PolyAsymNorm& p) {
    const std::size_t n = p.dim(), m = p.generators().size();
    std::vector<Vec> images;
    images.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec img(m);
        for (std::size_t i = 0; i < m; ++i) img[i] = p.generators()[i][k];
        images.push_back(std::move(img));
    }
    return PartialOperator(Subspace::full(n), std::move(images), p, norms::tilde_q(m));
}

/// Coordinate functionals of an operator into a q̃-normed space, each as an
/// operator into (R, u), together with their norms. The operator norm of T
/// is the maximum of the coordinate norms.
struct FunctionalRepresentation {
    std::vector<PartialOperator> coordinates;
    std::vector<std::optional<Rat>> norms;    // nullopt: coordinate unbounded
    std::optional<Rat> op_norm;               // nullopt: some coordinate unbounded
};

inline FunctionalRepresentation represent_operator_by_functionals(const PartialOperator& t) {
    if (!t.target_norm().is_tilde_q_form())
        throw UnsupportedTargetError("represent_operator_by_functionals: target norm is not of q̃ form");
    FunctionalRepresentation rep;
    const std::size_t k = t.target_dim(), d = t.domain().dimension();
    bool bounded = true;
    Rat best(0);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Vec> images;
        images.reserve(d);
        for (std::size_t c = 0; c < d; ++c) images.push_back(Vec{t.images()[c][i]});
        PartialOperator phi(t.domain(), std::move(images), t.source_norm(), norms::u());
        auto nrm = operator_norm(phi);
        if (!nrm)
            bounded = false;
        else
            best = max(best, *nrm);
        rep.norms.push_back(nrm);
        rep.coordinates.push_back(std::move(phi));
    }
    if (bounded) rep.op_norm = best;
    return rep;
}

}  // namespace asymspace
