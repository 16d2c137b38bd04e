#pragma once

#include <span>
#include <vector>

#include "sturan/embeddings.hpp"
#include "sturan/hypergraph.hpp"

namespace sturan {

/// A nonnegative point on the alpha-unit sphere: sum_i x_i^alpha = 1.
///
/// Construction re-normalizes vectors within 1e-6 of the sphere and rejects
/// anything further away; membership is then exact to 1e-12.
class WeightVector {
public:
    static constexpr double kNormTolerance = 1e-12;
    static constexpr double kRenormalizeTolerance = 1e-6;

    /// Throws std::invalid_argument on alpha < 1, a negative entry, or a
    /// vector farther than kRenormalizeTolerance from the sphere.
    WeightVector(std::vector<double> entries, double alpha);

    /// Scales an arbitrary nonnegative nonzero vector onto the sphere.
    static WeightVector from_raw(std::vector<double> raw, double alpha);

    /// The vector (n^{-1/alpha}, ..., n^{-1/alpha}).
    static WeightVector uniform(int n, double alpha);

    double alpha() const { return alpha_; }
    int size() const { return static_cast<int>(entries_.size()); }
    const std::vector<double>& entries() const { return entries_; }
    double operator[](int vertex) const { return entries_[vertex - 1]; }  ///< 1-based

private:
    double alpha_ = 2.0;
    std::vector<double> entries_;
};

/// The Lagrangian Q-polynomial P_{Q,H}(x) = sum_{phi in Inj(Q,H)} prod_{i in phi} x_i,
/// precomputed from the embedding list so repeated evaluation is cheap.
///
/// eval/gradient accept raw vectors of length n (no sphere constraint); the
/// polynomial itself is defined on all of R^n.
class QPolynomial {
public:
    QPolynomial(const Pattern& q, const Hypergraph& h);

    int host_size() const { return n_; }
    int pattern_size() const { return q_; }
    std::int64_t embedding_count() const;

    double eval(std::span<const double> x) const;

    /// Component i of the gradient: sum over embeddings containing i of the
    /// product of the other q-1 weights (the link expansion).
    std::vector<double> gradient(std::span<const double> x) const;

    /// eval and gradient in one pass.
    double eval_with_gradient(std::span<const double> x, std::vector<double>& grad) const;

    /// Holder upper bound on gradient component `vertex` (1-based):
    /// d_{Q,H}(i)^{(alpha-1)/alpha} (sum_{S in link(i)} x_S^alpha)^{1/alpha}.
    /// Requires alpha > 1 and nonnegative x.
    double gradient_holder_bound(std::span<const double> x, double alpha, int vertex) const;

private:
    int n_ = 0;
    int q_ = 0;
    std::vector<int> flat_;  ///< q_ consecutive 0-based host vertices per embedding
};

double eval_P(const Pattern& q, const Hypergraph& h, const WeightVector& x);

/// Classical Lagrangian polynomial r! sum_{e in H} prod_{i in e} x_i;
/// coincides with eval_P for the single-edge pattern K_r^r.
double eval_P_classical(const Hypergraph& h, const WeightVector& x);

std::vector<double> grad_P(const Pattern& q, const Hypergraph& h, const WeightVector& x);

double grad_upper_bound_holder(const Pattern& q, const Hypergraph& h, const WeightVector& x,
                               int vertex);

}  // namespace sturan
