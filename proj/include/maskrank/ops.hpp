#pragma once

#include "maskrank/tensor.hpp"
#include "maskrank/types.hpp"

namespace maskrank {

/// Temperature softmax with max-subtraction. Output sums to 1 and is
/// invariant to adding a constant to all logits.
Vector softmax_temp(const Eigen::Ref<const Vector>& logits, double temperature);

/// Column-wise softmax_temp over a matrix of logits.
Matrix softmax_temp_columns(const Eigen::Ref<const Matrix>& logits, double temperature);

/// Row-wise softmax_temp over a matrix of logits.
Matrix softmax_temp_rows(const Eigen::Ref<const Matrix>& logits, double temperature);

/// Cosine similarity clamped to [-1, 1]. Throws DegenerateInputError when a
/// vector's norm falls below kNormEpsilon rather than silently returning 0.
double cosine_sim(const Eigen::Ref<const Vector>& a, const Eigen::Ref<const Vector>& b);

double sigmoid(double x);

/// Elementwise logistic map, values strictly in (0, 1).
Matrix sigmoid_map(const Eigen::Ref<const Matrix>& x);
Tensor sigmoid_map(const Tensor& x);

/// log(1 + exp(x)) without overflow.
double log1p_exp(double x);

}  // namespace maskrank
